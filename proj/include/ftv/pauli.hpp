// Copyright 2026 The ftverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTV_PAULI_HPP
#define FTV_PAULI_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftv {

/// An n-qubit Pauli operator stored as a pair of packed bit vectors plus a
/// phase exponent.  The represented operator is
///
///     i^phase * prod_j X_j^{x[j]} Z_j^{z[j]}
///
/// so a site with x=z=1 is XZ = -iY, and a plain Y is encoded with one unit
/// of phase.  Qubit indices are 0-based here; all text I/O is 1-based.
class Pauli {
   public:
    Pauli() : n_(0), phase_(0) {}
    explicit Pauli(size_t n) : n_(n), phase_(0), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

    static Pauli identity(size_t n) { return Pauli(n); }
    /// Single-site operator from a letter in {I,X,Y,Z}.
    static Pauli single(size_t n, size_t qubit, char letter);

    size_t num_qubits() const { return n_; }
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t p) { phase_ = p & 3; }

    bool x_bit(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    /// Letter at a site, ignoring phase: I, X, Y, or Z.
    char letter(size_t q) const;

    bool is_identity() const;         // bits all zero, any phase
    bool is_strict_identity() const;  // bits all zero and phase 0
    size_t weight() const;
    size_t x_weight() const;  // sites with an X component
    size_t z_weight() const;  // sites with a Z component

    /// Group product with exact phase tracking mod 4.
    Pauli operator*(const Pauli &o) const;

    bool commutes_with(const Pauli &o) const;

    /// Bitwise equality including phase.
    bool operator==(const Pauli &o) const { return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_; }
    bool operator!=(const Pauli &o) const { return !(*this == o); }
    /// Equality of the unsigned operator (phase ignored).
    bool same_pattern(const Pauli &o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }

    /// Restrict to a subset of qubits, in the listed order.
    Pauli restricted_to(const std::vector<size_t> &qubits) const;
    /// Clear both bits of one site.
    void clear_site(size_t q);
    /// Apply a relabeling: bit at qubit q moves to map[q].
    Pauli permuted(const std::vector<size_t> &map) const;

    /// Dense text like "+XXIZ" (sign prefix omitted when +1).
    std::string str() const;
    /// Letters only, phase ignored.
    std::string pattern_str() const;
    /// Sparse text like "X8 Z10 Z11" ("I" for the identity).
    std::string sparse_str() const;

    /// Parse dense ("XXIZ", "-iYZ") or sparse ("X8 Z10 Z11") text.  Sparse
    /// text requires the ambient length; dense text must match it when
    /// nonzero.  Throws std::invalid_argument on malformed input.
    static Pauli parse(const std::string &text, size_t n = 0);

    bool operator<(const Pauli &o) const;  // lexicographic, for ordered sets

    const std::vector<uint64_t> &x_words() const { return x_; }
    const std::vector<uint64_t> &z_words() const { return z_; }

   private:
    size_t n_;
    uint8_t phase_;
    std::vector<uint64_t> x_, z_;
};

}  // namespace ftv

#endif
