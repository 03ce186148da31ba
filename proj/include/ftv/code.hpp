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

#ifndef FTV_CODE_HPP
#define FTV_CODE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ftv/pauli.hpp"

namespace ftv {

/// One bit per stabilizer generator, in generator order.
struct Syndrome {
    uint32_t bits = 0;
    size_t len = 0;

    bool any() const { return bits != 0; }
    bool bit(size_t i) const { return (bits >> i) & 1; }
    bool operator==(const Syndrome &o) const { return bits == o.bits && len == o.len; }
    bool operator<(const Syndrome &o) const { return bits < o.bits; }
    std::string str() const;
};

struct LogicalEffect {
    enum Kind { kDetectable, kStabilizer, kLogical };
    Kind kind = kStabilizer;
    Pauli logical;    // k-qubit operator, valid when kind == kLogical
    bool sign = false;  // true when the decomposition carries a -1

    bool is_trivial() const { return kind == kStabilizer; }
};

/// Stabilizer code with an ordered generator list and a fixed logical basis.
/// Generator order is the construction order (X-type rows first for CSS
/// codes), so syndrome bits are reproducible. Immutable after construction.
class StabilizerCode {
   public:
    StabilizerCode(std::string name, size_t n, std::vector<Pauli> generators, std::vector<Pauli> logical_x,
                   std::vector<Pauli> logical_z);

    /// The [[n, n-2, 2]] code for even n: stabilizers X..X and Z..Z,
    /// logicals Xbar_j = X_1 X_{j+1}, Zbar_j = Z_{j+1} Z_n.
    static StabilizerCode even_code(size_t n);
    /// The [[15,7,3]] Hamming code: four X and four Z parity rows whose
    /// columns are 1..15 in binary, logicals from seven weight-5 strings.
    static StabilizerCode hamming15();
    /// Parse "stab <dense>" / "logx <dense>" / "logz <dense>" lines.
    static StabilizerCode from_text(const std::string &name, const std::string &text);

    const std::string &name() const { return name_; }
    size_t num_qubits() const { return n_; }
    size_t num_generators() const { return gens_.size(); }
    size_t num_logical() const { return log_x_.size(); }
    const std::vector<Pauli> &generators() const { return gens_; }
    const Pauli &generator(size_t i) const { return gens_[i]; }
    const std::vector<Pauli> &logical_x() const { return log_x_; }
    const std::vector<Pauli> &logical_z() const { return log_z_; }

    bool is_css() const { return css_; }
    /// Indices of pure-X-type / pure-Z-type generators (CSS codes).
    const std::vector<size_t> &x_type_generators() const { return x_type_; }
    const std::vector<size_t> &z_type_generators() const { return z_type_; }

    Syndrome syndrome(const Pauli &p) const;
    /// Syndrome restricted to Z-type generators (detects X components).
    Syndrome z_type_syndrome(const Pauli &p) const;
    Syndrome x_type_syndrome(const Pauli &p) const;

    LogicalEffect logical_effect(const Pauli &p) const;
    bool equivalent_mod_stabilizer(const Pauli &p, const Pauli &q) const;

    /// Brute-force distance by weight-ordered enumeration.  Returns the
    /// minimum weight of an undetectable nontrivial logical operator and
    /// a witness.  Requires n <= 20.
    size_t distance(Pauli *witness = nullptr) const;

    /// Computational basis strings (bit j of the result = qubit j+1) of the
    /// codeword selected by an X-logical pattern; CSS codes only.
    std::set<uint64_t> codeword_basis_support(const std::vector<bool> &logical_x_pattern) const;

    /// Is the qubit permutation (0-based map) an automorphism of the
    /// stabilizer group?
    bool is_automorphism(const std::vector<size_t> &map) const;

   private:
    void check_invariants() const;
    void build_solver();

    std::string name_;
    size_t n_;
    std::vector<Pauli> gens_, log_x_, log_z_;
    bool css_ = false;
    std::vector<size_t> x_type_, z_type_;

    // Row-reduced solver for decomposition over <generators, logicals>:
    // rows are symplectic vectors (x|z) of gens + logX + logZ.
    struct SolverRow {
        std::vector<uint64_t> vec;  // 2n bits
        std::vector<uint64_t> combo;  // which original rows were xored in
    };
    std::vector<SolverRow> solver_;
    std::vector<int> pivot_of_row_;
};

}  // namespace ftv

#endif
