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

#ifndef FTV_SYMPLECTIC_HPP
#define FTV_SYMPLECTIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ftv/biguint.hpp"
#include "ftv/circuit.hpp"
#include "ftv/code.hpp"

namespace ftv {

/// 2k x 2k bit matrix over GF(2) acting on symplectic (x|z) column vectors
/// (bits 0..k-1 the X part, k..2k-1 the Z part).  Stored as columns.
class SymplecticMatrix {
   public:
    SymplecticMatrix() : k_(0) {}
    explicit SymplecticMatrix(size_t k) : k_(k), cols_(2 * k, 0) {}

    static SymplecticMatrix identity(size_t k);
    static SymplecticMatrix h(size_t k, size_t q);
    static SymplecticMatrix s(size_t k, size_t q);
    static SymplecticMatrix g(size_t k, size_t q);  // X<->Y reflection
    static SymplecticMatrix cnot(size_t k, size_t c, size_t t);
    static SymplecticMatrix swap(size_t k, size_t a, size_t b);

    size_t k() const { return k_; }
    size_t dim() const { return 2 * k_; }
    uint32_t col(size_t j) const { return cols_[j]; }
    void set_col(size_t j, uint32_t v) { cols_[j] = v; }

    uint32_t apply(uint32_t v) const;
    SymplecticMatrix operator*(const SymplecticMatrix &o) const;  // this after o
    SymplecticMatrix inverse() const;
    bool operator==(const SymplecticMatrix &o) const { return k_ == o.k_ && cols_ == o.cols_; }
    bool operator<(const SymplecticMatrix &o) const { return cols_ < o.cols_; }
    bool is_identity() const;
    bool is_symplectic() const;

    std::string str() const;

   private:
    size_t k_;
    std::vector<uint32_t> cols_;
};

/// Symplectic inner product of two (x|z) vectors of a k-qubit layout.
bool symplectic_form(size_t k, uint32_t v, uint32_t w);

/// The induced logical-symplectic map of a code-preserving Clifford
/// circuit (phases discarded).  Throws when the circuit does not preserve
/// the code.
SymplecticMatrix circuit_to_symplectic(const StabilizerCode &code, const Circuit &c);

/// Exact order of the matrix group generated by `gens`, by a stabilizer
/// chain on the nonzero vectors of GF(2)^(2k).  Base points are picked
/// greedily (largest orbit first).
BigUint group_order(const std::vector<SymplecticMatrix> &gens);

/// Closed form 2^(k^2) * prod_{j=1..k} (4^j - 1).
BigUint clifford_mod_pauli_order(size_t k);

BigUint factorial(size_t k);
/// |GL(k,2)| = prod_{j=0..k-1} (2^k - 2^j).
BigUint gl2_order(size_t k);

std::vector<SymplecticMatrix> cnot_h_generators(size_t k);
std::vector<SymplecticMatrix> cnot_generators(size_t k);
std::vector<SymplecticMatrix> transposition_generators(size_t k);
std::vector<SymplecticMatrix> clifford_generators(size_t k);  // CNOT + H + S

/// Exhaustive breadth-first closure; oracle for small groups.
uint64_t group_order_bfs(const std::vector<SymplecticMatrix> &gens, uint64_t limit = 5'000'000);

struct SectionVdReport {
    BigUint main_order;             // <fig 5(a), sigma1..3, transversal H>
    BigUint cnot_h_6;               // <CNOT,H> on six qubits
    BigUint with_g_order;           // adding transversal G
    BigUint restricted_order;       // action on the six non-fixed logical qubits
    bool main_matches_cnot_h_6 = false;
    bool g_triples = false;
    bool restricted_is_half = false;
    std::string summary() const;
};

/// Reproduces the seven-qubit logical group-size computation: the group
/// generated by the CZ-automorphism circuit, the three permutations and
/// transversal H equals the six-qubit <CNOT,H> group, triples with
/// transversal G, and acts on the six non-fixed encoded qubits as half of
/// six-qubit <CNOT,H>.
SectionVdReport reproduce_group_size_claims();

}  // namespace ftv

#endif
