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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftv/logical.hpp"
#include "ftv/scenarios.hpp"

using namespace ftv;

namespace {

Gate mk(GateKind k, std::vector<size_t> w) {
    Gate g;
    g.kind = k;
    g.wires = std::move(w);
    return g;
}

Circuit flat_circuit(const Protocol &p) {
    Circuit c;
    for (const auto &seg : p.segments) {
        for (const auto &g : seg.circuit.gates) {
            c.gates.push_back(g);
        }
    }
    return c;
}

}  // namespace

TEST_CASE("code preservation basics") {
    auto h = StabilizerCode::hamming15();
    Circuit x1;
    x1.gates.push_back(mk(GateKind::kX, {0}));
    CHECK(!check_code_preserving(h, x1));
    Circuit idc;
    CHECK(check_code_preserving(h, idc));
    // The three permutation automorphisms preserve the code.
    for (const char *f : {"sigma1.dsl", "sigma2.dsl", "sigma3.dsl"}) {
        Protocol p = load_protocol_file(scenario_dir() + "/" + std::string(f));
        CHECK(check_code_preserving(*p.code, flat_circuit(p)));
    }
}

TEST_CASE("identity circuit satisfies the identity claim") {
    auto c6 = StabilizerCode::even_code(6);
    Circuit idc;
    CHECK(check_clifford_claim(c6, idc, LogicalCliffordClaim::identity(4)));
}

TEST_CASE("claim maps must be symplectic") {
    auto c6 = StabilizerCode::even_code(6);
    auto bad = LogicalCliffordClaim::identity(4);
    bad.z_images[0] = Pauli::single(4, 1, 'Z');  // X1 image no longer anticommutes
    Circuit idc;
    CHECK_THROWS_AS(check_clifford_claim(c6, idc, bad), std::invalid_argument);
}

TEST_CASE("diagonal claim for the unprotected encoded CZ") {
    Protocol p = load_protocol_file(scenario_dir() + "/eq4-raw.dsl");
    DiagonalClaim claim;
    claim.factors.push_back({0, 1});
    auto res = check_diagonal_claim(*p.code, flat_circuit(p), claim);
    CHECK(res.valid_logical_op);
    CHECK(res.matches);
}

TEST_CASE("dropping one CZ breaks the phase-constancy") {
    auto c6 = StabilizerCode::even_code(6);
    Circuit broken;
    broken.gates.push_back(mk(GateKind::kZ, {5}));
    broken.gates.push_back(mk(GateKind::kCz, {1, 2}));
    broken.gates.push_back(mk(GateKind::kCz, {1, 5}));
    // cz 3 6 omitted
    auto res = check_diagonal_claim(c6, broken, DiagonalClaim{}, true);
    CHECK(!res.valid_logical_op);
}

TEST_CASE("diagonal circuits fix logical Z and only add Z factors to logical X") {
    for (const char *f : {"fig4a.dsl", "fig5a.dsl", "eq14.dsl"}) {
        Protocol p = load_protocol_file(scenario_dir() + "/" + std::string(f));
        const StabilizerCode &code = *p.code;
        Circuit c = flat_circuit(p);
        for (size_t j = 0; j < code.num_logical(); j++) {
            Pauli imz = conjugate_clifford(c, code.logical_z()[j], code.num_qubits());
            auto ez = code.logical_effect(imz);
            REQUIRE(ez.kind != LogicalEffect::kDetectable);
            Pauli want = Pauli::single(code.num_logical(), j, 'Z');
            CHECK((ez.kind == LogicalEffect::kLogical && ez.logical.same_pattern(want)));
            Pauli imx = conjugate_clifford(c, code.logical_x()[j], code.num_qubits());
            auto ex = code.logical_effect(imx);
            REQUIRE(ex.kind == LogicalEffect::kLogical);
            // X image = X_j times Z factors only.
            for (size_t i = 0; i < code.num_logical(); i++) {
                CHECK(ex.logical.x_bit(i) == (i == j));
            }
        }
    }
}

TEST_CASE("permutation to CZ circuit") {
    auto h = StabilizerCode::hamming15();
    // sigma3's cycles: the 2-cycle (4,6) cancels.
    std::vector<std::vector<size_t>> s3{{0, 9, 14, 2, 7, 12}, {3, 5}, {4, 11, 10}, {6, 13, 8}};
    Circuit c = permutation_to_cz_circuit(h, s3);
    CHECK(c.gates.size() == 12);  // 6 + 3 + 3, the 2-cycle omitted
    CHECK(c.gates[0].wires == std::vector<size_t>{0, 9});
    CHECK(c.gates[5].wires == std::vector<size_t>{12, 0});
    CHECK(check_code_preserving(h, c));
    // identity permutation gives an empty circuit
    CHECK(permutation_to_cz_circuit(h, {}).gates.empty());
    // non-automorphism rejected
    CHECK_THROWS_AS(permutation_to_cz_circuit(h, {{0, 1}}), std::invalid_argument);
    // the even-code CZ circuit comes from the cycle (2,3,n)
    auto c6 = StabilizerCode::even_code(6);
    Circuit eq4cz = permutation_to_cz_circuit(c6, {{1, 2, 5}});
    CHECK(eq4cz.gates.size() == 3);
    auto res = check_diagonal_claim(c6, eq4cz, DiagonalClaim{}, true);
    CHECK(res.valid_logical_op);
}

TEST_CASE("discover mode on the block-CZ circuit reports CZ factors and preserves logical Z") {
    Protocol p = load_protocol_file(scenario_dir() + "/fig5a.dsl");
    auto res = check_diagonal_claim(*p.code, flat_circuit(p), DiagonalClaim{}, true);
    CHECK(res.valid_logical_op);
    CHECK(!res.discovered.empty());
    for (const auto &f : res.discovered) {
        CHECK(f.size() == 2);  // the effect is a product of logical CZ gates
    }
}

TEST_CASE("targeted Hadamard black circuit swaps the first logical pair") {
    auto c6 = StabilizerCode::even_code(6);
    auto claim = LogicalCliffordClaim::identity(4);
    claim.x_images[0] = Pauli::single(4, 0, 'Z');
    claim.z_images[0] = Pauli::single(4, 0, 'X');
    std::string why;
    CHECK_MESSAGE(check_clifford_claim(c6, targeted_hadamard_black_circuit(6), claim, &why), why);
    for (size_t n : {4, 8}) {
        auto c = StabilizerCode::even_code(n);
        auto cl = LogicalCliffordClaim::identity(n - 2);
        cl.x_images[0] = Pauli::single(n - 2, 0, 'Z');
        cl.z_images[0] = Pauli::single(n - 2, 0, 'X');
        CHECK(check_clifford_claim(c, targeted_hadamard_black_circuit(n), cl));
    }
}
