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

#include <random>

#include "ftv/code.hpp"

using namespace ftv;

TEST_CASE("even code construction") {
    auto c = StabilizerCode::even_code(4);
    CHECK(c.num_generators() == 2);
    CHECK(c.generator(0).str() == "XXXX");
    CHECK(c.generator(1).str() == "ZZZZ");
    CHECK(c.logical_x()[0].str() == "XXII");
    CHECK(c.logical_z()[0].sparse_str() == "Z2 Z4");
    CHECK(StabilizerCode::even_code(6).num_logical() == 4);
    CHECK_THROWS_AS(StabilizerCode::even_code(5), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerCode::even_code(2), std::invalid_argument);
}

TEST_CASE("hamming code parity columns are the indices in binary") {
    auto h = StabilizerCode::hamming15();
    CHECK(h.num_generators() == 8);
    CHECK(h.num_logical() == 7);
    for (size_t j = 1; j <= 15; j++) {
        unsigned col = 0;
        for (size_t row = 0; row < 4; row++) {
            if (h.generator(row).x_bit(j - 1)) {
                col |= 1u << (3 - row);
            }
        }
        CHECK(col == j);
    }
    CHECK(h.logical_x()[0].str() == "XXIXIIIXIIIIIIX");
    CHECK(h.logical_z()[0].str() == "ZZIZIIIZIIIIIIZ");
    CHECK(h.is_css());
    CHECK(h.x_type_generators().size() == 4);
}

TEST_CASE("syndromes match the published single-error examples") {
    auto h = StabilizerCode::hamming15();
    CHECK(h.z_type_syndrome(Pauli::parse("X8", 15)).str() == "1000");
    CHECK(h.x_type_syndrome(Pauli::parse("Z1", 15)).str() == "0001");
    CHECK(!h.syndrome(Pauli::identity(15)).any());
    // X on every qubit commutes with every Z generator row (even weights).
    Pauli xall(15);
    for (size_t q = 0; q < 15; q++) {
        xall.set_x(q, true);
    }
    for (size_t zi : h.z_type_generators()) {
        CHECK(xall.commutes_with(h.generator(zi)));
    }
}

TEST_CASE("syndrome linearity on random pairs") {
    auto h = StabilizerCode::hamming15();
    std::mt19937 rng(5);
    for (int t = 0; t < 100; t++) {
        Pauli a(15), b(15);
        for (size_t q = 0; q < 15; q++) {
            int r = static_cast<int>(rng() % 4);
            a.set_x(q, r & 1);
            a.set_z(q, r & 2);
            r = static_cast<int>(rng() % 4);
            b.set_x(q, r & 1);
            b.set_z(q, r & 2);
        }
        CHECK(h.syndrome(a * b).bits == (h.syndrome(a).bits ^ h.syndrome(b).bits));
    }
}

TEST_CASE("logical effect examples") {
    auto c6 = StabilizerCode::even_code(6);
    auto e = c6.logical_effect(Pauli::parse("IXXIII"));
    REQUIRE(e.kind == LogicalEffect::kLogical);
    CHECK(e.logical.str() == "XXII");  // X2X3 acts as the first two logical Xs
    auto h = StabilizerCode::hamming15();
    Pauli xall(15);
    for (size_t q = 0; q < 15; q++) {
        xall.set_x(q, true);
    }
    auto e2 = h.logical_effect(xall);
    REQUIRE(e2.kind == LogicalEffect::kLogical);
    CHECK(e2.logical.str() == "XXXXXXX");
    for (const Pauli &g : h.generators()) {
        CHECK(h.logical_effect(g).kind == LogicalEffect::kStabilizer);
    }
    CHECK(h.logical_effect(Pauli::parse("X3", 15)).kind == LogicalEffect::kDetectable);
}

TEST_CASE("logical effect invariant under stabilizer multiplication") {
    auto h = StabilizerCode::hamming15();
    std::mt19937 rng(17);
    for (int t = 0; t < 40; t++) {
        // random centralizer element: product of generators and logicals
        Pauli p = Pauli::identity(15);
        for (const Pauli &g : h.generators()) {
            if (rng() & 1) {
                p = p * g;
            }
        }
        for (size_t j = 0; j < 7; j++) {
            if (rng() & 1) {
                p = p * h.logical_x()[j];
            }
            if (rng() & 1) {
                p = p * h.logical_z()[j];
            }
        }
        auto e1 = h.logical_effect(p);
        auto e2 = h.logical_effect(p * h.generator(rng() % 8));
        CHECK(e1.kind == e2.kind);
        if (e1.kind == LogicalEffect::kLogical) {
            CHECK(e1.logical.same_pattern(e2.logical));
        }
    }
}

TEST_CASE("equivalence mod stabilizer") {
    auto h = StabilizerCode::hamming15();
    CHECK(h.equivalent_mod_stabilizer(Pauli::parse("Z4 Z5 Z6 Z7", 15), Pauli::parse("Z8 Z9 Z10 Z11", 15)));
    Pauli p = Pauli::parse("X4 Z9", 15);
    CHECK(h.equivalent_mod_stabilizer(p, p));
    Pauli x4 = Pauli::parse("X4", 15), y4chain = Pauli::parse("Y4 Z5 Z6 Z7", 15);
    CHECK(!h.equivalent_mod_stabilizer(x4, y4chain));
    CHECK(h.syndrome(x4 * y4chain).any() == false);  // same syndrome, inequivalent
}

TEST_CASE("published logical operator identities") {
    auto h = StabilizerCode::hamming15();
    struct Case {
        const char *op;
        std::vector<int> zbar;  // expected logical-Z support (1-based), empty = any nontrivial
    };
    // Z_{4,8,12} acts as logical Z on qubits {2,5,7}; Z_{4,5,6,7} as {1,2,3,4}.
    auto effect_support = [&](const char *op) {
        auto e = h.logical_effect(Pauli::parse(op, 15));
        REQUIRE(e.kind == LogicalEffect::kLogical);
        std::vector<int> sup;
        for (size_t j = 0; j < 7; j++) {
            CHECK(!e.logical.x_bit(j));
            if (e.logical.z_bit(j)) {
                sup.push_back(static_cast<int>(j) + 1);
            }
        }
        return sup;
    };
    CHECK(effect_support("Z4 Z8 Z12") == std::vector<int>{2, 5, 7});
    CHECK(effect_support("Z4 Z5 Z6 Z7") == std::vector<int>{1, 2, 3, 4});
    for (const char *op : {"Z8 Z9 Z10 Z11", "Z12 Z13 Z14 Z15", "Z1 Z6 Z7", "Z1 Z8 Z9", "Z1 Z12 Z13",
                           "Z1 Z14 Z15"}) {
        Pauli p = Pauli::parse(op, 15);
        CHECK(!h.syndrome(p).any());
        CHECK(h.logical_effect(p).kind == LogicalEffect::kLogical);
    }
}

TEST_CASE("distance by brute force") {
    Pauli witness;
    CHECK(StabilizerCode::even_code(4).distance() == 2);
    CHECK(StabilizerCode::even_code(6).distance() == 2);
    CHECK(StabilizerCode::even_code(8).distance(&witness) == 2);
    CHECK(witness.weight() == 2);
    auto h = StabilizerCode::hamming15();
    CHECK(h.distance(&witness) == 3);
    CHECK(!h.syndrome(witness).any());
    CHECK(h.logical_effect(witness).kind == LogicalEffect::kLogical);
}

TEST_CASE("distance errors") {
    // A code with no logical qubits has no distance.
    std::vector<Pauli> gens{Pauli::parse("XX"), Pauli::parse("ZZ")};
    StabilizerCode bell("bell", 2, gens, {}, {});
    CHECK_THROWS_AS(bell.distance(), std::invalid_argument);
}

TEST_CASE("codeword basis support") {
    auto c4 = StabilizerCode::even_code(4);
    auto sup = c4.codeword_basis_support({false, false});
    CHECK(sup == std::set<uint64_t>{0b0000, 0b1111});
    auto h = StabilizerCode::hamming15();
    auto sup0 = h.codeword_basis_support(std::vector<bool>(7, false));
    CHECK(sup0.size() == 16);
    // every string has even overlap with every Z-generator support
    for (uint64_t s : sup0) {
        for (size_t zi : h.z_type_generators()) {
            uint64_t mask = 0;
            for (size_t q = 0; q < 15; q++) {
                if (h.generator(zi).z_bit(q)) {
                    mask |= uint64_t{1} << q;
                }
            }
            CHECK(std::popcount(s & mask) % 2 == 0);
        }
    }
}

TEST_CASE("custom code text round trip") {
    std::string text = "stab XXXX\nstab ZZZZ\nlogx XXII\nlogx XIXI\nlogz IZIZ\nlogz IIZZ\n";
    auto c = StabilizerCode::from_text("t", text);
    CHECK(c.num_qubits() == 4);
    CHECK(c.num_logical() == 2);
    CHECK(c.distance() == 2);
}

TEST_CASE("constructor rejects broken inputs") {
    // anticommuting "generators"
    CHECK_THROWS_AS(StabilizerCode("bad", 2, {Pauli::parse("XI"), Pauli::parse("ZI")}, {Pauli::parse("IX")},
                                   {Pauli::parse("IZ")}),
                    std::invalid_argument);
    // dependent generators
    CHECK_THROWS_AS(StabilizerCode("dep", 4, {Pauli::parse("XXXX"), Pauli::parse("XXXX"), Pauli::parse("ZZZZ")},
                                   {Pauli::parse("XXII")}, {Pauli::parse("IZIZ")}),
                    std::invalid_argument);
}
