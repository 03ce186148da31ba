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

#include <complex>
#include <random>
#include <vector>

#include "ftv/biguint.hpp"
#include "ftv/pauli.hpp"

using ftv::BigUint;
using ftv::Pauli;

namespace {

// Dense-matrix oracle: builds the 2^n x 2^n matrix of a Pauli (including
// its phase) and multiplies numerically.
using Mat = std::vector<std::vector<std::complex<double>>>;

Mat pauli_matrix(const Pauli &p) {
    size_t n = p.num_qubits();
    size_t dim = size_t{1} << n;
    Mat m(dim, std::vector<std::complex<double>>(dim, 0.0));
    std::complex<double> phase = 1.0;
    for (int i = 0; i < (p.phase() & 3); i++) {
        phase *= std::complex<double>(0, 1);
    }
    for (size_t col = 0; col < dim; col++) {
        size_t row = col;
        std::complex<double> amp = phase;
        for (size_t q = 0; q < n; q++) {
            bool bit = (col >> q) & 1;
            if (p.x_bit(q)) {
                row ^= size_t{1} << q;
            }
            // X^x Z^z acting on |b>: Z first contributes (-1)^b.
            if (p.z_bit(q) && bit) {
                amp *= -1.0;
            }
        }
        m[row][col] += amp;
    }
    return m;
}

Mat mat_mul(const Mat &a, const Mat &b) {
    size_t dim = a.size();
    Mat r(dim, std::vector<std::complex<double>>(dim, 0.0));
    for (size_t i = 0; i < dim; i++) {
        for (size_t k = 0; k < dim; k++) {
            if (std::abs(a[i][k]) < 1e-12) {
                continue;
            }
            for (size_t j = 0; j < dim; j++) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

bool mat_equal(const Mat &a, const Mat &b) {
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a.size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

Pauli random_pauli(std::mt19937 &rng, size_t n) {
    Pauli p(n);
    for (size_t q = 0; q < n; q++) {
        int r = static_cast<int>(rng() % 4);
        if (r & 1) {
            p.set_x(q, true);
        }
        if (r & 2) {
            p.set_z(q, true);
        }
    }
    p.set_phase(static_cast<uint8_t>(rng() % 4));
    return p;
}

}  // namespace

TEST_CASE("single-qubit products with exact phases") {
    auto X = Pauli::parse("X"), Y = Pauli::parse("Y"), Z = Pauli::parse("Z"), I = Pauli::parse("I");
    // X * Z = -i Y
    Pauli xz = X * Z;
    CHECK(xz.same_pattern(Y));
    CHECK(xz.str() == "-iY");
    // P * identity = P
    CHECK((Y * I) == Y);
    CHECK((Z * Z).is_strict_identity());
    // Y * Y = I, X * Y = iZ, Y * X = -iZ
    CHECK((Y * Y).is_strict_identity());
    CHECK((X * Y).str() == "iZ");
    CHECK((Y * X).str() == "-iZ");
}

TEST_CASE("two-qubit product X1X2 * Z1Z2 = -Y1Y2") {
    auto p = Pauli::parse("XX") * Pauli::parse("ZZ");
    CHECK(p.same_pattern(Pauli::parse("YY")));
    // (XZ)(XZ) on two sites: each site contributes -i, total -1.
    CHECK(p.str() == "-YY");
}

TEST_CASE("products agree with the dense matrix oracle") {
    std::mt19937 rng(12345);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 40; trial++) {
            Pauli a = random_pauli(rng, n), b = random_pauli(rng, n);
            Pauli c = a * b;
            CHECK(mat_equal(pauli_matrix(c), mat_mul(pauli_matrix(a), pauli_matrix(b))));
        }
    }
}

TEST_CASE("associativity and self-products") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 4;
        Pauli a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        CHECK(((a * b) * c) == (a * (b * c)));
        Pauli sq = a * a;
        CHECK(sq.is_identity());  // bits vanish; only a phase remains
        CHECK((sq.phase() & 1) == 0);
    }
}

TEST_CASE("commutation matches phase relation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng() % 4;
        Pauli a = random_pauli(rng, n), b = random_pauli(rng, n);
        Pauli ab = a * b, ba = b * a;
        bool phases_equal = ab.phase() == ba.phase();
        CHECK(a.commutes_with(b) == phases_equal);
        CHECK(ab.same_pattern(ba));
    }
}

TEST_CASE("commutes on fixed examples") {
    CHECK(Pauli::parse("XX").commutes_with(Pauli::parse("ZZ")));
    CHECK(!Pauli::parse("XI").commutes_with(Pauli::parse("ZI")));
}

TEST_CASE("weight") {
    CHECK(Pauli::identity(5).weight() == 0);
    CHECK(Pauli::parse("X8 Z10 Z11", 15).weight() == 3);
    CHECK(Pauli::parse("XXIXIIIXIIIIIIX").weight() == 5);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 6;
        Pauli a = random_pauli(rng, n), b = random_pauli(rng, n);
        CHECK((a * b).weight() <= a.weight() + b.weight());
    }
}

TEST_CASE("parse and format round trips") {
    const char *dense_cases[] = {"XXIXIIIXIIIIIIX", "IIII", "-YZ", "iXY", "ZZZZ"};
    for (const char *t : dense_cases) {
        Pauli p = Pauli::parse(t);
        CHECK(Pauli::parse(p.str()) == p);
    }
    // sparse/dense agreement
    CHECK(Pauli::parse("X2 X3", 6) == Pauli::parse("IXXIII"));
    Pauli p = Pauli::parse("X8 Z10 Z11", 15);
    CHECK(Pauli::parse(p.sparse_str(), 15) == p);
    CHECK(Pauli::parse("IIII").is_strict_identity());
    CHECK(Pauli::parse("I", 1).num_qubits() == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Pauli::parse("XQ"), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::parse("X2 X2", 6), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::parse("X9", 6), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::parse("X2 Z3"), std::invalid_argument);  // sparse needs a length
    CHECK_THROWS_AS(Pauli::parse("XX", 3), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::parse("X0", 6), std::invalid_argument);
}

TEST_CASE("length mismatch errors") {
    CHECK_THROWS_AS(Pauli::parse("XX") * Pauli::parse("XXX"), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::parse("XX").commutes_with(Pauli::parse("XXX")), std::invalid_argument);
}

TEST_CASE("big unsigned integers") {
    BigUint a(1);
    for (uint64_t f = 2; f <= 25; f++) {
        a *= f;
    }
    CHECK(a.to_string() == "15511210043330985984000000");  // 25!
    BigUint b = BigUint(1000000007) * BigUint(998244353);
    CHECK(b.to_string() == "998244359987710471");
    CHECK(BigUint(0).to_string() == "0");
    CHECK(a.to_sci_string() == "1.5511e25");
    CHECK(a.divided_by(25).to_string() == "620448401733239439360000");
    CHECK((BigUint(7) * 2).is_double_of(BigUint(7)));
    CHECK(BigUint(123456789).as_u64() == 123456789ull);
}
