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

#include "ftv/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>

namespace ftv {

Pauli Pauli::single(size_t n, size_t qubit, char letter) {
    Pauli p(n);
    assert(qubit < n);
    switch (letter) {
        case 'I':
            break;
        case 'X':
            p.set_x(qubit, true);
            break;
        case 'Z':
            p.set_z(qubit, true);
            break;
        case 'Y':
            p.set_x(qubit, true);
            p.set_z(qubit, true);
            p.phase_ = 1;  // Y = i XZ
            break;
        default:
            throw std::invalid_argument("bad Pauli letter");
    }
    return p;
}

void Pauli::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        x_[q >> 6] |= m;
    } else {
        x_[q >> 6] &= ~m;
    }
}

void Pauli::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        z_[q >> 6] |= m;
    } else {
        z_[q >> 6] &= ~m;
    }
}

char Pauli::letter(size_t q) const {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    if (z) {
        return 'Z';
    }
    return 'I';
}

bool Pauli::is_identity() const {
    for (auto w : x_) {
        if (w) {
            return false;
        }
    }
    for (auto w : z_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool Pauli::is_strict_identity() const {
    return phase_ == 0 && is_identity();
}

size_t Pauli::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        w += std::popcount(x_[i] | z_[i]);
    }
    return w;
}

size_t Pauli::x_weight() const {
    size_t w = 0;
    for (auto v : x_) {
        w += std::popcount(v);
    }
    return w;
}

size_t Pauli::z_weight() const {
    size_t w = 0;
    for (auto v : z_) {
        w += std::popcount(v);
    }
    return w;
}

Pauli Pauli::operator*(const Pauli &o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    Pauli r(n_);
    // (X^a Z^b)(X^c Z^d) = (-1)^(b.c) X^(a^c) Z^(b^d), phases add.
    size_t anti = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        anti += std::popcount(z_[i] & o.x_[i]);
        r.x_[i] = x_[i] ^ o.x_[i];
        r.z_[i] = z_[i] ^ o.z_[i];
    }
    r.phase_ = static_cast<uint8_t>((phase_ + o.phase_ + 2 * anti) & 3);
    return r;
}

bool Pauli::commutes_with(const Pauli &o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    size_t anti = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        anti += std::popcount(x_[i] & o.z_[i]);
        anti += std::popcount(z_[i] & o.x_[i]);
    }
    return (anti & 1) == 0;
}

Pauli Pauli::restricted_to(const std::vector<size_t> &qubits) const {
    Pauli r(qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) {
        r.set_x(i, x_bit(qubits[i]));
        r.set_z(i, z_bit(qubits[i]));
    }
    return r;
}

void Pauli::clear_site(size_t q) {
    set_x(q, false);
    set_z(q, false);
}

Pauli Pauli::permuted(const std::vector<size_t> &map) const {
    Pauli r(n_);
    r.phase_ = phase_;
    for (size_t q = 0; q < n_; q++) {
        r.set_x(map[q], x_bit(q));
        r.set_z(map[q], z_bit(q));
    }
    return r;
}

std::string Pauli::str() const {
    // Report phase relative to letters, so "Y" prints as Y not iXZ.
    int disp = phase_;
    std::string body;
    body.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        char c = letter(q);
        if (c == 'Y') {
            disp = (disp + 3) & 3;  // Y carries one i internally
        }
        body.push_back(c);
    }
    static const char *prefix[4] = {"", "i", "-", "-i"};
    return std::string(prefix[disp & 3]) + body;
}

std::string Pauli::pattern_str() const {
    std::string body;
    body.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        body.push_back(letter(q));
    }
    return body;
}

std::string Pauli::sparse_str() const {
    int disp = phase_;
    std::ostringstream out;
    bool any = false;
    for (size_t q = 0; q < n_; q++) {
        char c = letter(q);
        if (c == 'Y') {
            disp = (disp + 3) & 3;
        }
        if (c != 'I') {
            if (any) {
                out << ' ';
            }
            out << c << (q + 1);
            any = true;
        }
    }
    static const char *prefix[4] = {"", "i", "-", "-i"};
    std::string body = any ? out.str() : "I";
    return std::string(prefix[disp & 3]) + body;
}

Pauli Pauli::parse(const std::string &text, size_t n) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
    };
    skip_ws();
    int phase = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') {
            phase = 2;
        }
        i++;
    }
    if (i < text.size() && (text[i] == 'i' || text[i] == 'j')) {
        phase = (phase + 1) & 3;
        i++;
    }
    skip_ws();
    size_t body = i;
    bool sparse = false;
    for (size_t j = body; j < text.size(); j++) {
        if (std::isdigit(static_cast<unsigned char>(text[j]))) {
            sparse = true;
            break;
        }
    }
    Pauli p;
    if (!sparse) {
        std::string letters;
        for (size_t j = body; j < text.size(); j++) {
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[j])));
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw std::invalid_argument("bad character in Pauli text");
            }
            letters.push_back(c);
        }
        if (letters.empty()) {
            throw std::invalid_argument("empty Pauli text");
        }
        if (n != 0 && letters.size() != n) {
            throw std::invalid_argument("Pauli text length mismatch");
        }
        p = Pauli(letters.size());
        for (size_t q = 0; q < letters.size(); q++) {
            if (letters[q] == 'X' || letters[q] == 'Y') {
                p.set_x(q, true);
            }
            if (letters[q] == 'Z' || letters[q] == 'Y') {
                p.set_z(q, true);
            }
            if (letters[q] == 'Y') {
                phase = (phase + 1) & 3;
            }
        }
    } else {
        if (n == 0) {
            throw std::invalid_argument("sparse Pauli text needs an explicit length");
        }
        p = Pauli(n);
        std::vector<bool> seen(n, false);
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size()) {
                break;
            }
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
            if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') {
                throw std::invalid_argument("bad character in sparse Pauli text");
            }
            i++;
            if (c == 'I') {
                continue;  // bare I allowed for the identity
            }
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                i++;
            }
            if (start == i) {
                throw std::invalid_argument("sparse Pauli site missing index");
            }
            unsigned long idx = std::stoul(text.substr(start, i - start));
            if (idx < 1 || idx > n) {
                throw std::invalid_argument("sparse Pauli index out of range");
            }
            size_t q = idx - 1;
            if (seen[q]) {
                throw std::invalid_argument("duplicate index in sparse Pauli text");
            }
            seen[q] = true;
            if (c == 'X' || c == 'Y') {
                p.set_x(q, true);
            }
            if (c == 'Z' || c == 'Y') {
                p.set_z(q, true);
            }
            if (c == 'Y') {
                phase = (phase + 1) & 3;
            }
        }
    }
    p.phase_ = static_cast<uint8_t>(phase & 3);
    return p;
}

bool Pauli::operator<(const Pauli &o) const {
    if (n_ != o.n_) {
        return n_ < o.n_;
    }
    for (size_t q = 0; q < n_; q++) {
        char a = letter(q), b = o.letter(q);
        if (a != b) {
            return a < b;
        }
    }
    return phase_ < o.phase_;
}

}  // namespace ftv
