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

#include "ftv/code.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ftv {

std::string Syndrome::str() const {
    std::string s;
    for (size_t i = 0; i < len; i++) {
        s.push_back(bit(i) ? '1' : '0');
    }
    return s;
}

StabilizerCode::StabilizerCode(std::string name, size_t n, std::vector<Pauli> generators,
                               std::vector<Pauli> logical_x, std::vector<Pauli> logical_z)
    : name_(std::move(name)), n_(n), gens_(std::move(generators)), log_x_(std::move(logical_x)),
      log_z_(std::move(logical_z)) {
    if (gens_.size() > 32) {
        throw std::invalid_argument("too many stabilizer generators");
    }
    css_ = true;
    for (size_t i = 0; i < gens_.size(); i++) {
        bool pure_x = gens_[i].z_weight() == 0;
        bool pure_z = gens_[i].x_weight() == 0;
        if (pure_x && !gens_[i].is_identity()) {
            x_type_.push_back(i);
        } else if (pure_z && !gens_[i].is_identity()) {
            z_type_.push_back(i);
        } else {
            css_ = false;
        }
    }
    check_invariants();
    build_solver();
}

void StabilizerCode::check_invariants() const {
    size_t k = log_x_.size();
    if (log_z_.size() != k || n_ != gens_.size() + k) {
        throw std::invalid_argument("generator/logical counts inconsistent with n");
    }
    for (size_t i = 0; i < gens_.size(); i++) {
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!gens_[i].commutes_with(gens_[j])) {
                throw std::invalid_argument("stabilizer generators do not commute");
            }
        }
        for (size_t j = 0; j < k; j++) {
            if (!gens_[i].commutes_with(log_x_[j]) || !gens_[i].commutes_with(log_z_[j])) {
                throw std::invalid_argument("generators must commute with logicals");
            }
        }
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            bool anti_xz = !log_x_[i].commutes_with(log_z_[j]);
            if (anti_xz != (i == j)) {
                throw std::invalid_argument("logical pair anticommutation pattern broken");
            }
            if (j > i && (!log_x_[i].commutes_with(log_x_[j]) || !log_z_[i].commutes_with(log_z_[j]))) {
                throw std::invalid_argument("logical operators of different qubits must commute");
            }
        }
    }
}

static std::vector<uint64_t> symplectic_vec(const Pauli &p) {
    size_t n = p.num_qubits();
    size_t words = (2 * n + 63) / 64;
    std::vector<uint64_t> v(words, 0);
    for (size_t q = 0; q < n; q++) {
        if (p.x_bit(q)) {
            v[q >> 6] |= uint64_t{1} << (q & 63);
        }
        if (p.z_bit(q)) {
            size_t b = n + q;
            v[b >> 6] |= uint64_t{1} << (b & 63);
        }
    }
    return v;
}

void StabilizerCode::build_solver() {
    size_t rows = gens_.size() + log_x_.size() + log_z_.size();
    size_t cols = 2 * n_;
    std::vector<SolverRow> work(rows);
    size_t combo_words = (rows + 63) / 64;
    for (size_t i = 0; i < rows; i++) {
        const Pauli &p = i < gens_.size()             ? gens_[i]
                         : i < gens_.size() + log_x_.size() ? log_x_[i - gens_.size()]
                                                            : log_z_[i - gens_.size() - log_x_.size()];
        work[i].vec = symplectic_vec(p);
        work[i].combo.assign(combo_words, 0);
        work[i].combo[i >> 6] |= uint64_t{1} << (i & 63);
    }
    // Gaussian elimination with lowest-index pivoting.
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t pick = rows;
        for (size_t i = r; i < rows; i++) {
            if ((work[i].vec[c >> 6] >> (c & 63)) & 1) {
                pick = i;
                break;
            }
        }
        if (pick == rows) {
            continue;
        }
        std::swap(work[r], work[pick]);
        for (size_t i = 0; i < rows; i++) {
            if (i != r && ((work[i].vec[c >> 6] >> (c & 63)) & 1)) {
                for (size_t w = 0; w < work[i].vec.size(); w++) {
                    work[i].vec[w] ^= work[r].vec[w];
                }
                for (size_t w = 0; w < combo_words; w++) {
                    work[i].combo[w] ^= work[r].combo[w];
                }
            }
        }
        pivot_of_row_.push_back(static_cast<int>(c));
        r++;
    }
    if (r != rows) {
        throw std::invalid_argument("stabilizer generators or logicals are dependent");
    }
    work.resize(r);
    solver_ = std::move(work);
}

Syndrome StabilizerCode::syndrome(const Pauli &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("syndrome: operator length mismatch");
    }
    Syndrome s;
    s.len = gens_.size();
    for (size_t i = 0; i < gens_.size(); i++) {
        if (!p.commutes_with(gens_[i])) {
            s.bits |= uint32_t{1} << i;
        }
    }
    return s;
}

Syndrome StabilizerCode::z_type_syndrome(const Pauli &p) const {
    Syndrome s;
    s.len = z_type_.size();
    for (size_t i = 0; i < z_type_.size(); i++) {
        if (!p.commutes_with(gens_[z_type_[i]])) {
            s.bits |= uint32_t{1} << i;
        }
    }
    return s;
}

Syndrome StabilizerCode::x_type_syndrome(const Pauli &p) const {
    Syndrome s;
    s.len = x_type_.size();
    for (size_t i = 0; i < x_type_.size(); i++) {
        if (!p.commutes_with(gens_[x_type_[i]])) {
            s.bits |= uint32_t{1} << i;
        }
    }
    return s;
}

LogicalEffect StabilizerCode::logical_effect(const Pauli &p) const {
    LogicalEffect e;
    if (syndrome(p).any()) {
        e.kind = LogicalEffect::kDetectable;
        return e;
    }
    // Zero syndrome: p is in the centralizer, so it decomposes over
    // <generators, logicals>.  Reduce its symplectic vector.
    std::vector<uint64_t> v = symplectic_vec(p);
    size_t rows = solver_.size();
    size_t combo_words = (rows + 63) / 64;
    std::vector<uint64_t> combo(combo_words, 0);
    for (size_t r = 0; r < rows; r++) {
        size_t c = static_cast<size_t>(pivot_of_row_[r]);
        if ((v[c >> 6] >> (c & 63)) & 1) {
            for (size_t w = 0; w < v.size(); w++) {
                v[w] ^= solver_[r].vec[w];
            }
            for (size_t w = 0; w < combo_words; w++) {
                combo[w] ^= solver_[r].combo[w];
            }
        }
    }
    for (auto w : v) {
        assert(w == 0);
        (void)w;
    }
    size_t k = log_x_.size();
    Pauli logical(k);
    bool nontrivial = false;
    Pauli rebuilt = Pauli::identity(n_);
    for (size_t i = 0; i < rows; i++) {
        if (!((combo[i >> 6] >> (i & 63)) & 1)) {
            continue;
        }
        if (i < gens_.size()) {
            rebuilt = rebuilt * gens_[i];
        } else if (i < gens_.size() + k) {
            size_t j = i - gens_.size();
            logical.set_x(j, true);
            nontrivial = true;
            rebuilt = rebuilt * log_x_[j];
        } else {
            size_t j = i - gens_.size() - k;
            if (logical.x_bit(j)) {
                // normalize site to Y with its phase unit
                logical.set_phase((logical.phase() + 1) & 3);
            }
            logical.set_z(j, true);
            nontrivial = true;
            rebuilt = rebuilt * log_z_[j];
        }
    }
    // Sign of p relative to the canonical product (mod 2; both are
    // Hermitian so phases differ by +-1).
    int diff = (static_cast<int>(p.phase()) - static_cast<int>(rebuilt.phase())
                + static_cast<int>(logical.phase())) & 3;
    e.sign = (diff & 2) != 0;
    e.kind = nontrivial ? LogicalEffect::kLogical : LogicalEffect::kStabilizer;
    e.logical = logical;
    return e;
}

bool StabilizerCode::equivalent_mod_stabilizer(const Pauli &p, const Pauli &q) const {
    LogicalEffect e = logical_effect(p * q);
    return e.kind == LogicalEffect::kStabilizer;
}

size_t StabilizerCode::distance(Pauli *witness) const {
    if (n_ > 20) {
        throw std::invalid_argument("distance enumeration budget exceeded (n > 20)");
    }
    if (log_x_.empty()) {
        throw std::invalid_argument("distance undefined: code has no logical qubits");
    }
    static const char letters[3] = {'X', 'Y', 'Z'};
    std::vector<size_t> support;
    for (size_t w = 1; w <= n_; w++) {
        // enumerate supports of size w in lexicographic order
        support.assign(w, 0);
        for (size_t i = 0; i < w; i++) {
            support[i] = i;
        }
        while (true) {
            size_t combos = 1;
            for (size_t i = 0; i < w; i++) {
                combos *= 3;
            }
            for (size_t c = 0; c < combos; c++) {
                Pauli p = Pauli::identity(n_);
                size_t t = c;
                for (size_t i = 0; i < w; i++) {
                    p = p * Pauli::single(n_, support[i], letters[t % 3]);
                    t /= 3;
                }
                if (syndrome(p).any()) {
                    continue;
                }
                LogicalEffect e = logical_effect(p);
                if (e.kind == LogicalEffect::kLogical) {
                    if (witness) {
                        *witness = p;
                    }
                    return w;
                }
            }
            // next combination
            size_t i = w;
            while (i-- > 0) {
                if (support[i] != i + n_ - w) {
                    support[i]++;
                    for (size_t j = i + 1; j < w; j++) {
                        support[j] = support[j - 1] + 1;
                    }
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) {
                break;
            }
        }
    }
    throw std::logic_error("no logical operator found");
}

std::set<uint64_t> StabilizerCode::codeword_basis_support(const std::vector<bool> &logical_x_pattern) const {
    if (!css_) {
        throw std::invalid_argument("codeword_basis_support requires a CSS code");
    }
    if (logical_x_pattern.size() != log_x_.size()) {
        throw std::invalid_argument("logical pattern length mismatch");
    }
    if (n_ > 64) {
        throw std::invalid_argument("codeword support limited to n <= 64");
    }
    auto x_mask = [&](const Pauli &p) {
        uint64_t m = 0;
        for (size_t q = 0; q < n_; q++) {
            if (p.x_bit(q)) {
                m |= uint64_t{1} << q;
            }
        }
        return m;
    };
    uint64_t base = 0;
    for (size_t j = 0; j < logical_x_pattern.size(); j++) {
        if (logical_x_pattern[j]) {
            if (log_x_[j].z_weight() != 0) {
                throw std::invalid_argument("codeword support needs X-type logical representatives");
            }
            base ^= x_mask(log_x_[j]);
        }
    }
    std::set<uint64_t> out;
    size_t m = x_type_.size();
    for (uint64_t sel = 0; sel < (uint64_t{1} << m); sel++) {
        uint64_t s = base;
        for (size_t i = 0; i < m; i++) {
            if ((sel >> i) & 1) {
                s ^= x_mask(gens_[x_type_[i]]);
            }
        }
        out.insert(s);
    }
    return out;
}

bool StabilizerCode::is_automorphism(const std::vector<size_t> &map) const {
    for (const Pauli &g : gens_) {
        if (syndrome(g.permuted(map)).any()) {
            return false;
        }
        if (logical_effect(g.permuted(map)).kind != LogicalEffect::kStabilizer) {
            return false;
        }
    }
    return true;
}

StabilizerCode StabilizerCode::even_code(size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("even code requires even n >= 4");
    }
    Pauli xs(n), zs(n);
    for (size_t q = 0; q < n; q++) {
        xs.set_x(q, true);
        zs.set_z(q, true);
    }
    size_t k = n - 2;
    std::vector<Pauli> lx, lz;
    for (size_t j = 1; j <= k; j++) {
        Pauli x(n), z(n);
        x.set_x(0, true);
        x.set_x(j, true);  // X_1 X_{j+1}
        z.set_z(j, true);
        z.set_z(n - 1, true);  // Z_{j+1} Z_n
        lx.push_back(x);
        lz.push_back(z);
    }
    return StabilizerCode("even" + std::to_string(n), n, {xs, zs}, lx, lz);
}

StabilizerCode StabilizerCode::hamming15() {
    const size_t n = 15;
    // Parity rows: column j (1-based) is j in binary, top row = bit 3.
    std::vector<Pauli> gens;
    for (int bit = 3; bit >= 0; bit--) {
        Pauli g(n);
        for (size_t j = 1; j <= n; j++) {
            if ((j >> bit) & 1) {
                g.set_x(j - 1, true);
            }
        }
        gens.push_back(g);
    }
    for (int bit = 3; bit >= 0; bit--) {
        Pauli g(n);
        for (size_t j = 1; j <= n; j++) {
            if ((j >> bit) & 1) {
                g.set_z(j - 1, true);
            }
        }
        gens.push_back(g);
    }
    static const int kLogicalSupports[7][5] = {
        {1, 2, 4, 8, 15}, {1, 2, 5, 10, 12}, {1, 2, 6, 11, 14}, {1, 2, 7, 9, 13},
        {1, 4, 6, 9, 10}, {1, 4, 7, 12, 14}, {1, 8, 10, 13, 14},
    };
    std::vector<Pauli> lx, lz;
    for (auto &row : kLogicalSupports) {
        Pauli x(n), z(n);
        for (int q : row) {
            x.set_x(q - 1, true);
            z.set_z(q - 1, true);
        }
        lx.push_back(x);
        lz.push_back(z);
    }
    return StabilizerCode("hamming15", n, gens, lx, lz);
}

StabilizerCode StabilizerCode::from_text(const std::string &name, const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Pauli> gens, lx, lz;
    size_t n = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw, body;
        ls >> kw;
        if (kw.empty() || kw[0] == '#') {
            continue;
        }
        ls >> body;
        for (auto &c : kw) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        Pauli p = Pauli::parse(body, n);
        if (n == 0) {
            n = p.num_qubits();
        }
        if (kw == "stab") {
            gens.push_back(p);
        } else if (kw == "logx") {
            lx.push_back(p);
        } else if (kw == "logz") {
            lz.push_back(p);
        } else {
            throw std::invalid_argument("unknown code line keyword: " + kw);
        }
    }
    return StabilizerCode(name, n, gens, lx, lz);
}

}  // namespace ftv
