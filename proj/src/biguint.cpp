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

#include "ftv/biguint.hpp"

#include <cassert>
#include <cstdio>

namespace ftv {

BigUint::BigUint(uint64_t v) {
    if (v) {
        limbs_.push_back(static_cast<uint32_t>(v));
        if (v >> 32) {
            limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }
}

uint64_t BigUint::as_u64() const {
    assert(fits_u64());
    uint64_t v = 0;
    if (limbs_.size() > 1) {
        v = static_cast<uint64_t>(limbs_[1]) << 32;
    }
    if (!limbs_.empty()) {
        v |= limbs_[0];
    }
    return v;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigUint &BigUint::operator*=(uint64_t v) {
    *this *= BigUint(v);
    return *this;
}

BigUint &BigUint::operator*=(const BigUint &o) {
    *this = *this * o;
    return *this;
}

BigUint BigUint::operator*(uint64_t v) const {
    return *this * BigUint(v);
}

BigUint BigUint::operator*(const BigUint &o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) {
        return r;
    }
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); i++) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); j++) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            k++;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::operator+(const BigUint &o) const {
    BigUint r;
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.assign(n + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; i++) {
        uint64_t cur = carry;
        if (i < limbs_.size()) {
            cur += limbs_[i];
        }
        if (i < o.limbs_.size()) {
            cur += o.limbs_[i];
        }
        r.limbs_[i] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    r.limbs_[n] = static_cast<uint32_t>(carry);
    r.trim();
    return r;
}

bool BigUint::operator<(const BigUint &o) const {
    if (limbs_.size() != o.limbs_.size()) {
        return limbs_.size() < o.limbs_.size();
    }
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) {
            return limbs_[i] < o.limbs_[i];
        }
    }
    return false;
}

bool BigUint::is_double_of(const BigUint &o) const {
    return *this == o * 2;
}

BigUint BigUint::divided_by(uint64_t v) const {
    assert(v != 0 && v <= 0xFFFFFFFFull);
    BigUint r = *this;
    uint64_t rem = 0;
    for (size_t i = r.limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | r.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(cur / v);
        rem = cur % v;
    }
    assert(rem == 0);
    r.trim();
    return r;
}

std::string BigUint::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::vector<uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) {
            work.pop_back();
        }
        char buf[16];
        if (work.empty()) {
            snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(rem));
        } else {
            snprintf(buf, sizeof(buf), "%09llu", static_cast<unsigned long long>(rem));
        }
        digits = std::string(buf) + digits;
    }
    return digits;
}

std::string BigUint::to_sci_string() const {
    std::string d = to_string();
    if (d.size() <= 5) {
        return d;
    }
    std::string mant = d.substr(0, 1) + "." + d.substr(1, 4);
    return mant + "e" + std::to_string(d.size() - 1);
}

}  // namespace ftv
