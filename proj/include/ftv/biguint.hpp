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

#ifndef FTV_BIGUINT_HPP
#define FTV_BIGUINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ftv {

/// Unsigned arbitrary-precision integer. Group orders overflow 64 bits
/// (the six-qubit <CNOT,H> group is ~1e20), so exact order arithmetic
/// lives here. Little-endian 32-bit limbs.
class BigUint {
   public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint one() { return BigUint(1); }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t as_u64() const;

    BigUint &operator*=(uint64_t v);
    BigUint &operator*=(const BigUint &o);
    BigUint operator*(const BigUint &o) const;
    BigUint operator*(uint64_t v) const;
    BigUint operator+(const BigUint &o) const;

    bool operator==(const BigUint &o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint &o) const { return !(*this == o); }
    bool operator<(const BigUint &o) const;

    /// True iff this == 2 * o.
    bool is_double_of(const BigUint &o) const;
    /// Exact division by a small divisor; asserts zero remainder.
    BigUint divided_by(uint64_t v) const;

    std::string to_string() const;
    /// "1.0006e20"-style approximation, 5 significant digits.
    std::string to_sci_string() const;

   private:
    void trim();
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros
};

}  // namespace ftv

#endif
