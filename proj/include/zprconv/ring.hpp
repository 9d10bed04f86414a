/*
   Copyright 2026 the zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZPRCONV_RING_HPP
#define ZPRCONV_RING_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace zprconv {

/// The finite local ring Z_{p^r}. All scalar values attached to a context
/// stay reduced into [0, p^r). The residue field F_p is the r = 1 context.
class RingContext {
   public:
    RingContext(int64_t p, int r) : p_(p), r_(r) {
        if (p < 2 || !is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
        if (r < 1) throw PreconditionError("r must be >= 1");
        modulus_ = 1;
        for (int i = 0; i < r; ++i) {
            if (modulus_ > (int64_t{1} << 31) / p) throw PreconditionError("p^r too large");
            modulus_ *= p;
        }
    }

    int64_t p() const { return p_; }
    int r() const { return r_; }
    int64_t modulus() const { return modulus_; }

    /// The residue-field context F_p.
    RingContext residue_field() const { return RingContext(p_, 1); }

    bool operator==(const RingContext& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

    int64_t reduce(int64_t v) const {
        v %= modulus_;
        return v < 0 ? v + modulus_ : v;
    }
    int64_t add(int64_t a, int64_t b) const { return reduce(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return reduce(a * b); }
    int64_t neg(int64_t a) const { return reduce(-a); }

    /// Units of Z_{p^r} are exactly the residues not divisible by p.
    bool is_unit(int64_t a) const { return reduce(a) % p_ != 0; }

    /// Inverse of a unit, by extended Euclid against p^r.
    int64_t inv(int64_t a) const {
        a = reduce(a);
        if (!is_unit(a)) throw NotUnitError("scalar " + std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
        int64_t t0 = 0, t1 = 1, r0 = modulus_, r1 = a;
        while (r1 != 0) {
            int64_t q = r0 / r1;
            int64_t tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
            tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
        }
        return reduce(t0);
    }

    static bool is_prime(int64_t n) {
        if (n < 2) return false;
        for (int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    int64_t p_;
    int r_;
    int64_t modulus_;
};

}  // namespace zprconv

#endif
