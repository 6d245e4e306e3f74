#pragma once

#include <cstdint>

#include "brownlab/bignat.hpp"
#include "brownlab/growth.hpp"

namespace brownlab {

struct RecursionBound {
    BigNat value;
    bool used_closure = false;  // f was not nondecreasing, so its closure g >= f was used
};

// n_1 = f(1) + 2, n_{k+1} = (k+1) f(n_k) + 1; an upper bound for B_f(r).
// Throws MagnitudeOverflow if an intermediate value exceeds bit_cap bits.
RecursionBound upper_bound_seq(const GrowthFn& f, std::uint64_t r,
                               std::uint64_t bit_cap = kDefaultBitCap);

// r (2^{mr} - mr) + 1, the upper bound for B_f(r) with f(d) = m d.
BigNat ardal_bound(std::uint64_t m, std::uint64_t r);

// 2_0(n) = n, 2_{k+1}(n) = 2^{2_k(n)}. Throws MagnitudeOverflow (naming k and n)
// when the value would exceed bit_cap bits.
BigNat tower(std::uint64_t k, const BigNat& n, std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace brownlab
