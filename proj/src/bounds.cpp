#include "brownlab/bounds.hpp"

#include <string>

#include "brownlab/errors.hpp"

namespace brownlab {

RecursionBound upper_bound_seq(const GrowthFn& f, std::uint64_t r, std::uint64_t bit_cap) {
    if (r == 0) throw InvalidArgument("r must be >= 1");
    RecursionBound out;
    const GrowthFn g = f.nondecreasing() ? f : GrowthFn::closure(f);
    out.used_closure = !f.nondecreasing();

    BigNat n = g.exact(BigNat(1), bit_cap) + 2;
    for (std::uint64_t k = 1; k < r; ++k) {
        n = BigNat(k + 1) * g.exact(n, bit_cap) + 1;
        if (n.bit_length() > bit_cap) {
            throw MagnitudeOverflow("n_" + std::to_string(k + 1) + " exceeds the " +
                                    std::to_string(bit_cap) + "-bit cap");
        }
    }
    out.value = std::move(n);
    return out;
}

BigNat ardal_bound(std::uint64_t m, std::uint64_t r) {
    if (m == 0 || r == 0) throw InvalidArgument("ardal_bound needs m >= 1 and r >= 1");
    std::uint64_t mr = 0;
    if (__builtin_mul_overflow(m, r, &mr) || mr >= kDefaultBitCap) {
        throw MagnitudeOverflow("2^(m r) with m=" + std::to_string(m) + ", r=" +
                                std::to_string(r) + " exceeds the bit cap");
    }
    return BigNat(r) * (BigNat::pow2(mr) - BigNat(mr)) + 1;
}

BigNat tower(std::uint64_t k, const BigNat& n, std::uint64_t bit_cap) {
    BigNat v = n;
    for (std::uint64_t i = 0; i < k; ++i) {
        auto e = v.to_u64();
        if (!e || *e >= bit_cap) {
            throw MagnitudeOverflow("tower 2_" + std::to_string(k) + "(" + n.to_scientific() +
                                    ") exceeds the " + std::to_string(bit_cap) + "-bit cap");
        }
        v = BigNat::pow2(*e);
    }
    return v;
}

}  // namespace brownlab
