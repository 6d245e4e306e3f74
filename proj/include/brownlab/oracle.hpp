#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "brownlab/core.hpp"
#include "brownlab/growth.hpp"

// Brute-force reference implementations. They share nothing with the fast paths
// beyond the data types and gap_size, and exist to cross-check them.
namespace brownlab::oracle {

inline constexpr std::size_t kDefaultLengthCap = 20;

struct HomogeneousSet {
    Color color = 0;
    FiniteSet set;
};

// Enumerates every nonempty subset S of every color class and tests |S| > f(gs(S)).
// f may be arbitrary. Throws ResourceLimit when c.length() > length_cap.
std::optional<HomogeneousSet> has_large_homogeneous(const Coloring& c, const GrowthFn& f,
                                                    std::size_t length_cap = kDefaultLengthCap);

// Least n <= n_max such that every r-coloring of n has a large homogeneous set,
// found by enumerating all r^n colorings. Empty if no such n <= n_max.
std::optional<std::size_t> brown_number(const GrowthFn& f, Color r, std::size_t n_max);

// True iff c contains a monochromatic l-term AP (checked over all start/difference pairs).
bool has_monochromatic_ap(const Coloring& c, std::size_t l);

// Least n <= n_max such that every r-coloring of n contains a monochromatic l-AP.
std::optional<std::size_t> vdw_number(Color r, std::size_t l, std::size_t n_max);

}  // namespace brownlab::oracle
