#include "brownlab/oracle.hpp"

#include <string>
#include <vector>

#include "brownlab/errors.hpp"

namespace brownlab::oracle {

std::optional<HomogeneousSet> has_large_homogeneous(const Coloring& c, const GrowthFn& f,
                                                    std::size_t length_cap) {
    if (c.length() > length_cap) {
        throw ResourceLimit("brute-force oracle limited to length " + std::to_string(length_cap) +
                            ", got " + std::to_string(c.length()));
    }
    for (Color color = 0; color < c.palette() && c.length() > 0; ++color) {
        std::vector<Position> cls;
        for (std::size_t x = 0; x < c.length(); ++x) {
            if (c[x] == color) cls.push_back(x);
        }
        const std::uint64_t subsets = std::uint64_t{1} << cls.size();
        std::vector<Position> s;
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            s.clear();
            for (std::size_t j = 0; j < cls.size(); ++j) {
                if (mask >> j & 1U) s.push_back(cls[j]);
            }
            if (s.size() > f(gap_size(s))) {
                return HomogeneousSet{color, FiniteSet::from_sorted_unchecked(s)};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Calls visit on every r-coloring of length n until it returns false.
template <class Visit>
bool for_each_coloring(Color r, std::size_t n, Visit&& visit) {
    std::vector<Color> v(n, 0);
    while (true) {
        if (!visit(Coloring(r, v))) return false;
        std::size_t i = 0;
        while (i < n && ++v[i] == r) v[i++] = 0;
        if (i == n) return true;
    }
}

}  // namespace

std::optional<std::size_t> brown_number(const GrowthFn& f, Color r, std::size_t n_max) {
    if (r == 0) throw InvalidArgument("palette r must be >= 1");
    for (std::size_t n = 0; n <= n_max; ++n) {
        const bool all_large = for_each_coloring(r, n, [&](const Coloring& c) {
            return has_large_homogeneous(c, f, n_max).has_value();
        });
        if (all_large) return n;
    }
    return std::nullopt;
}

bool has_monochromatic_ap(const Coloring& c, std::size_t l) {
    if (l == 0) return true;
    const std::size_t n = c.length();
    for (std::size_t start = 0; start < n; ++start) {
        if (l == 1) return true;
        for (std::size_t diff = 1; start + (l - 1) * diff < n; ++diff) {
            std::size_t k = 1;
            while (k < l && c[start + k * diff] == c[start]) ++k;
            if (k == l) return true;
        }
    }
    return false;
}

std::optional<std::size_t> vdw_number(Color r, std::size_t l, std::size_t n_max) {
    if (r == 0) throw InvalidArgument("palette r must be >= 1");
    for (std::size_t n = 0; n <= n_max; ++n) {
        const bool all_have = for_each_coloring(
            r, n, [&](const Coloring& c) { return has_monochromatic_ap(c, l); });
        if (all_have) return n;
    }
    return std::nullopt;
}

}  // namespace brownlab::oracle
