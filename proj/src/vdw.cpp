#include "brownlab/vdw.hpp"

#include <string>
#include <unordered_set>

#include "brownlab/errors.hpp"

namespace brownlab {

FiniteSet Progression::elements() const {
    std::vector<Position> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(start + i * diff);
    return FiniteSet::from_sorted_unchecked(std::move(out));
}

Progression longest_ap(const FiniteSet& h) {
    if (h.empty()) return {};
    Progression best{h[0], 0, 1};
    if (h.size() == 1) return best;

    const std::unordered_set<Position> members(h.begin(), h.end());
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const std::uint64_t diff = h[j] - h[i];
            // Remaining room cannot beat the best; larger j only widens diff.
            if (h[i] + best.length * diff > h.back()) break;
            if (h[i] >= diff && members.count(h[i] - diff)) continue;  // not a seed
            std::size_t len = 2;
            while (members.count(h[i] + len * diff)) ++len;
            if (len > best.length) best = {h[i], diff, len};
        }
    }
    return best;
}

ApReport ap_report(const Coloring& c) {
    ApReport rep;
    for (Color i = 0; i < c.palette() && c.length() > 0; ++i) {
        rep.per_color.push_back({i, longest_ap(color_class(c, i))});
    }
    return rep;
}

std::optional<MonochromaticAp> ap_partition_check(const Coloring& c, std::size_t l) {
    if (l == 0) throw InvalidArgument("AP length l must be >= 1");
    const std::size_t n = c.length();
    for (std::size_t start = 0; start < n; ++start) {
        if (l == 1) return MonochromaticAp{c[start], {start, 0, 1}};
        for (std::size_t diff = 1; start + (l - 1) * diff < n; ++diff) {
            std::size_t k = 1;
            while (k < l && c[start + k * diff] == c[start]) ++k;
            if (k == l) return MonochromaticAp{c[start], {start, diff, l}};
        }
    }
    return std::nullopt;
}

std::optional<std::uint64_t> common_difference(const FiniteSet& h) {
    if (h.size() < 2) return 0;
    const std::uint64_t diff = h[1] - h[0];
    for (std::size_t i = 2; i < h.size(); ++i) {
        if (h[i] - h[i - 1] != diff) return std::nullopt;
    }
    return diff;
}

FiniteSet ap_transfer(const FiniteSet& x, const FiniteSet& inner) {
    if (!common_difference(x)) throw InvalidArgument("host set is not an arithmetic progression");
    if (!common_difference(inner)) {
        throw InvalidArgument("inner positions are not an arithmetic progression");
    }
    std::vector<Position> out;
    for (const auto m : inner) {
        if (m >= x.size()) {
            throw InvalidArgument("index " + std::to_string(m) + " out of range for host of size " +
                                  std::to_string(x.size()));
        }
        out.push_back(x[m]);
    }
    return FiniteSet::from_sorted_unchecked(std::move(out));
}

}  // namespace brownlab
