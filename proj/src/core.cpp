#include "brownlab/core.hpp"

#include <algorithm>
#include <string>

#include "brownlab/errors.hpp"

namespace brownlab {

FiniteSet::FiniteSet(std::initializer_list<Position> elems)
    : FiniteSet(std::vector<Position>(elems)) {}

FiniteSet::FiniteSet(std::vector<Position> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i - 1] >= elems_[i]) {
            throw InvalidArgument("FiniteSet elements must be strictly increasing (index " +
                                  std::to_string(i) + ")");
        }
    }
}

FiniteSet FiniteSet::from_sorted_unchecked(std::vector<Position> elems) {
    FiniteSet s;
    s.elems_ = std::move(elems);
    return s;
}

bool FiniteSet::contains(Position x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

FiniteSet FiniteSet::slice(std::size_t first, std::size_t last) const {
    if (first > last || last >= elems_.size()) throw InvalidArgument("slice out of range");
    return from_sorted_unchecked(
        std::vector<Position>(elems_.begin() + static_cast<std::ptrdiff_t>(first),
                              elems_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
}

FiniteSet FiniteSet::shifted(Position t) const {
    std::vector<Position> out(elems_);
    for (auto& x : out) x += t;
    return from_sorted_unchecked(std::move(out));
}

Coloring::Coloring(Color palette, std::vector<Color> values)
    : palette_(palette), values_(std::move(values)) {
    if (palette_ == 0 && !values_.empty()) {
        throw InvalidArgument("a nonempty coloring needs palette >= 1");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] >= palette_) {
            throw InvalidArgument("color " + std::to_string(values_[i]) + " at position " +
                                  std::to_string(i) + " is outside palette " +
                                  std::to_string(palette_));
        }
    }
}

std::uint64_t gap_size(std::span<const Position> h) {
    std::uint64_t gs = 1;
    for (std::size_t i = 1; i < h.size(); ++i) gs = std::max(gs, h[i] - h[i - 1]);
    return gs;
}

std::vector<Window> windows(const FiniteSet& h) {
    std::vector<Window> out;
    out.reserve(h.size() * (h.size() + 1) / 2);
    for (std::size_t first = 0; first < h.size(); ++first) {
        for (std::size_t last = first; last < h.size(); ++last) out.push_back({first, last});
    }
    return out;
}

FiniteSet color_class(const Coloring& c, Color color) {
    if (color >= c.palette()) {
        throw InvalidArgument("color " + std::to_string(color) + " outside palette " +
                              std::to_string(c.palette()));
    }
    std::vector<Position> out;
    for (std::size_t x = 0; x < c.length(); ++x) {
        if (c[x] == color) out.push_back(x);
    }
    return FiniteSet::from_sorted_unchecked(std::move(out));
}

std::size_t max_run_size(const FiniteSet& h, std::uint64_t d) {
    if (d == 0) throw InvalidArgument("gap bound d must be >= 1");
    if (h.empty()) return 0;
    std::size_t best = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i < h.size(); ++i) {
        run = (h[i] - h[i - 1] <= d) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

GapSpectrum gap_spectrum(const FiniteSet& h, std::uint64_t d_max) {
    if (d_max == 0) throw InvalidArgument("d_max must be >= 1");
    GapSpectrum out;
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        GapSpectrumEntry e;
        if (!h.empty()) {
            // Maximal runs with all gaps <= d. A window with gs exactly d is
            // longest when it is a whole maximal run that contains a gap equal to d.
            std::size_t run = 1;
            bool hits = (d == 1);  // singletons have gs 1
            auto close = [&] {
                e.max_len_at_most = std::max(e.max_len_at_most, run);
                if (hits) e.max_len_exactly = std::max(e.max_len_exactly, run);
            };
            for (std::size_t i = 1; i < h.size(); ++i) {
                const auto g = h[i] - h[i - 1];
                if (g <= d) {
                    ++run;
                    hits = hits || g == d;
                } else {
                    close();
                    run = 1;
                    hits = (d == 1);
                }
            }
            close();
        }
        out.emplace(d, e);
    }
    return out;
}

std::vector<std::uint64_t> distinct_gaps(const FiniteSet& h) {
    std::vector<std::uint64_t> out;
    if (h.empty()) return out;
    out.push_back(1);
    for (std::size_t i = 1; i < h.size(); ++i) out.push_back(h[i] - h[i - 1]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace brownlab
