#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace brownlab {

using Position = std::uint64_t;
using Color = std::uint32_t;

// Strictly increasing sequence of naturals. Construction validates the ordering.
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<Position> elems);
    explicit FiniteSet(std::vector<Position> elems);

    // Skips validation; the caller guarantees strict increase.
    static FiniteSet from_sorted_unchecked(std::vector<Position> elems);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Position operator[](std::size_t i) const { return elems_[i]; }
    Position front() const { return elems_.front(); }
    Position back() const { return elems_.back(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    std::span<const Position> view() const { return elems_; }
    const std::vector<Position>& elements() const { return elems_; }

    bool contains(Position x) const;
    // Elements first..last inclusive (indices into the sorted enumeration).
    FiniteSet slice(std::size_t first, std::size_t last) const;
    FiniteSet shifted(Position t) const;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Position> elems_;
};

// A map from positions 0..length-1 into palette colors.
class Coloring {
public:
    Coloring() = default;
    Coloring(Color palette, std::vector<Color> values);

    std::size_t length() const { return values_.size(); }
    Color palette() const { return palette_; }
    Color operator[](std::size_t i) const { return values_[i]; }
    std::span<const Color> values() const { return values_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Color palette_ = 1;
    std::vector<Color> values_;
};

// Contiguous run H[first..last] of a set's sorted enumeration.
struct Window {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t length() const { return last - first + 1; }
    friend bool operator==(const Window&, const Window&) = default;
};

// gs(H): the largest difference between consecutive elements, 1 when |H| <= 1.
std::uint64_t gap_size(std::span<const Position> h);
inline std::uint64_t gap_size(const FiniteSet& h) { return gap_size(h.view()); }

// Every window of h in (first, last) order; |h|(|h|+1)/2 entries.
std::vector<Window> windows(const FiniteSet& h);

FiniteSet color_class(const Coloring& c, Color color);

// Length of the longest window whose gap size is at most d. Throws InvalidArgument for d == 0.
std::size_t max_run_size(const FiniteSet& h, std::uint64_t d);

struct GapSpectrumEntry {
    std::size_t max_len_at_most = 0;  // longest window with gs <= d
    std::size_t max_len_exactly = 0;  // longest window with gs == d
};

using GapSpectrum = std::map<std::uint64_t, GapSpectrumEntry>;

// Entries for d = 1..d_max. Throws InvalidArgument for d_max == 0.
GapSpectrum gap_spectrum(const FiniteSet& h, std::uint64_t d_max);

// Distinct consecutive-difference values of h, ascending, with 1 always included
// when h is nonempty.
std::vector<std::uint64_t> distinct_gaps(const FiniteSet& h);

}  // namespace brownlab
