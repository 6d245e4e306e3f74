#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brownlab/core.hpp"

namespace brownlab {

// start, start + diff, ..., start + (length - 1) diff. Singletons carry diff 0.
struct Progression {
    Position start = 0;
    std::uint64_t diff = 0;
    std::size_t length = 0;

    FiniteSet elements() const;
    friend bool operator==(const Progression&, const Progression&) = default;
};

// Longest AP inside h (length 0 for empty h). Ties go to the least (start, diff).
// O(|h|^2) seeds, each extended with hash-set lookups.
Progression longest_ap(const FiniteSet& h);

struct ApReport {
    struct Entry {
        Color color = 0;
        Progression ap;
    };
    std::vector<Entry> per_color;
};

ApReport ap_report(const Coloring& c);

struct MonochromaticAp {
    Color color = 0;
    Progression ap;
};

// A monochromatic l-term AP in c with the least (start, diff), if any. Throws for l == 0.
std::optional<MonochromaticAp> ap_partition_check(const Coloring& c, std::size_t l);

// Whether h is an arithmetic progression (sets of size <= 2 always are).
std::optional<std::uint64_t> common_difference(const FiniteSet& h);

// {x[m] : m in inner} for an AP x and an AP of indices into it; the result is an AP
// whose difference is the product of the two differences.
FiniteSet ap_transfer(const FiniteSet& x, const FiniteSet& inner);

}  // namespace brownlab
