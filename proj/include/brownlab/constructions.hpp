#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brownlab/bignat.hpp"
#include "brownlab/core.hpp"
#include "brownlab/growth.hpp"

namespace brownlab {

// ---------------------------------------------------------------------------
// Diagonal coloring: blocks of d zeros and d ones, alternating.

Color diag(std::uint64_t d, std::uint64_t x);

Coloring diag_prefix(std::uint64_t d, std::size_t n);

// Largest homogeneous set with gaps <= d inside the first n positions of diag(d, .).
// Requires n >= 2d (InsufficientPrefix otherwise).
std::size_t diag_bound_check(std::uint64_t d, std::size_t n);

// ---------------------------------------------------------------------------
// Witness ladder C_s: C_0 = 00, C_{s+1} = (C_s D_s) repeated 2^{n_s} times, where
// D_s is C_s with every color i replaced by i + 2^s. Length n_{s+1} = 2 n_s 2^{n_s}.

inline constexpr std::uint64_t kLadderMaterializeCap = 2;

BigNat ladder_length(std::uint64_t s);

struct LadderStage {
    std::uint64_t s = 0;
    BigNat length;
    Color palette = 1;
    std::optional<Coloring> coloring;  // present when s <= kLadderMaterializeCap

    bool materialized() const { return coloring.has_value(); }
    // Color at position x, computed from the recursive structure for any s.
    Color color_at(std::uint64_t x) const;
};

LadderStage ladder(std::uint64_t s);

struct LadderClassReport {
    Color color = 0;
    std::uint64_t size = 0;
    bool size_ok = false;   // |H| = n_s / 2^s
    bool star_ok = false;   // window condition with f = exp2
    bool span_ok = false;   // n_s = max H - min H + n_0 + ... + n_{s-1} + 1
};

struct LadderReport {
    std::uint64_t s = 0;
    std::uint64_t length = 0;
    std::vector<LadderClassReport> classes;

    bool all_ok() const;
    // "color 3: span" style description of the first failure, empty when all pass.
    std::string first_failure() const;
};

// Throws MagnitudeOverflow when the stage cannot be materialized.
LadderReport ladder_verify(std::uint64_t s);

struct LadderBoundRow {
    std::uint64_t s = 0;
    BigNat n_s;
    BigNat tower_s;  // 2_s = 2_s(1)
    bool holds = false;  // n_s >= 2_s
};

// n_s >= 2_s for s <= s_max; s_max > 3 throws MagnitudeOverflow.
std::vector<LadderBoundRow> ladder_lower_bound_check(std::uint64_t s_max);

// ---------------------------------------------------------------------------
// Piecewise syndetic encoding of a coloring: consecutive blocks I_1, I_2, ... with
// |I_n| = n, internal gaps C(n) and min I_{n+1} - max I_n = n. I_1 = {0}.

struct Block {
    std::size_t first = 0;  // index of the block's first element in X
    std::size_t size = 0;
};

struct PsSequence {
    FiniteSet x;
    std::vector<Block> blocks;  // blocks[n-1] describes I_n
    // Index of the block containing element j of x (0-based block index).
    std::size_t block_of(std::size_t j) const;
};

// Generates blocks I_1..I_{block_count}; uses c[n] for 2 <= n <= block_count.
// Throws InvalidArgument if a needed c[n] is 0 or c is too short.
PsSequence ps_generate(const Coloring& c, std::size_t block_count);

struct Decomposition {
    FiniteSet y;  // X together with everything in [0, horizon) outside Z
    FiniteSet z;  // union of X + s for s < d, within [0, horizon)
};

// Splits X (a subset of [0, horizon)) as Y intersect Z with Y syndetic and Z thick.
Decomposition decompose_ps(const FiniteSet& x, std::uint64_t d, std::uint64_t horizon);

struct Extraction {
    FiniteSet z;                     // {x_j : j in Y}
    FiniteSet chosen;                // n elements of z with gaps <= e*d
    std::size_t block = 0;           // block number m (I_m) that supplied them
    bool from_first_block = true;    // I_m (first n) or I_{m+1} (last n)
    std::uint64_t gap_size = 1;      // gs(chosen)
};

// Given Y with a window of p = k + 2n indices and gaps <= e, k = 1 + 2 + ... + (2ne - 1),
// finds n elements of {x_j : j in Y} inside one block with gaps <= e*d.
// Throws InsufficientPrefix when Y or the generated prefix is too short.
Extraction extract_homogeneous_ps(std::uint64_t d, std::uint64_t e, const FiniteSet& y,
                                  const PsSequence& seq, std::size_t n);

}  // namespace brownlab
