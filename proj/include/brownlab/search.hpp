#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "brownlab/bignat.hpp"
#include "brownlab/checker.hpp"
#include "brownlab/core.hpp"
#include "brownlab/growth.hpp"

namespace brownlab {

struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
};

struct SearchOptions {
    std::size_t n_cap = 64;  // longest coloring the search may build
    Budget budget;
    bool canonicalize = true;  // colors appear in first-use order
    unsigned jobs = 1;
    std::size_t split_depth = 0;  // frontier depth for jobs > 1; 0 picks a default
};

enum class OutcomeKind { Exact, Bracketed };

struct SearchOutcome {
    OutcomeKind kind = OutcomeKind::Bracketed;
    std::uint64_t value = 0;       // exact case
    std::uint64_t lower = 0;       // true value >= lower
    std::optional<BigNat> upper;   // true value <= upper
    Coloring witness;              // lexicographically least longest witness found
    std::optional<WitnessCertificate> certificate;  // Brown searches only
    std::uint64_t nodes = 0;
    std::chrono::duration<double> wall_time{};
    bool budget_exhausted = false;
    bool reached_cap = false;      // a witness of length n_cap exists
    bool used_closure = false;     // f was replaced by its monotone closure
};

// B_f(r) by depth-first search over colorings, pruning every extension that
// creates a large homogeneous window. Exact when the search completes below n_cap,
// otherwise bracketed by the longest witness and the recursion/Ardal upper bounds.
SearchOutcome brown_number(const GrowthFn& f, Color r, const SearchOptions& opts = {});

// W(r, l), pruning extensions that complete a monochromatic l-term AP.
SearchOutcome vdw_number(Color r, std::size_t l, const SearchOptions& opts = {});

enum class NoWitnessResult { NoWitness, WitnessExists, Indeterminate };

struct NoWitnessReport {
    NoWitnessResult result = NoWitnessResult::Indeterminate;
    std::uint64_t nodes = 0;
};

// Whether no r-coloring of length n satisfies the window condition for f.
NoWitnessReport confirm_no_witness(std::size_t n, const GrowthFn& f, Color r,
                                   const Budget& budget = {}, bool canonicalize = true);

// Whether no r-coloring of length n avoids monochromatic l-term APs.
NoWitnessReport confirm_no_ap_free(std::size_t n, Color r, std::size_t l,
                                   const Budget& budget = {}, bool canonicalize = true);

}  // namespace brownlab
