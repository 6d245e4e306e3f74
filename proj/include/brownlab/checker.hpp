#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brownlab/core.hpp"
#include "brownlab/growth.hpp"

namespace brownlab {

// A window of a color class that is "large": length > f(gap size).
struct Violation {
    Color color = 0;
    Window window;               // indices into the color class
    std::uint64_t gap_size = 1;  // gs of the window
    std::uint64_t threshold = 0; // f(gap_size)

    std::size_t length() const { return window.length(); }
    friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of checking |I| <= f(gs(I)) for every window I of a set.
struct StarReport {
    bool holds = true;
    std::optional<Violation> violating_window;
};

// One line of a per-class certificate: among maximal runs whose internal gaps are
// all <= gap, the longest has max_run elements, and max_run <= f(gap) = threshold.
struct CertTriple {
    std::uint64_t gap = 1;
    std::uint64_t max_run = 0;
    std::uint64_t threshold = 0;  // saturated at kSaturated
    friend bool operator==(const CertTriple&, const CertTriple&) = default;
};

struct ClassCertificate {
    Color color = 0;
    std::vector<CertTriple> triples;
    friend bool operator==(const ClassCertificate&, const ClassCertificate&) = default;
};

// Proof that B_f(palette) > length: every color class satisfies the window condition.
struct WitnessCertificate {
    Coloring coloring;
    GrowthFn growth = GrowthFn::identity();
    std::vector<ClassCertificate> classes;
};

// Throws PreconditionViolation unless f is flagged nondecreasing.
void require_nondecreasing(const GrowthFn& f);

// Checks every window of h against f. The reported violation (if any) is the
// lexicographically least (start, end) violating window; its color field is 0.
//
// Runs in O(|h| * #distinct gaps): for nondecreasing f it suffices that for every
// distinct gap value d, each maximal run with internal gaps <= d has length <= f(d).
StarReport satisfies_star(const FiniteSet& h, const GrowthFn& f);

// Least (color, start, end) large homogeneous window, if any.
std::optional<Violation> has_large_homogeneous(const Coloring& c, const GrowthFn& f);

// Certificate iff every color class satisfies the window condition.
std::optional<WitnessCertificate> is_witness(const Coloring& c, const GrowthFn& f);

// Recomputes every triple and the window condition from the certificate's coloring.
bool verify_certificate(const WitnessCertificate& cert);

// Per-class triples for all distinct gap values of h (plus 1).
std::vector<CertTriple> certificate_triples(const FiniteSet& h, const GrowthFn& f);

}  // namespace brownlab
