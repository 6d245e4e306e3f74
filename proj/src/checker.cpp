#include "brownlab/checker.hpp"

#include <algorithm>

#include "brownlab/errors.hpp"

namespace brownlab {

void require_nondecreasing(const GrowthFn& f) {
    if (!f.nondecreasing()) {
        throw PreconditionViolation("growth function '" + f.spec() +
                                    "' is not nondecreasing; use closure:" + f.spec() +
                                    " or the brute-force checker");
    }
}

namespace {

// Start index of the first maximal run with gaps <= d that is longer than limit.
std::optional<std::size_t> first_long_run(const FiniteSet& h, std::uint64_t d,
                                          std::uint64_t limit) {
    std::size_t start = 0;
    for (std::size_t i = 1; i <= h.size(); ++i) {
        if (i == h.size() || h[i] - h[i - 1] > d) {
            if (i - start > limit) return start;
            start = i;
        }
    }
    return std::nullopt;
}

}  // namespace

StarReport satisfies_star(const FiniteSet& h, const GrowthFn& f) {
    require_nondecreasing(f);
    StarReport report;
    if (h.empty()) return report;

    std::optional<std::size_t> least_start;
    for (const auto d : distinct_gaps(h)) {
        if (auto s = first_long_run(h, d, f(d))) {
            least_start = least_start ? std::min(*least_start, *s) : *s;
        }
    }
    if (!least_start) return report;

    // Shortest violating window from the least start.
    const std::size_t s = *least_start;
    std::uint64_t gs = 1;
    for (std::size_t e = s; e < h.size(); ++e) {
        if (e > s) gs = std::max(gs, h[e] - h[e - 1]);
        const auto fd = f(gs);
        if (e - s + 1 > fd) {
            report.holds = false;
            report.violating_window = Violation{0, Window{s, e}, gs, fd};
            return report;
        }
    }
    // Unreachable for nondecreasing f: the run found above contains such a window.
    throw std::logic_error("satisfies_star: violating run without violating window");
}

std::optional<Violation> has_large_homogeneous(const Coloring& c, const GrowthFn& f) {
    require_nondecreasing(f);
    for (Color color = 0; color < c.palette() && c.length() > 0; ++color) {
        auto report = satisfies_star(color_class(c, color), f);
        if (!report.holds) {
            report.violating_window->color = color;
            return report.violating_window;
        }
    }
    return std::nullopt;
}

std::vector<CertTriple> certificate_triples(const FiniteSet& h, const GrowthFn& f) {
    std::vector<CertTriple> out;
    for (const auto d : distinct_gaps(h)) out.push_back({d, max_run_size(h, d), f(d)});
    return out;
}

std::optional<WitnessCertificate> is_witness(const Coloring& c, const GrowthFn& f) {
    require_nondecreasing(f);
    WitnessCertificate cert{c, f, {}};
    for (Color color = 0; color < c.palette() && c.length() > 0; ++color) {
        const auto cls = color_class(c, color);
        if (!satisfies_star(cls, f).holds) return std::nullopt;
        cert.classes.push_back({color, certificate_triples(cls, f)});
    }
    return cert;
}

bool verify_certificate(const WitnessCertificate& cert) {
    if (!cert.growth.nondecreasing()) return false;
    for (const auto& cls : cert.classes) {
        for (const auto& t : cls.triples) {
            if (t.max_run > t.threshold) return false;
        }
    }
    const auto fresh = is_witness(cert.coloring, cert.growth);
    return fresh && fresh->classes == cert.classes;
}

}  // namespace brownlab
