#include "brownlab/constructions.hpp"

#include <algorithm>

#include "brownlab/bounds.hpp"
#include "brownlab/checker.hpp"
#include "brownlab/errors.hpp"

namespace brownlab {

Color diag(std::uint64_t d, std::uint64_t x) {
    if (d == 0) throw InvalidArgument("diag needs d >= 1");
    return static_cast<Color>((x / d) % 2);
}

Coloring diag_prefix(std::uint64_t d, std::size_t n) {
    std::vector<Color> v(n);
    for (std::size_t x = 0; x < n; ++x) v[x] = diag(d, x);
    return Coloring(2, std::move(v));
}

std::size_t diag_bound_check(std::uint64_t d, std::size_t n) {
    if (d == 0) throw InvalidArgument("diag_bound_check needs d >= 1");
    if (n < 2 * d) {
        throw InsufficientPrefix("prefix of length " + std::to_string(n) +
                                 " is shorter than 2d = " + std::to_string(2 * d));
    }
    const Coloring c = diag_prefix(d, n);
    std::size_t best = 0;
    for (Color i = 0; i < 2; ++i) best = std::max(best, max_run_size(color_class(c, i), d));
    return best;
}

// ---------------------------------------------------------------------------

BigNat ladder_length(std::uint64_t s) {
    BigNat n = 2;
    for (std::uint64_t k = 0; k < s; ++k) {
        const auto e = n.to_u64();
        if (!e || *e >= kDefaultBitCap) {
            throw MagnitudeOverflow("ladder length n_" + std::to_string(s) +
                                    " is too large to represent (n_" + std::to_string(k + 1) +
                                    " = 2 n_" + std::to_string(k) + " 2^{n_" +
                                    std::to_string(k) + "} with n_" + std::to_string(k) +
                                    " = " + n.to_scientific() + ")");
        }
        n = BigNat(2) * n * BigNat::pow2(*e);
    }
    return n;
}

namespace {

// lengths[k] = n_k when it fits 64 bits.
Color ladder_color(std::uint64_t s, std::uint64_t x,
                   const std::vector<std::optional<std::uint64_t>>& lengths) {
    Color offset = 0;
    while (s > 0) {
        const auto prev = lengths[s - 1];
        if (prev) {
            const std::uint64_t q = x / *prev;
            if (q % 2 == 1) offset += Color{1} << (s - 1);
            x %= *prev;
        }
        --s;
    }
    return offset;
}

}  // namespace

Color LadderStage::color_at(std::uint64_t x) const {
    if (BigNat(x) >= length) {
        throw InvalidArgument("position " + std::to_string(x) + " outside ladder stage " +
                              std::to_string(s));
    }
    std::vector<std::optional<std::uint64_t>> lengths;
    for (std::uint64_t k = 0; k < s; ++k) {
        // Stages past the first that overflows 64 bits are never needed: x < 2^64.
        if (!lengths.empty() && !lengths.back()) {
            lengths.push_back(std::nullopt);
            continue;
        }
        lengths.push_back(ladder_length(k).to_u64());
    }
    return ladder_color(s, x, lengths);
}

LadderStage ladder(std::uint64_t s) {
    LadderStage st;
    st.s = s;
    st.length = ladder_length(s);
    if (s >= 32) throw MagnitudeOverflow("ladder palette 2^s overflows for s=" + std::to_string(s));
    st.palette = Color{1} << s;
    if (s > kLadderMaterializeCap) return st;

    std::vector<Color> cur{0, 0};
    for (std::uint64_t k = 0; k < s; ++k) {
        const std::uint64_t repeats = std::uint64_t{1} << cur.size();
        const Color shift = Color{1} << k;
        std::vector<Color> next;
        next.reserve(2 * cur.size() * repeats);
        for (std::uint64_t rep = 0; rep < repeats; ++rep) {
            next.insert(next.end(), cur.begin(), cur.end());
            for (const auto c : cur) next.push_back(c + shift);
        }
        cur = std::move(next);
    }
    st.coloring = Coloring(st.palette, std::move(cur));
    return st;
}

bool LadderReport::all_ok() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const auto& c) { return c.size_ok && c.star_ok && c.span_ok; });
}

std::string LadderReport::first_failure() const {
    for (const auto& c : classes) {
        const std::string who = "color " + std::to_string(c.color) + ": ";
        if (!c.size_ok) return who + "class size";
        if (!c.star_ok) return who + "window condition";
        if (!c.span_ok) return who + "span identity";
    }
    return {};
}

LadderReport ladder_verify(std::uint64_t s) {
    if (s > kLadderMaterializeCap) {
        throw MagnitudeOverflow("ladder stage " + std::to_string(s) +
                                " cannot be materialized (cap is s=" +
                                std::to_string(kLadderMaterializeCap) + ")");
    }
    const LadderStage st = ladder(s);
    const Coloring& c = *st.coloring;
    const std::uint64_t n_s = c.length();
    std::uint64_t earlier = 0;  // n_0 + ... + n_{s-1}
    for (std::uint64_t k = 0; k < s; ++k) earlier += *ladder_length(k).to_u64();

    LadderReport rep;
    rep.s = s;
    rep.length = n_s;
    const GrowthFn f = GrowthFn::exp2();
    for (Color i = 0; i < st.palette; ++i) {
        const FiniteSet h = color_class(c, i);
        LadderClassReport cr;
        cr.color = i;
        cr.size = h.size();
        cr.size_ok = h.size() * st.palette == n_s;
        cr.star_ok = satisfies_star(h, f).holds;
        cr.span_ok = !h.empty() && h.back() - h.front() + earlier + 1 == n_s;
        rep.classes.push_back(cr);
    }
    return rep;
}

std::vector<LadderBoundRow> ladder_lower_bound_check(std::uint64_t s_max) {
    if (s_max > 3) {
        throw MagnitudeOverflow("n_" + std::to_string(s_max) +
                                " is too large to compare exactly (limit s <= 3)");
    }
    std::vector<LadderBoundRow> rows;
    for (std::uint64_t s = 0; s <= s_max; ++s) {
        LadderBoundRow row;
        row.s = s;
        row.n_s = ladder_length(s);
        row.tower_s = tower(s, BigNat(1));
        row.holds = row.n_s >= row.tower_s;
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::size_t PsSequence::block_of(std::size_t j) const {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), j,
                               [](std::size_t v, const Block& b) { return v < b.first; });
    if (it == blocks.begin() || j >= x.size()) {
        throw InvalidArgument("index " + std::to_string(j) + " outside the generated prefix");
    }
    return static_cast<std::size_t>(std::distance(blocks.begin(), it)) - 1;
}

PsSequence ps_generate(const Coloring& c, std::size_t block_count) {
    PsSequence seq;
    if (block_count == 0) return seq;
    if (c.length() <= block_count && block_count >= 2) {
        throw InvalidArgument("coloring of length " + std::to_string(c.length()) +
                              " does not define C(" + std::to_string(block_count) + ")");
    }
    std::vector<Position> xs{0};
    seq.blocks.push_back({0, 1});
    for (std::size_t n = 2; n <= block_count; ++n) {
        const auto gap = c[n];
        if (gap == 0) throw InvalidArgument("C(" + std::to_string(n) + ") must be >= 1");
        seq.blocks.push_back({xs.size(), n});
        xs.push_back(xs.back() + (n - 1));
        for (std::size_t i = 1; i < n; ++i) xs.push_back(xs.back() + gap);
    }
    seq.x = FiniteSet::from_sorted_unchecked(std::move(xs));
    return seq;
}

Decomposition decompose_ps(const FiniteSet& x, std::uint64_t d, std::uint64_t horizon) {
    if (d == 0) throw InvalidArgument("decompose_ps needs d >= 1");
    if (!x.empty() && x.back() >= horizon) {
        throw InvalidArgument("X must lie inside [0, horizon)");
    }
    std::vector<char> in_z(horizon, 0);
    for (const auto v : x) {
        for (std::uint64_t s = 0; s < d && v + s < horizon; ++s) in_z[v + s] = 1;
    }
    std::vector<Position> y;
    std::vector<Position> z;
    for (std::uint64_t p = 0; p < horizon; ++p) {
        if (in_z[p]) z.push_back(p);
        if (!in_z[p] || x.contains(p)) y.push_back(p);
    }
    return {FiniteSet::from_sorted_unchecked(std::move(y)),
            FiniteSet::from_sorted_unchecked(std::move(z))};
}

Extraction extract_homogeneous_ps(std::uint64_t d, std::uint64_t e, const FiniteSet& y,
                                  const PsSequence& seq, std::size_t n) {
    if (d == 0 || e == 0 || n == 0) {
        throw InvalidArgument("extract_homogeneous_ps needs d, e, n >= 1");
    }
    for (const auto& b : seq.blocks) {
        for (std::size_t j = b.first + 1; j < b.first + b.size; ++j) {
            if (seq.x[j] - seq.x[j - 1] > d) {
                throw InvalidArgument("block internal gap exceeds d = " + std::to_string(d));
            }
        }
    }

    std::vector<Position> indices;
    std::vector<Position> zs;
    for (const auto j : y) {
        if (j >= seq.x.size()) break;
        indices.push_back(j);
        zs.push_back(seq.x[j]);
    }

    const std::size_t len = 2 * n * e;
    const std::size_t k = (len - 1) * len / 2;
    const std::size_t p = k + 2 * n;

    // First p consecutive indices of Y with gaps <= e.
    std::optional<std::size_t> start;
    for (std::size_t i = 0, run_start = 0; i < indices.size(); ++i) {
        if (i > 0 && indices[i] - indices[i - 1] > e) run_start = i;
        if (i - run_start + 1 == p) {
            start = run_start;
            break;
        }
    }
    if (!start) {
        throw InsufficientPrefix("index set has no " + std::to_string(p) +
                                 "-element run with gaps <= " + std::to_string(e) +
                                 " inside the generated prefix");
    }
    const auto a_begin = *start + k;  // A = i_k .. i_{p-1}, 2n indices
    const std::size_t m = seq.block_of(indices[a_begin]);

    Extraction out;
    out.z = FiniteSet::from_sorted_unchecked(std::move(zs));
    std::size_t first = a_begin;
    if (seq.block_of(indices[a_begin + n - 1]) == m) {
        out.block = m + 1;
        out.from_first_block = true;
    } else {
        first = a_begin + n;
        if (seq.block_of(indices[first]) != m + 1 ||
            seq.block_of(indices[first + n - 1]) != m + 1) {
            throw std::logic_error("extracted indices straddle more than two blocks");
        }
        out.block = m + 2;
        out.from_first_block = false;
    }
    std::vector<Position> chosen;
    for (std::size_t i = first; i < first + n; ++i) chosen.push_back(seq.x[indices[i]]);
    out.chosen = FiniteSet::from_sorted_unchecked(std::move(chosen));
    out.gap_size = gap_size(out.chosen);
    return out;
}

}  // namespace brownlab
