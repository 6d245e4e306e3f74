// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "brownlab/bounds.hpp"
#include "brownlab/checker.hpp"
#include "brownlab/constructions.hpp"
#include "brownlab/oracle.hpp"
#include "brownlab/search.hpp"
#include "brownlab/vdw.hpp"

using namespace brownlab;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = "failed: " + what;
        }
    }
};

Verdict ladder_claims() {
    Verdict v;
    const std::uint64_t lengths[] = {2, 16, 2'097'152};
    for (std::uint64_t s = 0; s <= 2; ++s) {
        const auto rep = ladder_verify(s);
        v.require(rep.length == lengths[s], "n_" + std::to_string(s));
        v.require(rep.classes.size() == (std::size_t{1} << s), "class count at s=" + std::to_string(s));
        v.require(rep.all_ok(), "s=" + std::to_string(s) + " " + rep.first_failure());
    }
    if (v.ok) v.detail = "n_s = 2, 16, 2097152; all classes pass size, window and span claims";
    return v;
}

Verdict exact_brown() {
    Verdict v;
    const auto l1 = GrowthFn::linear(1);
    const auto l2 = GrowthFn::linear(2);
    const auto a = brown_number(l1, 1);
    const auto b = brown_number(l2, 1);
    const auto c = brown_number(l1, 2);
    v.require(a.kind == OutcomeKind::Exact && a.value == 2, "B_lin1(1) = 2");
    v.require(b.kind == OutcomeKind::Exact && b.value == 3, "B_lin2(1) = 3");
    v.require(oracle::brown_number(l1, 1, 10) == 2, "oracle B_lin1(1)");
    v.require(oracle::brown_number(l2, 1, 10) == 3, "oracle B_lin2(1)");
    const auto oc = oracle::brown_number(l1, 2, 12);
    v.require(c.kind == OutcomeKind::Exact && oc && c.value == *oc, "B_lin1(2) matches oracle");
    v.require(BigNat(c.value) <= ardal_bound(1, 2), "B_lin1(2) <= 5");
    if (v.ok) v.detail = "B_lin1(1)=2, B_lin2(1)=3, B_lin1(2)=" + std::to_string(c.value) + " <= 5";
    return v;
}

Verdict exp2_bracket() {
    Verdict v;
    const auto f = GrowthFn::exp2();
    const auto c1 = is_witness(*ladder(1).coloring, f);
    v.require(c1 && c1->coloring.length() == 16 && verify_certificate(*c1),
              "C_1 certifies B_exp2(2) > 16");

    SearchOptions capped;
    capped.n_cap = 16;
    const auto br = brown_number(f, 2, capped);
    v.require(br.lower >= 17 && br.upper && BigNat(br.lower) <= *br.upper &&
                  *br.upper <= BigNat(33),
              "bracket 17 <= lower <= upper <= 33");

    SearchOptions full;
    full.budget.max_time = std::chrono::minutes(10);
    const auto ex = brown_number(f, 2, full);
    v.require(ex.lower >= 17 && ex.upper && *ex.upper <= BigNat(33), "uncapped bracket");
    if (v.ok) {
        v.detail = "bracket [" + std::to_string(br.lower) + ", " + br.upper->to_string() + "]";
        if (ex.kind == OutcomeKind::Exact) {
            v.require(confirm_no_witness(ex.value, f, 2).result == NoWitnessResult::NoWitness,
                      "no witness at the exact value");
            v.detail += "; exact B_exp2(2) = " + std::to_string(ex.value);
        }
    }
    return v;
}

Verdict bound_evaluators() {
    Verdict v;
    v.require(ardal_bound(1, 1) == BigNat(2), "ardal(1,1)");
    v.require(ardal_bound(1, 2) == BigNat(5), "ardal(1,2)");
    v.require(ardal_bound(1, 3) == BigNat(16), "ardal(1,3)");
    v.require(ardal_bound(2, 2) == BigNat(25), "ardal(2,2)");
    const auto f = GrowthFn::exp2();
    v.require(upper_bound_seq(f, 1).value == BigNat(4), "n_1 for exp2");
    v.require(upper_bound_seq(f, 2).value == BigNat(33), "n_2 for exp2");
    v.require(upper_bound_seq(f, 3).value == BigNat(3) * BigNat::pow2(33) + 1, "n_3 for exp2");
    v.require(tower(0, BigNat(5)) == BigNat(5) && tower(3, BigNat(1)) == BigNat(16) &&
                  tower(2, BigNat(2)) == BigNat(16),
              "tower values");
    const auto rows = ladder_lower_bound_check(3);
    for (const auto& row : rows) v.require(row.holds, "n_s >= 2_s at s=" + std::to_string(row.s));
    v.require(rows.size() == 4, "rows for s <= 3");
    if (v.ok) v.detail = "n_3 has " + std::to_string(rows.back().n_s.bit_length()) + " bits";
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    const GrowthFn fs[] = {GrowthFn::linear(1), GrowthFn::linear(2), GrowthFn::exp2()};
    std::uint64_t checked = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            std::vector<Color> vals(n);
            for (std::size_t i = 0; i < n; ++i) vals[i] = bits >> i & 1U;
            const Coloring c(2, vals);
            for (const auto& f : fs) {
                ++checked;
                v.require(has_large_homogeneous(c, f).has_value() ==
                              oracle::has_large_homogeneous(c, f).has_value(),
                          "2-coloring disagreement");
            }
        }
    }
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_int_distribution<Color> col(0, 2);
    for (int i = 0; i < 100'000; ++i) {
        std::vector<Color> vals(len(rng));
        for (auto& x : vals) x = col(rng);
        const Coloring c(3, vals);
        for (const auto& f : fs) {
            ++checked;
            v.require(has_large_homogeneous(c, f).has_value() ==
                          oracle::has_large_homogeneous(c, f).has_value(),
                      "3-coloring disagreement");
        }
    }
    if (v.ok) v.detail = std::to_string(checked) + " (coloring, f) pairs, 0 disagreements";
    return v;
}

Verdict diagonal() {
    Verdict v;
    for (std::uint64_t d = 1; d <= 64; ++d) {
        v.require(diag_bound_check(d, 100'000) == d, "d=" + std::to_string(d));
    }
    if (v.ok) v.detail = "max size = d for every d <= 64";
    return v;
}

Verdict van_der_waerden() {
    Verdict v;
    for (std::size_t l = 1; l <= 8; ++l) v.require(vdw_number(1, l).value == l, "W(1,l) = l");
    for (Color r = 1; r <= 5; ++r) v.require(vdw_number(r, 1).value == 1, "W(r,1) = 1");
    const auto w = vdw_number(2, 3);
    v.require(w.kind == OutcomeKind::Exact, "W(2,3) exact");
    v.require(w.witness.length() == w.value - 1 && !oracle::has_monochromatic_ap(w.witness, 3),
              "W(2,3) witness");
    v.require(confirm_no_ap_free(w.value, 2, 3).result == NoWitnessResult::NoWitness,
              "no 3-AP-free 2-coloring at W(2,3)");
    v.require(oracle::vdw_number(2, 3, 12) == w.value, "oracle W(2,3)");
    if (v.ok) v.detail = "W(2,3) = " + std::to_string(w.value);
    return v;
}

Verdict constructions() {
    Verdict v;
    std::mt19937_64 rng(77);

    for (int iter = 0; iter < 100; ++iter) {
        const Color r = 2 + iter % 5;
        const std::size_t blocks = 142;  // 142 * 143 / 2 > 10^4 + 1 elements
        std::uniform_int_distribution<Color> col(1, r - 1);
        std::vector<Color> vals(blocks + 1);
        for (auto& x : vals) x = col(rng);
        const Coloring c(r, vals);
        const auto seq = ps_generate(c, blocks);
        for (std::size_t n = 1; n <= blocks; ++n) {
            const auto& b = seq.blocks[n - 1];
            v.require(b.size == n, "block size");
            for (std::size_t j = b.first + 1; j < b.first + n; ++j) {
                v.require(seq.x[j] - seq.x[j - 1] == c[n], "internal gap C(n)");
            }
            if (n > 1) v.require(seq.x[b.first] - seq.x[b.first - 1] == n - 1, "separation");
        }
        for (std::uint64_t k = 0; k <= 10'000; ++k) {
            v.require(seq.x[k] <= r * k * (k + 1) / 2, "x_k <= r k(k+1)/2");
        }
    }

    for (int iter = 0; iter < 100; ++iter) {
        const std::uint64_t d = 1 + iter % 5;
        const std::uint64_t horizon = 2000;
        std::uniform_int_distribution<Position> step(1, d);
        std::vector<Position> xs;
        for (Position p = step(rng) - 1; p < horizon;) {
            xs.push_back(p);
            p += (rng() % 3) ? step(rng) : step(rng) + 4 * d;
        }
        const FiniteSet x(xs);
        const auto dec = decompose_ps(x, d, horizon);
        for (Position q = 0; q + d < horizon; ++q) {
            v.require(x.contains(q) == (dec.y.contains(q) && dec.z.contains(q)), "X = Y meet Z");
        }
    }

    int extractions = 0;
    for (std::uint64_t d = 1; d <= 3; ++d) {
        for (std::uint64_t e = 1; e <= 3; ++e) {
            for (std::size_t n = 1; n <= 5; ++n) {
                const std::size_t len = 2 * n * e;
                const std::size_t p = (len - 1) * len / 2 + 2 * n;
                std::uniform_int_distribution<std::uint64_t> step(1, e);
                std::vector<Position> y;
                Position j = rng() % 30;
                for (Position q = 0; q < j; q += 1 + rng() % 9) y.push_back(q);
                for (std::size_t i = 0; i < p; ++i) {
                    y.push_back(j);
                    j += step(rng);
                }
                std::size_t blocks = 2;
                while (blocks * (blocks + 1) / 2 <= j) ++blocks;
                std::uniform_int_distribution<Color> col(1, static_cast<Color>(d));
                std::vector<Color> vals(blocks + 1);
                for (auto& x : vals) x = col(rng);
                const auto seq = ps_generate(Coloring(static_cast<Color>(d + 1), vals), blocks);
                const auto ex = extract_homogeneous_ps(d, e, FiniteSet(y), seq, n);
                const auto& b = seq.blocks.at(ex.block - 1);
                bool inside = ex.chosen.size() == n && ex.gap_size <= e * d;
                for (const auto z : ex.chosen) {
                    inside = inside && ex.z.contains(z) && z >= seq.x[b.first] &&
                             z <= seq.x[b.first + b.size - 1];
                }
                v.require(inside, "extraction d=" + std::to_string(d) + " e=" + std::to_string(e) +
                                      " n=" + std::to_string(n));
                ++extractions;
            }
        }
    }
    if (v.ok) v.detail = "100 ps sequences, 100 decompositions, " + std::to_string(extractions) +
                         " extractions";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Verdict()> run;
    };
    const Criterion criteria[] = {
        {1, "ladder verification s <= 2", 30, ladder_claims},
        {2, "exact Brown numbers", 5, exact_brown},
        {3, "exp2 lower-bound chain", 600, exp2_bracket},
        {4, "bound evaluators", 5, bound_evaluators},
        {5, "oracle equivalence", 120, oracle_equivalence},
        {6, "diagonal coloring bound", 10, diagonal},
        {7, "van der Waerden", 60, van_der_waerden},
        {8, "constructions", 30, constructions},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (v.ok && secs > c.limit_s) {
            v.ok = false;
            v.detail += " (over the time limit)";
        }
        failures += !v.ok;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s): %s\n", v.ok ? "PASS" : "FAIL",
                    c.id, c.name, secs, c.limit_s, v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
