#include <doctest.h>

#include <random>

#include "brownlab/checker.hpp"
#include "brownlab/errors.hpp"
#include "brownlab/io.hpp"
#include "brownlab/oracle.hpp"

using namespace brownlab;

namespace {

Coloring from_digits(const std::string& s, Color palette) {
    std::vector<Color> v;
    for (const char ch : s) v.push_back(static_cast<Color>(ch - '0'));
    return Coloring(palette, v);
}

const std::string kC1 = "0011001100110011";

// Least (start, end) window I of h with |I| > f(gs(I)), by checking every window.
std::optional<Window> least_violation_by_windows(const FiniteSet& h, const GrowthFn& f) {
    for (const auto& w : windows(h)) {
        if (w.length() > f(gap_size(h.slice(w.first, w.last)))) return w;
    }
    return std::nullopt;
}

Coloring random_coloring(std::mt19937_64& rng, Color palette, std::size_t length) {
    std::uniform_int_distribution<Color> col(0, palette - 1);
    std::vector<Color> v(length);
    for (auto& x : v) x = col(rng);
    return Coloring(palette, v);
}

}  // namespace

TEST_CASE("satisfies_star examples") {
    const auto r = satisfies_star(FiniteSet{0, 1, 2}, GrowthFn::linear(1));
    CHECK_FALSE(r.holds);
    REQUIRE(r.violating_window);
    CHECK(r.violating_window->gap_size == 1);
    CHECK(r.violating_window->window == Window{0, 1});

    CHECK(satisfies_star(color_class(from_digits(kC1, 2), 0), GrowthFn::exp2()).holds);

    const FiniteSet h{0, 2, 4};
    CHECK(satisfies_star(h, GrowthFn::linear(2)).holds);
    CHECK_FALSE(least_violation_by_windows(h, GrowthFn::linear(2)));
    CHECK(satisfies_star(FiniteSet{}, GrowthFn::linear(1)).holds);
}

TEST_CASE("satisfies_star rejects a non-monotone f") {
    CHECK_THROWS_AS(satisfies_star(FiniteSet{0}, GrowthFn::table({3, 1}, TailRule::Constant)),
                    PreconditionViolation);
}

TEST_CASE("satisfies_star reports the least violating window") {
    std::mt19937_64 rng(21);
    const std::vector<GrowthFn> fs{GrowthFn::linear(1), GrowthFn::linear(2), GrowthFn::exp2(),
                                   GrowthFn::table({0, 1, 1, 2, 4}, TailRule::Constant)};
    std::uniform_int_distribution<Position> gap(1, 5);
    for (int iter = 0; iter < 2000; ++iter) {
        std::vector<Position> v;
        Position x = 0;
        for (int i = iter % 14; i > 0; --i) {
            x += gap(rng);
            v.push_back(x);
        }
        const FiniteSet h(v);
        for (const auto& f : fs) {
            const auto want = least_violation_by_windows(h, f);
            const auto got = satisfies_star(h, f);
            REQUIRE(got.holds == !want.has_value());
            if (want) {
                CHECK(got.violating_window->window == *want);
                CHECK(got.violating_window->gap_size == gap_size(h.slice(want->first, want->last)));
                CHECK(got.violating_window->threshold == f(got.violating_window->gap_size));
            }
        }
    }
}

TEST_CASE("has_large_homogeneous examples") {
    const auto v = has_large_homogeneous(from_digits("000", 1), GrowthFn::linear(1));
    REQUIRE(v);
    CHECK(v->color == 0);
    CHECK(v->window == Window{0, 1});

    CHECK_FALSE(has_large_homogeneous(from_digits(kC1, 2), GrowthFn::exp2()));

    const auto c = from_digits("01010", 2);
    const auto w = has_large_homogeneous(c, GrowthFn::linear(1));
    REQUIRE(w);
    CHECK(w->color == 0);
    CHECK(color_class(c, 0).slice(w->window.first, w->window.last) == FiniteSet{0, 2, 4});
    CHECK(w->length() == 3);
    CHECK(w->threshold == 2);

    const auto o = oracle::has_large_homogeneous(c, GrowthFn::linear(1));
    REQUIRE(o);
    CHECK(o->color == 0);
}

TEST_CASE("brute-force oracle examples") {
    CHECK_FALSE(oracle::has_large_homogeneous(from_digits("0011", 2), GrowthFn::exp2()));
    CHECK_FALSE(oracle::has_large_homogeneous(Coloring(2, {}), GrowthFn::linear(1)));
    CHECK_THROWS_AS(oracle::has_large_homogeneous(Coloring(2, std::vector<Color>(21, 0)),
                                                  GrowthFn::linear(1)),
                    ResourceLimit);
}

TEST_CASE("fast check agrees with subset enumeration") {
    const std::vector<GrowthFn> fs{GrowthFn::linear(1), GrowthFn::linear(2), GrowthFn::exp2()};
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            std::vector<Color> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = bits >> i & 1U;
            const Coloring c(2, v);
            for (const auto& f : fs) {
                REQUIRE(has_large_homogeneous(c, f).has_value() ==
                        oracle::has_large_homogeneous(c, f).has_value());
            }
        }
    }
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 3000; ++iter) {
        const auto c = random_coloring(rng, 3, 1 + iter % 12);
        for (const auto& f : fs) {
            REQUIRE(has_large_homogeneous(c, f).has_value() ==
                    oracle::has_large_homogeneous(c, f).has_value());
        }
    }
}

TEST_CASE("the window condition is shift invariant") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<Position> gap(1, 6);
    std::uniform_int_distribution<Position> shift(1, 1'000'000);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<Position> v;
        Position x = 0;
        for (int i = iter % 20; i > 0; --i) v.push_back(x += gap(rng));
        const FiniteSet h(v);
        const auto t = shift(rng);
        for (const auto& f : {GrowthFn::linear(1), GrowthFn::exp2()}) {
            const auto a = satisfies_star(h, f);
            const auto b = satisfies_star(h.shifted(t), f);
            REQUIRE(a.holds == b.holds);
            if (!a.holds) CHECK(a.violating_window->window == b.violating_window->window);
        }
    }
}

TEST_CASE("witnesses stay witnesses under a pointwise larger f") {
    std::mt19937_64 rng(8);
    const auto small = GrowthFn::linear(1);
    const auto large = GrowthFn::linear(2);
    int witnesses = 0;
    for (int iter = 0; iter < 3000; ++iter) {
        const auto c = random_coloring(rng, 2, 1 + iter % 10);
        if (is_witness(c, small)) {
            ++witnesses;
            CHECK(is_witness(c, large));
            CHECK(is_witness(c, GrowthFn::exp2()));
        }
    }
    CHECK(witnesses > 0);
}

TEST_CASE("is_witness examples and certificates") {
    const auto c0 = is_witness(from_digits("00", 1), GrowthFn::exp2());
    REQUIRE(c0);
    REQUIRE(c0->classes.size() == 1);
    CHECK(c0->classes[0].triples == std::vector<CertTriple>{{1, 2, 2}});

    const auto c = is_witness(from_digits("0101", 2), GrowthFn::linear(1));
    REQUIRE(c);
    CHECK(c->classes[0].triples == std::vector<CertTriple>{{1, 1, 1}, {2, 2, 2}});
    CHECK(c->classes[1].triples == std::vector<CertTriple>{{1, 1, 1}, {2, 2, 2}});
    CHECK(verify_certificate(*c));

    CHECK_FALSE(is_witness(from_digits("000", 1), GrowthFn::linear(1)));

    const auto c1 = is_witness(from_digits(kC1, 2), GrowthFn::exp2());
    REQUIRE(c1);
    CHECK(c1->coloring.length() == 16);
    CHECK(verify_certificate(*c1));
}

TEST_CASE("tampered certificates are rejected") {
    auto cert = *is_witness(from_digits(kC1, 2), GrowthFn::exp2());
    auto bad = cert;
    bad.classes[0].triples[0].max_run += 1;
    CHECK_FALSE(verify_certificate(bad));
    bad = cert;
    bad.growth = GrowthFn::linear(1);
    CHECK_FALSE(verify_certificate(bad));
    bad = cert;
    bad.classes.pop_back();
    CHECK_FALSE(verify_certificate(bad));
    bad = cert;
    std::vector<Color> v(cert.coloring.values().begin(), cert.coloring.values().end());
    v[2] = 0;
    bad.coloring = Coloring(2, v);
    CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("certificates round-trip through JSON") {
    std::mt19937_64 rng(13);
    int seen = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const auto c = random_coloring(rng, 3, 1 + iter % 15);
        const auto cert = is_witness(c, GrowthFn::linear(2));
        if (!cert) continue;
        ++seen;
        const auto doc = certificate_to_json(*cert);
        const auto back = certificate_from_json(nlohmann::json::parse(doc.dump()));
        CHECK(back.coloring == cert->coloring);
        CHECK(back.growth == cert->growth);
        CHECK(back.classes == cert->classes);
        CHECK(verify_certificate(back));
        CHECK(certificate_to_json(back).dump() == doc.dump());
    }
    CHECK(seen > 0);
}
