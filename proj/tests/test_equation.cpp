#include <doctest.h>

#include <random>

#include "swz/equation.hpp"
#include "swz/parser.hpp"

using swz::FPoly;
using swz::MobiusMap;
using swz::Poly;
using swz::Rat;
using swz::RationalFunction;
using swz::RatSeries;
using swz::SchwarzEquation;

namespace {

RationalFunction z() { return RationalFunction::var(); }
RationalFunction rf(long long v) { return RationalFunction(Rat(v)); }

RationalFunction random_rational_map(std::mt19937_64& rng, int min_deg = 0) {
    std::uniform_int_distribution<int> dd(min_deg, 3);
    std::uniform_int_distribution<long long> cc(-5, 5);
    auto mk = [&](int deg_wanted) {
        std::vector<Rat> c(static_cast<std::size_t>(deg_wanted) + 1);
        for (auto& v : c) v = Rat(cc(rng));
        if (c.back().is_zero()) c.back() = Rat(1);
        return Poly(std::move(c));
    };
    for (;;) {
        Poly num = mk(dd(rng)), den = mk(dd(rng));
        if (den.is_zero()) continue;
        RationalFunction f(num, den);
        if (f.is_constant()) continue;
        if (std::max(f.num().degree(), f.den().degree()) < min_deg) continue;
        return f;
    }
}

MobiusMap random_constant_mobius(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> cc(-4, 4);
    for (;;) {
        Rat a(cc(rng)), b(cc(rng)), c(cc(rng)), d(cc(rng));
        if ((a * d - b * c).is_zero()) continue;
        return MobiusMap(RationalFunction(a), RationalFunction(b), RationalFunction(c),
                         RationalFunction(d));
    }
}

}  // namespace

TEST_CASE("schwarzian_rational fixtures") {
    // Moebius map of z: S = 0
    RationalFunction f = (rf(2) * z() + rf(3)) / (z() - rf(5));
    CHECK(swz::schwarzian_rational(f).is_zero());
    // S(z^2) = -3/(2 z^2)
    CHECK(swz::schwarzian_rational(z() * z()) == rf(-3) / (rf(2) * z() * z()));
    // S(z^3) = -4/z^2 (frozen from the series oracle below)
    CHECK(swz::schwarzian_rational(z().pow(3)) == rf(-4) / (z() * z()));
    {
        RatSeries zs = swz::rat_series_of_rf(z().pow(3), Rat(1), 16);
        RatSeries s = swz::schwarzian_series(zs);
        RatSeries closed = swz::rat_series_of_rf(rf(-4) / (z() * z()), Rat(1), 12);
        CHECK(s.agrees_with(closed));
    }
    CHECK_THROWS_AS(swz::schwarzian_rational(rf(7)), swz::Error);
}

TEST_CASE("schwarzian_rational moebius invariance randomized") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        RationalFunction f = random_rational_map(rng);
        MobiusMap m = random_constant_mobius(rng);
        RationalFunction den = m.c * f + m.d;
        if (den.is_zero()) continue;
        RationalFunction mf = (m.a * f + m.b) / den;
        if (mf.is_constant()) continue;
        CHECK(swz::schwarzian_rational(mf) == swz::schwarzian_rational(f));
    }
}

TEST_CASE("schwarzian_rational agrees with series at regular points") {
    std::mt19937_64 rng(888);
    for (int iter = 0; iter < 25; ++iter) {
        RationalFunction f = random_rational_map(rng);
        RationalFunction s = swz::schwarzian_rational(f);
        int points = 0;
        for (long long t = 0; points < 3 && t < 50; ++t) {
            Rat z0(t);
            if (!f.regular_at(z0) || !s.regular_at(z0)) continue;
            if (f.derivative().eval(z0).value_or(Rat(0)).is_zero()) continue;
            RatSeries fs = swz::rat_series_of_rf(f, z0, 14);
            RatSeries ss = swz::schwarzian_series(fs);
            RatSeries closed = swz::rat_series_of_rf(s, z0, 10);
            CHECK(ss.agrees_with(closed));
            ++points;
        }
        CHECK(points == 3);
    }
}

TEST_CASE("apply_mobius fixtures") {
    // eq: S(f) = 1/f^2, M: u = 1/f  =>  S(u) = u^2
    SchwarzEquation eq = swz::parse_equation("S(f) = 1/f^2");
    MobiusMap inv(rf(0), rf(1), rf(1), rf(0));
    SchwarzEquation out = swz::apply_mobius(eq, inv);
    SchwarzEquation expect = swz::parse_equation("S(f) = f^2");
    CHECK(out.equivalent_to(expect));
    // identity map preserves the equation
    SchwarzEquation same = swz::apply_mobius(eq, MobiusMap::identity());
    CHECK(same.equivalent_to(eq));
    // M then M^{-1} returns the original up to canonical form
    std::mt19937_64 rng(99);
    SchwarzEquation eq2 = swz::parse_equation("S(f)^2 = (f^3 - 2*f + 1)/(f^2 - 4)");
    for (int iter = 0; iter < 20; ++iter) {
        MobiusMap m = random_constant_mobius(rng);
        SchwarzEquation round = swz::apply_mobius(swz::apply_mobius(eq2, m), m.inverse());
        CHECK(round.equivalent_to(eq2));
    }
    // degenerate map rejected
    CHECK_THROWS_AS(MobiusMap(rf(1), rf(2), rf(2), rf(4)), swz::Error);
}

TEST_CASE("apply_mobius degree bound") {
    std::mt19937_64 rng(123);
    SchwarzEquation eq = swz::parse_equation("S(f)^2 = (f^4 + 3)/(f^2 - 1)");
    int big = std::max(eq.deg_p(), eq.deg_q());
    for (int iter = 0; iter < 30; ++iter) {
        MobiusMap m = random_constant_mobius(rng);
        SchwarzEquation out = swz::apply_mobius(eq, m);
        CHECK(std::max(out.deg_p(), out.deg_q()) <= big);
    }
}

TEST_CASE("normalize_degrees") {
    SUBCASE("deg 2 vs 0 balances with u = f/(f-1)") {
        SchwarzEquation eq = swz::parse_equation("S(f) = f^2");
        auto [out, m] = swz::normalize_degrees(eq);
        CHECK(out.balanced());
        CHECK(out.deg_p() == 2);
        // expected: S(u) = u^2/(u-1)^2
        SchwarzEquation expect = swz::parse_equation("S(f) = f^2/(f^2 - 2*f + 1)");
        CHECK(out.equivalent_to(expect));
        CHECK(m.apply(RationalFunction(Rat(0))).is_zero());  // u(0) = 0/(0-1) = 0
    }
    SUBCASE("balanced input returns identity") {
        SchwarzEquation eq = swz::parse_equation("S(f) = (f - 1)/(f - 2)");
        auto [out, m] = swz::normalize_degrees(eq);
        CHECK(m.is_identity());
        CHECK(out == eq);
    }
    SUBCASE("1/f^2 lands balanced") {
        SchwarzEquation eq = swz::parse_equation("S(f) = 1/f^2");
        auto [out, m] = swz::normalize_degrees(eq);
        CHECK(out.balanced());
        // t = 1 is the smallest usable shift: P(1) = 1 != 0, Q(1) = 1 != 0
        CHECK(m.d == -rf(1));
        SchwarzEquation expect = swz::parse_equation("S(f) = (f^2 - 2*f + 1)/f^2");
        CHECK(out.equivalent_to(expect));
    }
    SUBCASE("shift skips roots of the leading structure") {
        // f = 1 is a root of P, so t = 2 must be chosen
        SchwarzEquation eq = swz::parse_equation("S(f) = (f - 1)^2");
        auto [out, m] = swz::normalize_degrees(eq);
        CHECK(out.balanced());
        CHECK(m.d == -rf(2));
    }
}

TEST_CASE("solution correspondence through apply_mobius") {
    // tan z solves S(f) = 2; M(tan z) solves the transformed equation
    SchwarzEquation eq = swz::parse_equation("S(f) = 2");
    // tan series at 0
    int n = 18;
    std::vector<Rat> w(static_cast<std::size_t>(n), Rat(0));
    w[1] = Rat(1);
    for (int j = 1; j + 1 < n; ++j) {
        Rat s(0);
        for (int i = 0; i <= j; ++i)
            s += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j - i)];
        w[static_cast<std::size_t>(j + 1)] = s / Rat(j + 1);
    }
    RatSeries t(Rat(0), 0, std::move(w));
    CHECK(swz::residual_series(eq, t).is_zero());
    std::mt19937_64 rng(31415);
    for (int iter = 0; iter < 10; ++iter) {
        MobiusMap m = random_constant_mobius(rng);
        SchwarzEquation out = swz::apply_mobius(eq, m);
        RatSeries mt = m.apply(t);
        CHECK(swz::residual_series(out, mt).is_zero());
    }
}
