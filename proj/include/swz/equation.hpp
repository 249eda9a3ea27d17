// The equation model S(f,z)^m = P(z,f)/Q(z,f), the closed-form Schwarzian of
// rational functions, and the Moebius transformation engine.
#pragma once

#include <string>
#include <utility>

#include "swz/laurent.hpp"

namespace swz {

struct MobiusMap {
    // u = (a f + b) / (c f + d)
    RationalFunction a, b, c, d;

    MobiusMap() : a(Rat(1)), b(Rat(0)), c(Rat(0)), d(Rat(1)) {}
    MobiusMap(RationalFunction a_, RationalFunction b_, RationalFunction c_, RationalFunction d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (det().is_zero())
            throw Error(ErrorKind::DegenerateMap, "moebius map with zero determinant");
    }

    static MobiusMap identity() { return MobiusMap(); }

    RationalFunction det() const { return a * d - b * c; }
    bool is_identity() const {
        return b.is_zero() && c.is_zero() && a == d;
    }
    bool is_constant() const {
        return a.is_constant() && b.is_constant() && c.is_constant() && d.is_constant();
    }

    MobiusMap inverse() const { return MobiusMap(d, -b, -c, a); }

    friend MobiusMap operator*(const MobiusMap& m1, const MobiusMap& m2) {
        // composition: (m1*m2)(f) = m1(m2(f))
        return MobiusMap(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                         m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
    }

    RationalFunction apply(const RationalFunction& f) const {
        RationalFunction den = c * f + d;
        if (den.is_zero())
            throw Error(ErrorKind::DegenerateMap, "moebius map sends the argument to infinity");
        return (a * f + b) / den;
    }

    template <class K>
    LaurentSeries<K> apply(const LaurentSeries<K>& u) const {
        const Rat& z0 = u.base_point();
        int n = u.trunc_order() - u.min_order() + 2;
        auto lift = [&](const RationalFunction& r) { return series_of_rf<K>(r, z0, n); };
        LaurentSeries<K> num = lift(a) * u + lift(b);
        LaurentSeries<K> den = lift(c) * u + lift(d);
        return num / den;
    }

    std::string to_string() const {
        return "u = ((" + a.to_string() + ")*f + (" + b.to_string() + "))/((" + c.to_string() +
               ")*f + (" + d.to_string() + "))";
    }
};

class SchwarzEquation {
public:
    // canonicalizes: cancels the monic f-gcd of P and Q; rejects Q = 0, m < 1
    SchwarzEquation(int m, FPoly p, FPoly q) : m_(m), p_(std::move(p)), q_(std::move(q)) {
        if (m_ < 1) throw Error(ErrorKind::NonPositiveExponent, "exponent m must be positive");
        if (q_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "Q must be nonzero");
        if (p_.is_zero()) {
            // 0/Q is the zero function; keep the canonical representative
            if (!(q_ == FPoly(1))) {
                q_ = FPoly(1);
                reduced_ = true;
            }
            return;
        }
        FPoly g = fp_gcd(p_, q_);
        if (g.degree() > 0) {
            p_ = p_ / g;
            q_ = q_ / g;
            reduced_ = true;
        }
    }

    int m() const { return m_; }
    const FPoly& p() const { return p_; }
    const FPoly& q() const { return q_; }
    int deg_p() const { return p_.degree(); }
    int deg_q() const { return q_.degree(); }
    bool balanced() const { return p_.degree() == q_.degree(); }
    bool gcd_was_cancelled() const { return reduced_; }

    RationalFunction rhs(const RationalFunction& f) const {
        return p_.eval_f(f) / q_.eval_f(f);
    }

    // structural equality
    friend bool operator==(const SchwarzEquation& x, const SchwarzEquation& y) {
        return x.m_ == y.m_ && x.p_ == y.p_ && x.q_ == y.q_;
    }
    // equality of the rational functions P/Q (units ignored)
    bool equivalent_to(const SchwarzEquation& o) const {
        return m_ == o.m_ && p_ * o.q_ == o.p_ * q_;
    }

    std::string to_string() const {
        std::string lhs = "S(f)";
        if (m_ != 1) lhs += "^" + std::to_string(m_);
        if (q_ == FPoly(1)) return lhs + " = " + wrap(p_);
        return lhs + " = " + wrap(p_) + "/" + wrap(q_);
    }

private:
    int m_;
    FPoly p_, q_;
    bool reduced_ = false;

    static std::string wrap(const FPoly& p) {
        std::string s = p.to_string();
        return "(" + s + ")";
    }
};

// S(f,z) = f'''/f' - (3/2)(f''/f')^2, exact; cross-checked against the
// log-derivative form (f''/f')' - (1/2)(f''/f')^2
inline RationalFunction schwarzian_rational(const RationalFunction& f) {
    RationalFunction d1 = f.derivative();
    if (d1.is_zero())
        throw Error(ErrorKind::ConstantInput, "schwarzian of a constant function");
    RationalFunction d2 = d1.derivative();
    RationalFunction d3 = d2.derivative();
    RationalFunction w = d2 / d1;
    RationalFunction s1 = w.derivative() - RationalFunction(Rat(1, 2)) * w * w;
    RationalFunction s2 = d3 / d1 - RationalFunction(Rat(3, 2)) * w * w;
    if (!(s1 == s2)) throw Error(ErrorKind::Internal, "schwarzian formulas disagree");
    return s1;
}

// Substitutes f = M^{-1}(u) into R(z,f) and clears denominators; the returned
// equation is the one satisfied by u = M(f) when M has constant entries.
inline SchwarzEquation apply_mobius(const SchwarzEquation& eq, const MobiusMap& m) {
    if (m.det().is_zero())
        throw Error(ErrorKind::DegenerateMap, "cannot apply a degenerate moebius map");
    // f = (d u - b) / (-c u + a)
    FPoly num(std::vector<RationalFunction>{-m.b, m.d});
    FPoly den(std::vector<RationalFunction>{m.a, -m.c});
    int big = std::max(eq.deg_p(), eq.deg_q());
    std::vector<FPoly> num_pow(static_cast<std::size_t>(big) + 1),
        den_pow(static_cast<std::size_t>(big) + 1);
    num_pow[0] = FPoly(1);
    den_pow[0] = FPoly(1);
    for (int i = 1; i <= big; ++i) {
        num_pow[static_cast<std::size_t>(i)] = num_pow[static_cast<std::size_t>(i - 1)] * num;
        den_pow[static_cast<std::size_t>(i)] = den_pow[static_cast<std::size_t>(i - 1)] * den;
    }
    auto transform = [&](const FPoly& poly) {
        FPoly out;
        for (int i = 0; i <= poly.degree(); ++i) {
            if (poly.coeff(i).is_zero()) continue;
            out += poly.coeff(i) * num_pow[static_cast<std::size_t>(i)] *
                   den_pow[static_cast<std::size_t>(big - i)];
        }
        return out;
    };
    return SchwarzEquation(eq.m(), transform(eq.p()), transform(eq.q()));
}

// Balances deg_f P = deg_f Q with the map u = f/(f - t) for the smallest
// positive integer t that is a root of neither P nor Q; identity when the
// equation is already balanced.
inline std::pair<SchwarzEquation, MobiusMap> normalize_degrees(const SchwarzEquation& eq) {
    // the zero right side is invariant under every substitution
    if (eq.balanced() || eq.p().is_zero()) return {eq, MobiusMap::identity()};
    long long t = 1;
    for (;;) {
        RationalFunction ft{Rat(t)};
        if (!eq.p().eval_f(ft).is_zero() && !eq.q().eval_f(ft).is_zero()) break;
        ++t;
    }
    MobiusMap m(RationalFunction(Rat(1)), RationalFunction(Rat(0)), RationalFunction(Rat(1)),
                RationalFunction(Rat(-t)));
    SchwarzEquation out = apply_mobius(eq, m);
    if (!out.balanced()) throw Error(ErrorKind::Internal, "degree normalization failed");
    return {out, m};
}

// residual of a candidate local solution: S(u)^m - R(z,u) as a series
template <class K>
LaurentSeries<K> residual_series(const SchwarzEquation& eq, const LaurentSeries<K>& u) {
    LaurentSeries<K> lhs = ls_pow(schwarzian_series(u), static_cast<unsigned>(eq.m()));
    LaurentSeries<K> pn = eval_fpoly_on_series(eq.p(), u);
    LaurentSeries<K> qn = eval_fpoly_on_series(eq.q(), u);
    return lhs - pn / qn;
}

}  // namespace swz
