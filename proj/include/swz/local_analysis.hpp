// Local Laurent-coefficient machinery: auxiliary-function construction and
// evaluation along candidate series, pole/zero coefficient matching, and the
// degree-sum feasibility arithmetic that decides the starred denominator
// classes.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swz/classifier.hpp"

namespace swz {

// ((1 - k^2)/2)^m: the leading Laurent coefficient of S(u)^m at a point where
// u has contact order k (pole of order k, or a zero of u' of order k-1)
inline Rat leading_schwarzian_coeff(int k, int m) {
    if (k < 2) throw Error(ErrorKind::Internal, "contact order must be >= 2");
    if (m < 1) throw Error(ErrorKind::Internal, "m must be positive");
    return Rat(1 - static_cast<long long>(k) * k, 2).pow(m);
}

// mandated value of c_{-n+1}/c_{-n} at a pole of order n:
// -(n/4m) * b0'(z0)/b0(z0)
inline Rat pole_ratio_relation(int n, int m, const RationalFunction& b0, const Rat& z0) {
    if (!b0.regular_at(z0) || b0.eval(z0)->is_zero())
        throw Error(ErrorKind::SingularCoefficient,
                    "leading coefficient has a zero or pole at the expansion point");
    Rat v0 = *b0.eval(z0);
    Rat v1 = *b0.derivative().eval(z0);
    return Rat(-n, 4 * static_cast<long long>(m)) * v1 / v0;
}

// ---- auxiliary expressions -------------------------------------------------

enum class AuxKind {
    RatioPair,        // f' / ((f+b1)(f+b2))
    RatioQuadratic,   // f' / (f^2 + a1 f + a0)
    RatioMixed,       // (f')^2 / ((f+b)^2 (f-t1)(f-t2))
    RatioFourPoint,   // (f')^2 / ((f-t1)(f-t2)(f-t3)(f-t4))
    RatioSix,         // (f')^6 / ((f-t1)^3 (f-t2)^4 (f-t3)^5)
    RatioCube,        // (f')^3 / ((f-t1)^2 (f-t2)^2 (f-t3)^2)
    RatioQuartic,     // (f')^4 / ((f-t1)^2 (f-t2)^3 (f-t3)^3)
    PoleLogTest,      // (u''/u' + g)^2 - (n+1)(u''/u' + g)'
    PoleLogException, // n u''/u' - (n+1)(u' - a1')/(u - a1)
    ZeroQuadTest,     // zero-side test with the squared reciprocal of (b')^m (u+b)
    ZeroLogTest,      // u''/u' - 2(u'+b')/(u+b) + b'/(u+b)
    PolePairTest,     // two-exponent pole-side log test
    ZeroPairTest,     // two-exponent zero-side log test
};

inline const char* aux_kind_name(AuxKind k) {
    switch (k) {
        case AuxKind::RatioPair: return "ratio_pair";
        case AuxKind::RatioQuadratic: return "ratio_quadratic";
        case AuxKind::RatioMixed: return "ratio_mixed";
        case AuxKind::RatioFourPoint: return "ratio_four_point";
        case AuxKind::RatioSix: return "ratio_six";
        case AuxKind::RatioCube: return "ratio_cube";
        case AuxKind::RatioQuartic: return "ratio_quartic";
        case AuxKind::PoleLogTest: return "pole_log_test";
        case AuxKind::PoleLogException: return "pole_log_exceptional";
        case AuxKind::ZeroQuadTest: return "zero_quadratic_test";
        case AuxKind::ZeroLogTest: return "zero_log_test";
        case AuxKind::PolePairTest: return "pole_pair_test";
        case AuxKind::ZeroPairTest: return "zero_pair_test";
    }
    return "?";
}

struct AuxExpression {
    AuxKind kind;
    int m = 1;
    // ratio kinds
    int dpow = 1;
    FPoly denom;
    // log-test kinds
    int n = 2, n1 = 2, n2 = 2;
    RationalFunction b;       // b(z) for the zero-side tests
    RationalFunction b0, bk;  // leading/trailing numerator coefficients
    RationalFunction alpha1;  // exceptional small function
    FPoly p0;                 // numerator of the normalized equation

    // gamma of the single-exponent pole test: (n-1) b0' / (4 m b0)
    RationalFunction gamma() const {
        return RationalFunction(Rat(n - 1)) * b0.derivative() /
               (RationalFunction(Rat(4 * static_cast<long long>(m))) * b0);
    }
    // gammas of the two-exponent tests
    RationalFunction gamma1() const {
        return RationalFunction(Rat(n1 - n2)) * b0.derivative() /
               (RationalFunction(Rat(4 * static_cast<long long>(m) * n2)) * b0);
    }
    RationalFunction gamma2() const {
        return RationalFunction(Rat(n2 - n1)) * bk.derivative() /
               (RationalFunction(Rat(4 * static_cast<long long>(m) * n1)) * bk);
    }
    // gamma of the zero-side quadratic test: m b''/(b')^{m+2} + b''/(2 (b')^{m+2})
    RationalFunction gamma_zero() const {
        RationalFunction bp = b.derivative();
        RationalFunction bpp = bp.derivative();
        RationalFunction pw = bp.pow(m + 2);
        return RationalFunction(Rat(m)) * bpp / pw + bpp / (RationalFunction(Rat(2)) * pw);
    }

    std::string describe() const {
        std::string s = aux_kind_name(kind);
        switch (kind) {
            case AuxKind::RatioPair:
            case AuxKind::RatioQuadratic:
            case AuxKind::RatioMixed:
            case AuxKind::RatioFourPoint:
            case AuxKind::RatioSix:
            case AuxKind::RatioCube:
            case AuxKind::RatioQuartic:
                s += ": (f')^" + std::to_string(dpow) + " / (" + denom.to_string() + ")";
                break;
            case AuxKind::PoleLogTest:
                s += ": (u''/u' + g)^2 - " + std::to_string(n + 1) +
                     "*(u''/u' + g)', g = " + gamma().to_string();
                break;
            case AuxKind::PoleLogException:
                s += ": " + std::to_string(n) + "*u''/u' - " + std::to_string(n + 1) +
                     "*(u' - a1')/(u - a1), a1 = " + alpha1.to_string();
                break;
            case AuxKind::ZeroQuadTest:
                s += ": zero-side quadratic test, b = " + b.to_string();
                break;
            case AuxKind::ZeroLogTest:
                s += ": u''/u' - 2(u'+b')/(u+b) + b'/(u+b), b = " + b.to_string();
                break;
            case AuxKind::PolePairTest:
                s += ": pole side, n1 = " + std::to_string(n1) + ", n2 = " + std::to_string(n2) +
                     ", g1 = " + gamma1().to_string();
                break;
            case AuxKind::ZeroPairTest:
                s += ": zero side, n1 = " + std::to_string(n1) + ", n2 = " + std::to_string(n2) +
                     ", g2 = " + gamma2().to_string();
                break;
        }
        return s;
    }
};

namespace detail {

inline FPoly linear_tau(const Rat& tau) {
    return FPoly::linear_from_root(RationalFunction(tau));
}

// the normalized numerator P1 with Q moved to a pure power of u, via the map
// sending tau1 to infinity (and tau2 to 0 when present); requires balance
struct NormalizedNumerator {
    FPoly p1;  // polynomial in u over Q(z)
    MobiusMap map;
};

inline NormalizedNumerator normalize_single_tau(const SchwarzEquation& eq, const Rat& tau) {
    if (!eq.balanced())
        throw Error(ErrorKind::Internal, "pole-side normalization needs balanced degrees");
    MobiusMap m(RationalFunction(Rat(0)), RationalFunction(Rat(1)), RationalFunction(Rat(1)),
                RationalFunction(-tau));
    SchwarzEquation out = apply_mobius(eq, m);
    if (out.deg_q() != 0)
        throw Error(ErrorKind::Internal, "single-factor normalization failed");
    RationalFunction unit = out.q().coeff(0);
    return {out.p() * (RationalFunction(Rat(1)) / unit), m};
}

inline NormalizedNumerator normalize_tau_pair(const SchwarzEquation& eq, const Rat& tau1,
                                              const Rat& tau2, int expect_zero_exp) {
    if (!eq.balanced())
        throw Error(ErrorKind::Internal, "pole-side normalization needs balanced degrees");
    MobiusMap m(RationalFunction(Rat(1)), RationalFunction(-tau2), RationalFunction(Rat(1)),
                RationalFunction(-tau1));
    SchwarzEquation out = apply_mobius(eq, m);
    // expect Q = unit * u^{expect_zero_exp}
    const FPoly& q = out.q();
    if (q.degree() != expect_zero_exp)
        throw Error(ErrorKind::Internal, "pair normalization failed");
    for (int i = 0; i < q.degree(); ++i)
        if (!q.coeff(i).is_zero())
            throw Error(ErrorKind::Internal, "pair normalization left extra factors");
    RationalFunction unit = q.leading();
    return {out.p() * (RationalFunction(Rat(1)) / unit), m};
}

}  // namespace detail

// The auxiliary expression certifying the class's reduction; NoAuxiliary for
// tags whose reduction step defines none.
inline AuxExpression build_aux(const QClass& qc, const SchwarzEquation& eq) {
    AuxExpression aux;
    aux.m = eq.m();
    switch (qc.tag) {
        case QTag::QE1: {
            aux.kind = AuxKind::RatioPair;
            aux.dpow = 1;
            aux.denom = FPoly::linear_from_root(-*qc.b1) * FPoly::linear_from_root(-*qc.b2);
            return aux;
        }
        case QTag::QE2: {
            aux.kind = AuxKind::RatioQuadratic;
            aux.dpow = 1;
            aux.denom = FPoly::f() * FPoly::f() + FPoly(*qc.a1) * FPoly::f() + FPoly(*qc.a0);
            return aux;
        }
        case QTag::QE4: {
            aux.kind = AuxKind::RatioMixed;
            aux.dpow = 2;
            aux.denom = FPoly::linear_from_root(-*qc.b).pow(2) * detail::linear_tau(qc.taus[0]) *
                        detail::linear_tau(qc.taus[1]);
            return aux;
        }
        case QTag::QE6: {
            aux.kind = AuxKind::RatioFourPoint;
            aux.dpow = 2;
            aux.denom = FPoly(1);
            for (const auto& t : qc.taus) aux.denom *= detail::linear_tau(t);
            return aux;
        }
        case QTag::QE11: {
            aux.kind = AuxKind::RatioSix;
            aux.dpow = 6;
            aux.denom = detail::linear_tau(qc.taus[0]).pow(3) * detail::linear_tau(qc.taus[1]).pow(4) *
                        detail::linear_tau(qc.taus[2]).pow(5);
            return aux;
        }
        case QTag::QE12: {
            aux.kind = AuxKind::RatioCube;
            aux.dpow = 3;
            aux.denom = detail::linear_tau(qc.taus[0]).pow(2) * detail::linear_tau(qc.taus[1]).pow(2) *
                        detail::linear_tau(qc.taus[2]).pow(2);
            return aux;
        }
        case QTag::QE13: {
            aux.kind = AuxKind::RatioQuartic;
            aux.dpow = 4;
            aux.denom = detail::linear_tau(qc.taus[0]).pow(2) * detail::linear_tau(qc.taus[1]).pow(3) *
                        detail::linear_tau(qc.taus[2]).pow(3);
            return aux;
        }
        case QTag::QE3: {
            aux.b = *qc.b;
            aux.p0 = eq.p() * (RationalFunction(Rat(1)) / *qc.c);
            // branch on 1/(b')^{2m} - (-3/2)^m / P0(z,-b)
            RationalFunction bp = aux.b.derivative();
            RationalFunction p0_at = aux.p0.eval_f(-aux.b);
            if (p0_at.is_zero())
                throw Error(ErrorKind::Internal, "P0(z,-b) vanishes identically; P,Q not coprime");
            RationalFunction branch =
                RationalFunction(Rat(1)) / bp.pow(2 * eq.m()) -
                RationalFunction(Rat(-3, 2).pow(eq.m())) / p0_at;
            aux.kind = branch.is_zero() ? AuxKind::ZeroLogTest : AuxKind::ZeroQuadTest;
            return aux;
        }
        case QTag::QE15: {
            aux.kind = AuxKind::PoleLogTest;
            aux.n = *qc.n;
            auto norm = detail::normalize_single_tau(eq, qc.taus[0]);
            aux.p0 = norm.p1;
            aux.b0 = norm.p1.leading();
            return aux;
        }
        case QTag::QE14: {
            aux.kind = AuxKind::PolePairTest;
            aux.n1 = *qc.n1;
            aux.n2 = *qc.n2;
            int e2 = 2 * eq.m() / *qc.n2;
            auto norm = detail::normalize_tau_pair(eq, qc.taus[0], qc.taus[1], e2);
            aux.p0 = norm.p1;
            aux.b0 = norm.p1.leading();
            aux.bk = norm.p1.coeff(0);
            return aux;
        }
        default:
            throw Error(ErrorKind::NoAuxiliary,
                        std::string("no auxiliary expression for class ") + qtag_name(qc.tag));
    }
}

// zero-side companion of the two-exponent test
inline AuxExpression build_zero_pair_aux(const QClass& qc, const SchwarzEquation& eq) {
    AuxExpression aux = build_aux(qc, eq);
    if (aux.kind != AuxKind::PolePairTest)
        throw Error(ErrorKind::NoAuxiliary, "zero-side pair test only exists for the pair class");
    aux.kind = AuxKind::ZeroPairTest;
    return aux;
}

// exceptional-branch variant of the single-exponent pole test
inline AuxExpression build_pole_exception_aux(const AuxExpression& pole_test,
                                              const RationalFunction& alpha1) {
    AuxExpression aux = pole_test;
    if (aux.kind != AuxKind::PoleLogTest)
        throw Error(ErrorKind::NoAuxiliary, "exceptional branch derives from the pole test");
    aux.kind = AuxKind::PoleLogException;
    aux.alpha1 = alpha1;
    return aux;
}

// Evaluate the auxiliary along a local series; the caller inspects
// min_order() >= 0 for the analyticity claims.
inline RatSeries eval_aux(const AuxExpression& aux, const RatSeries& u) {
    const Rat& z0 = u.base_point();
    int span = u.trunc_order() - u.min_order() + 4;
    auto lift = [&](const RationalFunction& r) { return rat_series_of_rf(r, z0, span); };
    RatSeries du = u.derivative();
    if (du.is_zero()) throw Error(ErrorKind::ConstantInput, "series is constant up to truncation");
    RatSeries out(z0, 0);
    switch (aux.kind) {
        case AuxKind::RatioPair:
        case AuxKind::RatioQuadratic:
        case AuxKind::RatioMixed:
        case AuxKind::RatioFourPoint:
        case AuxKind::RatioSix:
        case AuxKind::RatioCube:
        case AuxKind::RatioQuartic: {
            RatSeries den = eval_fpoly_on_series(aux.denom, u);
            if (den.is_zero())
                throw Error(ErrorKind::TruncationExhausted,
                            "denominator vanishes to the trusted order; extend the input series");
            out = du.pow(static_cast<unsigned>(aux.dpow)) / den;
            break;
        }
        case AuxKind::PoleLogTest: {
            RatSeries a = u.derivative().derivative() / du + lift(aux.gamma());
            out = a * a - Rat(aux.n + 1) * a.derivative();
            break;
        }
        case AuxKind::PoleLogException: {
            RatSeries al = lift(aux.alpha1);
            RatSeries dal = lift(aux.alpha1.derivative());
            out = Rat(aux.n) * (u.derivative().derivative() / du) -
                  Rat(aux.n + 1) * ((du - dal) / (u - al));
            break;
        }
        case AuxKind::ZeroQuadTest: {
            RationalFunction bp = aux.b.derivative();
            RatSeries ub = u + lift(aux.b);
            RatSeries inv1 = lift(RationalFunction(Rat(1)) / bp.pow(aux.m)) / ub;
            RatSeries first = inv1 + lift(aux.gamma_zero());
            RatSeries second = (lift(RationalFunction(Rat(1)) / bp.pow(2 * aux.m + 1)) / ub);
            RationalFunction scale = RationalFunction(Rat(-3, 2).pow(aux.m)) /
                                     (bp * aux.p0.eval_f(-aux.b));
            out = first * first + second.derivative() + lift(scale) * (du / (ub * ub));
            break;
        }
        case AuxKind::ZeroLogTest: {
            RatSeries ub = u + lift(aux.b);
            RatSeries bp = lift(aux.b.derivative());
            out = u.derivative().derivative() / du -
                  Rat(2) * ((du + bp) / ub) + bp / ub;
            break;
        }
        case AuxKind::PolePairTest: {
            RatSeries a = u.derivative().derivative() / du -
                          Rat(aux.n2 - 1) / Rat(aux.n2) * (du / u) + lift(aux.gamma1());
            out = a * a - Rat(aux.n1 + aux.n2) / Rat(aux.n2) * a.derivative();
            break;
        }
        case AuxKind::ZeroPairTest: {
            RatSeries a = u.derivative().derivative() / du -
                          Rat(aux.n1 + 1) / Rat(aux.n1) * (du / u) + lift(aux.gamma2());
            out = a * a - Rat(aux.n1 + aux.n2) / Rat(aux.n1) * a.derivative();
            break;
        }
    }
    if (out.is_zero() && out.trunc_order() <= 0)
        throw Error(ErrorKind::TruncationExhausted,
                    "cancellation consumed every trustworthy coefficient");
    return out;
}

// ---- zero-side coefficient matching ----------------------------------------

struct ZeroMatchingReport {
    int k = 0;  // contact order: u' vanishes to order k-1
    std::vector<std::pair<Rat, Rat>> cj_bj;  // pairs (c_j, b_j), 1 <= j <= k-1
    bool cj_match = false;
    Rat e2_lhs, e2_rhs;
    bool e2_match = false;
    Rat e3_lhs, e3_rhs;
    bool e3_match = false;
    bool pass = false;
};

// Checks the two zero-side matching identities for an equation of the
// single-nonconstant-factor class, along a series u with u + b vanishing at
// the base point.
inline ZeroMatchingReport zero_matching_check(const SchwarzEquation& eq, const QClass& qc,
                                              const RatSeries& u) {
    if (qc.tag != QTag::QE3)
        throw Error(ErrorKind::Internal, "zero matching applies to the single-factor class");
    const Rat& z0 = u.base_point();
    const RationalFunction& b = *qc.b;
    if (!b.regular_at(z0))
        throw Error(ErrorKind::SingularCoefficient, "b has a pole at the expansion point");
    FPoly p0 = eq.p() * (RationalFunction(Rat(1)) / *qc.c);
    if (!p0.regular_at(z0))
        throw Error(ErrorKind::SingularCoefficient,
                    "numerator coefficients singular at the expansion point");
    int need = 0;  // filled below once k is known
    RatSeries bs = rat_series_of_rf(b, z0, u.trunc_order() - u.min_order() + 4);
    RatSeries w = u + bs;  // = c_1 t + c_2 t^2 + ...
    if (w.is_zero() || w.min_order() < 0 || w.min_order() == 0)
        throw Error(ErrorKind::NotAZero, "u + b does not vanish at the expansion point");
    if (w.min_order() != 1)
        throw Error(ErrorKind::NotAZero, "zero of u + b is not simple");
    RatSeries du = u.derivative();
    if (du.is_zero())
        throw Error(ErrorKind::NotAZero, "u is constant up to truncation");
    int km1 = du.min_order();
    if (km1 < 1)
        throw Error(ErrorKind::NotAZero, "u' does not vanish at the expansion point");
    ZeroMatchingReport rep;
    rep.k = km1 + 1;
    const int k = rep.k;
    const int m = eq.m();
    need = k + 2;
    if (w.trunc_order() < need || bs.trunc_order() < need)
        throw Error(ErrorKind::TruncationExhausted, "series too short for the matching test");
    // c_j = b_j for 1 <= j <= k-1
    rep.cj_match = true;
    for (int j = 1; j <= k - 1; ++j) {
        Rat cj = w.coeff_or_zero(j);
        Rat bj = bs.coeff_or_zero(j);
        rep.cj_bj.emplace_back(cj, bj);
        if (!(cj == bj)) rep.cj_match = false;
    }
    Rat c1 = w.coeff(1);
    Rat c2 = w.coeff_or_zero(2);
    Rat ck = w.coeff_or_zero(k), bkc = bs.coeff_or_zero(k);
    Rat ck1 = w.coeff_or_zero(k + 1), bk1 = bs.coeff_or_zero(k + 1);
    // first identity: ((1-k^2)/2)^m = P0(z0, -b(z0)) / c1^{2m}
    RationalFunction p0_at_rf = p0.eval_f(-b);
    Rat p0_at = *p0_at_rf.eval(z0);
    rep.e2_lhs = leading_schwarzian_coeff(k, m);
    rep.e2_rhs = p0_at / c1.pow(2 * m);
    rep.e2_match = rep.e2_lhs == rep.e2_rhs;
    // second identity:
    // (2m/k) ((1-k^2)/2)^m (c_{k+1}-b_{k+1})/(c_k-b_k)
    //   = [P1(z0,-b(z0)) b_1 - 2m P0(z0,-b(z0)) c_2] / c1^{2m+1}
    FPoly p1 = p0.derivative_z();
    Rat p1_at = *p1.eval_f(-b).eval(z0);
    Rat b1 = bs.coeff_or_zero(1);
    if (ck == bkc)
        throw Error(ErrorKind::NotAZero, "contact order is not exact at the expansion point");
    rep.e3_lhs = Rat(2 * static_cast<long long>(m)) / Rat(k) * leading_schwarzian_coeff(k, m) *
                 (ck1 - bk1) / (ck - bkc);
    rep.e3_rhs = (p1_at * b1 - Rat(2 * static_cast<long long>(m)) * p0_at * c2) / c1.pow(2 * m + 1);
    rep.e3_match = rep.e3_lhs == rep.e3_rhs;
    rep.pass = rep.cj_match && rep.e2_match && rep.e3_match;
    return rep;
}

// ---- degree-sum feasibility -------------------------------------------------

struct FeasibilityReport {
    QTag tag = QTag::Unmatched;
    int m = 0;
    int s = 0;  // number of completely ramified alpha's assumed (0 or 1)
    bool feasible = false;
    std::optional<int> forced_n;
    Rat required_sum;              // required sum of beta's (per unit m)
    std::vector<int> beta_example; // witnessing vector when feasible
    std::vector<int> k1_over_m;    // admissible c with k1 = c m (pair class, s=1)
    std::string note;
};

namespace detail {

// beta_1/2 + beta_2 + ... = target with all beta_i >= 1 (s=1), or plain
// integer partition existence (s=0)
inline std::optional<std::vector<int>> solve_beta(const Rat& target, int s) {
    if (s == 0) {
        if (!target.is_integer() || target < Rat(1)) return std::nullopt;
        return std::vector<int>{static_cast<int>(target.num().to_ll())};
    }
    // halved first slot
    Rat twice = target * Rat(2);
    if (!twice.is_integer()) return std::nullopt;
    for (int b1 = 1; Rat(b1) <= twice; ++b1) {
        Rat rest = target - Rat(b1, 2);
        if (rest < Rat(0) || !rest.is_integer()) continue;
        std::vector<int> out{b1};
        if (!rest.is_zero()) out.push_back(static_cast<int>(rest.num().to_ll()));
        return out;
    }
    return std::nullopt;
}

// ramification budget: at most 2 across the constant targets plus one
// completely ramified small function of index 2 when s = 1
inline bool ramification_ok(const std::vector<int>& mults, int s) {
    Rat lhs(2);
    Rat rhs(0);
    for (int mu : mults) rhs += Rat(1, mu);
    if (s == 1) rhs += Rat(1, 2);
    return lhs <= rhs;
}

}  // namespace detail

// Decides whether positive-integer degree coefficients can meet the required
// degree sum for the three-factor starred classes and the two-m class.
inline FeasibilityReport degree_feasibility(QTag tag, int m, int s) {
    if (s != 0 && s != 1)
        throw Error(ErrorKind::Internal, "s must be 0 or 1");
    FeasibilityReport rep;
    rep.tag = tag;
    rep.m = m;
    rep.s = s;
    switch (tag) {
        case QTag::QE8:
        case QTag::QE9:
        case QTag::QE10: {
            rep.required_sum = tag == QTag::QE8   ? Rat(7, 3)
                               : tag == QTag::QE9 ? Rat(13, 6)
                                                  : Rat(31, 15);
            std::vector<int> mults = tag == QTag::QE8   ? std::vector<int>{2, 3, 3}
                                     : tag == QTag::QE9 ? std::vector<int>{2, 3, 4}
                                                        : std::vector<int>{2, 3, 5};
            if (s == 1 && !detail::ramification_ok(mults, 1)) {
                rep.feasible = false;
                rep.note = "ramification budget exceeded before the degree count";
                return rep;
            }
            auto beta = detail::solve_beta(rep.required_sum, s);
            rep.feasible = beta.has_value();
            if (beta) rep.beta_example = *beta;
            if (!rep.feasible) rep.note = "degree sum is not an admissible integer combination";
            return rep;
        }
        case QTag::QE7: {
            // scan n | 2m, n >= 2; the ramification budget pins n = 2 when s = 1
            for (int n = 2; n <= 2 * m; ++n) {
                if ((2 * m) % n != 0) continue;
                Rat target = Rat(2) + Rat(2, n);
                if (s == 1 && !detail::ramification_ok({2, 2, n}, 1)) continue;
                auto beta = detail::solve_beta(target, s);
                if (!beta) continue;
                rep.feasible = true;
                rep.forced_n = n;
                rep.required_sum = target;
                rep.beta_example = *beta;
                if (s == 1) {
                    for (int b1 = 2; b1 <= 6; b1 += 2)
                        if (Rat(b1, 2) <= target) rep.k1_over_m.push_back(b1 / 2);
                }
                return rep;
            }
            rep.feasible = false;
            rep.note = "no divisor admits the degree sum";
            return rep;
        }
        default:
            throw Error(ErrorKind::Internal,
                        "degree feasibility applies to the three-constant-factor classes");
    }
}

}  // namespace swz
