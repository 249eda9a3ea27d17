// Polynomials in the dependent variable f over the field Q(z):
// arithmetic, gcd, Yun square-free decomposition, and splitting of square-free
// parts into monic linear factors (roots in Q(z)) and irreducible monic
// quadratics. Square-free parts of degree >= 3 with no rational-function root
// are reported unsplit.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swz/poly_roots.hpp"
#include "swz/rational_function.hpp"

namespace swz {

class FPoly {
public:
    FPoly() = default;
    FPoly(RationalFunction c) {  // NOLINT: implicit constant
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    FPoly(Rat c) : FPoly(RationalFunction(std::move(c))) {}  // NOLINT
    FPoly(long long c) : FPoly(RationalFunction(Rat(c))) {}  // NOLINT
    FPoly(int c) : FPoly(RationalFunction(Rat(c))) {}        // NOLINT
    explicit FPoly(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

    static FPoly monomial(RationalFunction c, int k) {
        if (c.is_zero()) return FPoly();
        std::vector<RationalFunction> v(static_cast<std::size_t>(k) + 1, RationalFunction());
        v.back() = std::move(c);
        return FPoly(std::move(v));
    }
    static FPoly f() { return monomial(RationalFunction(Rat(1)), 1); }
    // the monic linear factor f - root
    static FPoly linear_from_root(const RationalFunction& root) {
        return FPoly(std::vector<RationalFunction>{-root, RationalFunction(Rat(1))});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const RationalFunction& coeff(int k) const {
        static const RationalFunction zero;
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const RationalFunction& leading() const {
        if (is_zero()) throw Error(ErrorKind::Internal, "leading coefficient of zero fpoly");
        return c_.back();
    }
    const std::vector<RationalFunction>& coeffs() const { return c_; }

    friend FPoly operator+(const FPoly& a, const FPoly& b) {
        std::vector<RationalFunction> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return FPoly(std::move(r));
    }
    friend FPoly operator-(const FPoly& a, const FPoly& b) {
        std::vector<RationalFunction> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return FPoly(std::move(r));
    }
    FPoly operator-() const {
        std::vector<RationalFunction> r(c_);
        for (auto& v : r) v = -v;
        return FPoly(std::move(r));
    }
    friend FPoly operator*(const FPoly& a, const FPoly& b) {
        if (a.is_zero() || b.is_zero()) return FPoly();
        std::vector<RationalFunction> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return FPoly(std::move(r));
    }
    friend FPoly operator*(const FPoly& a, const RationalFunction& s) {
        if (s.is_zero()) return FPoly();
        std::vector<RationalFunction> r(a.c_);
        for (auto& v : r) v *= s;
        return FPoly(std::move(r));
    }
    friend FPoly operator*(const RationalFunction& s, const FPoly& a) { return a * s; }
    FPoly& operator+=(const FPoly& o) { return *this = *this + o; }
    FPoly& operator-=(const FPoly& o) { return *this = *this - o; }
    FPoly& operator*=(const FPoly& o) { return *this = *this * o; }

    friend bool operator==(const FPoly& a, const FPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FPoly& a, const FPoly& b) { return !(a == b); }

    static void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "fpoly division by zero");
        q = FPoly();
        r = a;
        int db = b.degree();
        RationalFunction lb_inv = RationalFunction(Rat(1)) / b.leading();
        std::vector<RationalFunction> qc;
        if (r.degree() >= db) qc.assign(static_cast<std::size_t>(r.degree() - db) + 1,
                                        RationalFunction());
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            RationalFunction fq = r.leading() * lb_inv;
            qc[static_cast<std::size_t>(k)] = fq;
            r -= monomial(fq, k) * b;
        }
        q = FPoly(std::move(qc));
    }
    friend FPoly operator/(const FPoly& a, const FPoly& b) {
        FPoly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend FPoly operator%(const FPoly& a, const FPoly& b) {
        FPoly q, r;
        divmod(a, b, q, r);
        return r;
    }

    // d/df
    FPoly derivative_f() const {
        if (c_.size() <= 1) return FPoly();
        std::vector<RationalFunction> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * RationalFunction(Rat(static_cast<long long>(i)));
        return FPoly(std::move(r));
    }
    // d/dz, coefficient-wise
    FPoly derivative_z() const {
        std::vector<RationalFunction> r(c_);
        for (auto& v : r) v = v.derivative();
        return FPoly(std::move(r));
    }

    RationalFunction eval_f(const RationalFunction& x) const {
        RationalFunction acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    FPoly monic() const {
        if (is_zero()) return *this;
        return *this * (RationalFunction(Rat(1)) / leading());
    }

    FPoly pow(unsigned e) const {
        FPoly base = *this, acc = FPoly(Rat(1));
        while (e) {
            if (e & 1u) acc *= base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool regular_at(const Rat& z0) const {
        for (const auto& c : c_)
            if (!c.regular_at(z0)) return false;
        return true;
    }

    std::string to_string(const std::string& fvar = "f", const std::string& zvar = "z") const;

private:
    std::vector<RationalFunction> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// monic gcd over Q(z); not both arguments may be zero
inline FPoly fp_gcd(FPoly a, FPoly b) {
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::ZeroFunction, "gcd of two zero fpolys");
    // constant-in-z coefficients reduce to a univariate gcd over Q, where the
    // primitive pseudo-remainder sequence controls coefficient growth
    auto all_const = [](const FPoly& p) {
        for (const auto& c : p.coeffs())
            if (!c.is_constant()) return false;
        return true;
    };
    if (all_const(a) && all_const(b)) {
        auto to_poly = [](const FPoly& p) {
            std::vector<Rat> c;
            c.reserve(p.coeffs().size());
            for (const auto& v : p.coeffs()) c.push_back(v.constant_value());
            return Poly(std::move(c));
        };
        Poly g = Poly::gcd(to_poly(a), to_poly(b));
        std::vector<RationalFunction> c;
        c.reserve(g.coeffs().size());
        for (const auto& v : g.coeffs()) c.emplace_back(v);
        return FPoly(std::move(c));
    }
    while (!b.is_zero()) {
        FPoly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

inline std::string FPoly::to_string(const std::string& fvar, const std::string& zvar) const {
    if (is_zero()) return "0";
    // a coefficient that renders as a bare non-negative integer needs no parens
    auto atomic = [](const RationalFunction& c) {
        return c.is_polynomial() && c.num().degree() <= 0 && !c.num().coeff(0).is_negative() &&
               c.num().coeff(0).is_integer();
    };
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        RationalFunction c = coeff(k);
        if (c.is_zero()) continue;
        bool neg = !c.num().leading().is_negative() ? false : true;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = atomic(c) ? c.to_string(zvar) : "(" + c.to_string(zvar) + ")";
        if (k == 0) {
            out += cs;
        } else {
            if (!(c == RationalFunction(Rat(1)))) out += cs + "*";
            out += fvar;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---- square-free decomposition and factor splitting ---------------------

struct FFactor {
    FPoly poly;  // monic in f
    int mult = 1;
};

// unit * prod(factors[i].poly ^ factors[i].mult) * prod(unsplittable ^ mult)
// reproduces the input exactly; factors have f-degree 1 or 2 and are pairwise
// coprime; unsplittable parts have degree >= 3 and admit no linear split.
struct FactoredFPoly {
    RationalFunction unit;
    std::vector<FFactor> factors;
    std::vector<FFactor> unsplittable;

    FPoly expand() const {
        FPoly p{unit};
        for (const auto& fac : factors) p *= fac.poly.pow(static_cast<unsigned>(fac.mult));
        for (const auto& fac : unsplittable) p *= fac.poly.pow(static_cast<unsigned>(fac.mult));
        return p;
    }
    bool has_unsplittable() const { return !unsplittable.empty(); }
};

namespace detail {

// truncated power-series helpers over Q, series in t represented as Poly
inline Poly trunc_mul(const Poly& a, const Poly& b, int n) {
    std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
    int da = a.degree(), db = b.degree();
    for (int i = 0; i <= da && i < n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= db && i + j < n; ++j) r[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return Poly(std::move(r));
}

inline Poly trunc_recip(const Poly& a, int n) {
    if (a.coeff(0).is_zero())
        throw Error(ErrorKind::Internal, "series reciprocal needs a unit constant term");
    std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
    Rat inv0 = a.coeff(0).inverse();
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
        Rat s(0);
        for (int j = 1; j <= k && j <= a.degree(); ++j) s += a.coeff(j) * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -s * inv0;
    }
    return Poly(std::move(r));
}

// Taylor expansion of an RF about z0 to n terms; requires regularity at z0.
inline Poly taylor_rf(const RationalFunction& a, const Rat& z0, int n) {
    Poly num = a.num().shifted(z0);
    Poly den = a.den().shifted(z0);
    if (den.coeff(0).is_zero())
        throw Error(ErrorKind::SingularCoefficient, "coefficient has a pole at the chosen point");
    return trunc_mul(num, trunc_recip(den, n), n);
}

// rational reconstruction: find (u, v) with v * series = u (mod t^N),
// deg u <= du, deg v <= dv; returns false when none exists
inline bool pade_reconstruct(const Poly& series, int N, int du, int dv, Poly& u, Poly& v) {
    Poly r0 = Poly::monomial(Rat(1), N), r1 = series;
    Poly t0, t1 = Rat(1);
    while (!r1.is_zero() && r1.degree() > du) {
        Poly q, rem;
        Poly::divmod(r0, r1, q, rem);
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1.is_zero() || t1.degree() > dv) return false;
    u = r1;
    v = t1;
    return true;
}

}  // namespace detail

// All roots of a square-free p in Q(z), found by specializing z, lifting each
// rational root as a power series with Newton iteration, reconstructing a
// rational function, and verifying exactly.
inline std::vector<RationalFunction> fpoly_roots(const FPoly& p) {
    std::vector<RationalFunction> roots;
    if (p.degree() < 1) return roots;
    if (p.degree() == 1) {
        roots.push_back(-(p.coeff(0) / p.coeff(1)));
        return roots;
    }
    // clear coefficient denominators: S in Q[z][f]
    Poly lcm = Rat(1);
    for (const auto& c : p.coeffs()) {
        Poly g = Poly::gcd(lcm, c.den());
        lcm = lcm / g * c.den();
    }
    std::vector<Poly> a(p.coeffs().size());
    int dmax = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        RationalFunction ci = p.coeffs()[i] * RationalFunction(lcm);
        a[i] = ci.num();  // exact: den divides lcm
        dmax = std::max(dmax, a[i].degree());
    }
    const int D = std::max(dmax, 0);
    const int N = 2 * D + 2;

    // choose a good specialization point
    Rat z0;
    {
        long long t = 0;
        for (;;) {
            Rat cand{t};
            bool ok = !a.back().eval(cand).is_zero();
            if (ok) {
                std::vector<Rat> vals(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) vals[i] = a[i].eval(cand);
                Poly sp{std::vector<Rat>(vals)};
                ok = sp.degree() == p.degree() &&
                     Poly::gcd(sp, sp.derivative()).degree() == 0;
            }
            if (ok) {
                z0 = cand;
                break;
            }
            t = t <= 0 ? -t + 1 : -t;  // 0, 1, -1, 2, -2, ...
        }
    }

    // specialized polynomial and its rational roots
    std::vector<Rat> vals(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) vals[i] = a[i].eval(z0);
    Poly sp{std::vector<Rat>(vals)};
    std::vector<Rat> srt = rational_roots(sp);

    // coefficients as truncated series in t = z - z0
    std::vector<Poly> at(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Poly sh = a[i].shifted(z0);
        std::vector<Rat> cs(sh.coeffs().begin(),
                            sh.coeffs().begin() + std::min<std::size_t>(sh.coeffs().size(),
                                                                        static_cast<std::size_t>(N)));
        at[i] = Poly(std::move(cs));
    }
    auto eval_series = [&](const std::vector<Poly>& cf, const Poly& x, int n) {
        Poly acc;
        for (std::size_t i = cf.size(); i-- > 0;)
            acc = detail::trunc_mul(acc, x, n) + cf[i];
        return acc;
    };
    std::vector<Poly> dat(at.size() > 1 ? at.size() - 1 : 0);
    for (std::size_t i = 1; i < at.size(); ++i)
        dat[i - 1] = at[i] * Rat(static_cast<long long>(i));

    for (const Rat& rho : srt) {
        // Newton lift to precision N
        Poly root = rho;
        int prec = 1;
        bool dead = false;
        while (prec < N) {
            prec = std::min(2 * prec, N);
            Poly val = eval_series(at, root, prec);
            Poly der = eval_series(dat, root, prec);
            if (der.coeff(0).is_zero()) {
                dead = true;
                break;
            }
            root = root - detail::trunc_mul(val, detail::trunc_recip(der, prec), prec);
            // re-truncate
            std::vector<Rat> cs(root.coeffs().begin(),
                                root.coeffs().begin() + std::min<std::size_t>(root.coeffs().size(),
                                                                              static_cast<std::size_t>(prec)));
            root = Poly(std::move(cs));
        }
        if (dead) continue;
        Poly u, v;
        if (!detail::pade_reconstruct(root, N, D, D, u, v)) continue;
        if (v.coeff(0).is_zero()) continue;
        RationalFunction cand(u.shifted(-z0), v.shifted(-z0));
        if (p.eval_f(cand).is_zero()) roots.push_back(cand);
    }
    return roots;
}

// split a square-free monic part into linear factors, irreducible quadratics,
// and an unsplit remainder of degree >= 3
inline void split_squarefree(const FPoly& part, int mult, FactoredFPoly& out) {
    FPoly rest = part;
    if (rest.degree() == 1) {
        out.factors.push_back({rest, mult});
        return;
    }
    if (rest.degree() >= 3) {
        for (const auto& r : fpoly_roots(rest)) {
            FPoly lin = FPoly::linear_from_root(r);
            FPoly q, rem;
            FPoly::divmod(rest, lin, q, rem);
            if (!rem.is_zero()) throw Error(ErrorKind::Internal, "verified root does not divide");
            rest = q;
            out.factors.push_back({lin, mult});
        }
    }
    if (rest.degree() == 1) {
        out.factors.push_back({rest, mult});
    } else if (rest.degree() == 2) {
        // split only when the discriminant is a perfect square in Q(z)
        RationalFunction A = rest.coeff(1), B = rest.coeff(0);
        auto disc = is_square(A * A - RationalFunction(Rat(4)) * B);
        if (disc) {
            RationalFunction half(Rat(1, 2));
            out.factors.push_back({FPoly::linear_from_root((-A + *disc) * half), mult});
            out.factors.push_back({FPoly::linear_from_root((-A - *disc) * half), mult});
        } else {
            out.factors.push_back({rest, mult});
        }
    } else if (rest.degree() >= 3) {
        out.unsplittable.push_back({rest, mult});
    }
}

// Yun square-free decomposition over Q(z), then factor splitting.
inline FactoredFPoly squarefree_factor(const FPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroFunction, "squarefree_factor of zero");
    FactoredFPoly out;
    out.unit = p.leading();
    FPoly w = p.monic();
    if (w.degree() == 0) return out;
    FPoly dw = w.derivative_f();
    FPoly g = fp_gcd(w, dw);
    FPoly b = w / g;
    FPoly c = dw / g;
    FPoly d = c - b.derivative_f();
    int i = 1;
    while (b.degree() > 0) {
        FPoly ai = fp_gcd(b, d).monic();
        if (ai.degree() > 0) split_squarefree(ai, i, out);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative_f();
        ++i;
    }
    return out;
}

}  // namespace swz
