// Truncated Laurent series at a rational base point, with explicit tracking of
// the first untrusted power through every operation. The coefficient field is
// a template parameter: Rat for concrete expansions, RationalFunction when a
// formal parameter (e.g. an unknown initial value) rides along in the
// coefficients.
#pragma once

#include <string>
#include <vector>

#include "swz/fpoly.hpp"
#include "swz/rational_function.hpp"

namespace swz {

template <class K>
struct series_field {
    static K from_rat(const Rat& r) { return K(r); }
    static bool is_zero(const K& v) { return v.is_zero(); }
};

template <class K>
class LaurentSeries {
public:
    // zero series, trusted below trunc
    LaurentSeries(Rat base, int trunc) : base_(std::move(base)), vmin_(trunc), trunc_(trunc) {}

    // coefficients for powers vmin, vmin+1, ...; trusted below vmin + coeffs.size()
    LaurentSeries(Rat base, int vmin, std::vector<K> coeffs)
        : base_(std::move(base)),
          vmin_(vmin),
          trunc_(vmin + static_cast<int>(coeffs.size())),
          c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentSeries constant(const K& v, const Rat& base, int nterms) {
        std::vector<K> c(static_cast<std::size_t>(nterms), K(Rat(0)));
        if (nterms > 0) c[0] = v;
        return LaurentSeries(base, 0, std::move(c));
    }

    const Rat& base_point() const { return base_; }
    // valuation: order of the lowest nonzero known coefficient (== trunc_ for
    // a series with no known nonzero terms)
    int min_order() const { return vmin_; }
    int trunc_order() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }

    K coeff(int k) const {
        if (k < vmin_) return K(Rat(0));
        if (k >= trunc_)
            throw Error(ErrorKind::TruncationExhausted,
                        "coefficient " + std::to_string(k) + " beyond trusted order " +
                            std::to_string(trunc_));
        return c_[static_cast<std::size_t>(k - vmin_)];
    }
    // 0 beyond truncation instead of throwing; for rendering only
    K coeff_or_zero(int k) const {
        if (k < vmin_ || k >= trunc_) return K(Rat(0));
        return c_[static_cast<std::size_t>(k - vmin_)];
    }

    const K& leading() const {
        if (is_zero()) throw Error(ErrorKind::Internal, "leading coefficient of zero series");
        return c_.front();
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        a.check_base(b);
        int trunc = std::min(a.trunc_, b.trunc_);
        int vmin = std::min(a.vmin_, b.vmin_);
        vmin = std::min(vmin, trunc);
        std::vector<K> c(static_cast<std::size_t>(trunc - vmin), K(Rat(0)));
        for (int k = vmin; k < trunc; ++k) {
            K v = a.known(k) + b.known(k);
            c[static_cast<std::size_t>(k - vmin)] = v;
        }
        return LaurentSeries(a.base_, vmin, std::move(c));
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        a.check_base(b);
        if (a.is_zero() || b.is_zero()) {
            // product trusted as far as the zero factor allows
            int trunc = std::min(a.is_zero() ? a.trunc_ + b.vmin_ : a.vmin_ + b.trunc_,
                                 std::min(a.trunc_ + b.vmin_, b.trunc_ + a.vmin_));
            return LaurentSeries(a.base_, trunc);
        }
        int vmin = a.vmin_ + b.vmin_;
        int trunc = std::min(a.trunc_ + b.vmin_, b.trunc_ + a.vmin_);
        std::vector<K> c(static_cast<std::size_t>(trunc - vmin), K(Rat(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (series_field<K>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                int k = a.vmin_ + static_cast<int>(i) + b.vmin_ + static_cast<int>(j);
                if (k >= trunc) break;
                c[static_cast<std::size_t>(k - vmin)] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(a.base_, vmin, std::move(c));
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const K& s) {
        LaurentSeries r = a;
        for (auto& v : r.c_) v = v * s;
        r.normalize();
        return r;
    }
    friend LaurentSeries operator*(const K& s, const LaurentSeries& a) { return a * s; }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        a.check_base(b);
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZeroSeries,
                        "division by a series that vanishes up to truncation");
        // reciprocal of b = b_v t^v (1 + ...), then multiply
        int nb = b.trunc_ - b.vmin_;
        int na = a.trunc_ - a.vmin_;
        int n = std::min(na, nb);
        if (a.is_zero()) n = nb;  // zero numerator still loses trust like any numerator
        K inv0 = K(Rat(1)) / b.c_.front();
        std::vector<K> r(static_cast<std::size_t>(n), K(Rat(0)));
        if (n > 0) r[0] = inv0;
        for (int k = 1; k < n; ++k) {
            K s = K(Rat(0));
            for (int j = 1; j <= k && j < nb; ++j)
                s += b.c_[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
            r[static_cast<std::size_t>(k)] = -s * inv0;
        }
        LaurentSeries recip(a.base_, -b.vmin_, std::move(r));
        // trust of the reciprocal: error in b at order b.trunc_ shows up at
        // order b.trunc_ - 2*b.vmin_
        recip.trunc_ = std::min(recip.trunc_, b.trunc_ - 2 * b.vmin_);
        recip.clamp();
        return a * recip;
    }

    LaurentSeries derivative() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int k = vmin_ + static_cast<int>(i);
            c.push_back(c_[i] * series_field<K>::from_rat(Rat(static_cast<long long>(k))));
        }
        LaurentSeries r(base_, vmin_ - 1, std::move(c));
        r.trunc_ = trunc_ - 1;
        r.clamp();
        return r;
    }

    LaurentSeries pow(unsigned e) const {
        if (e == 0) return constant(K(Rat(1)), base_, trunc_ - vmin_ > 0 ? trunc_ - vmin_ : 1);
        LaurentSeries acc = *this;
        for (unsigned i = 1; i < e; ++i) acc = acc * *this;
        return acc;
    }

    // truncate harder (never extends trust)
    LaurentSeries truncated(int trunc) const {
        LaurentSeries r = *this;
        if (trunc < r.trunc_) {
            r.trunc_ = trunc;
            r.clamp();
        }
        return r;
    }

    bool agrees_with(const LaurentSeries& o) const {
        if (!(base_ == o.base_)) return false;
        int hi = std::min(trunc_, o.trunc_);
        int lo = std::min(vmin_, o.vmin_);
        for (int k = lo; k < hi; ++k)
            if (!(known(k) == o.known(k))) return false;
        return true;
    }

    std::string to_string(const std::string& tname = "t") const {
        std::string out;
        for (int k = vmin_; k < trunc_; ++k) {
            K v = known(k);
            if (series_field<K>::is_zero(v)) continue;
            if (!out.empty()) out += " + ";
            out += "(" + swz::to_string(v) + ")";
            if (k != 0) out += "*" + tname + "^" + std::to_string(k);
        }
        if (out.empty()) out = "0";
        out += " + O(" + tname + "^" + std::to_string(trunc_) + ")";
        return out;
    }

private:
    Rat base_;
    int vmin_;   // lowest known (possibly nonzero) order; trunc_ when all-zero
    int trunc_;  // first untrusted order
    std::vector<K> c_;

    // coefficient at k assuming k < trunc_ (0 below the window)
    K known(int k) const {
        if (k < vmin_ || k >= trunc_) return K(Rat(0));
        return c_[static_cast<std::size_t>(k - vmin_)];
    }

    void check_base(const LaurentSeries& o) const {
        if (!(base_ == o.base_))
            throw Error(ErrorKind::BasePointMismatch, "series expanded at different base points");
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && series_field<K>::is_zero(c_[lead])) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            vmin_ += static_cast<int>(lead);
        }
        if (c_.empty()) vmin_ = trunc_;
    }

    void clamp() {
        if (trunc_ <= vmin_) {
            c_.clear();
            vmin_ = trunc_;
            return;
        }
        if (static_cast<int>(c_.size()) > trunc_ - vmin_)
            c_.resize(static_cast<std::size_t>(trunc_ - vmin_));
        normalize();
    }
};

using RatSeries = LaurentSeries<Rat>;
// coefficients carrying one formal parameter
using ParamSeries = LaurentSeries<RationalFunction>;

// ---- expansions ----------------------------------------------------------

// Taylor coefficients of a polynomial about z0, lifted into K
template <class K>
LaurentSeries<K> series_of_poly(const Poly& p, const Rat& z0, int nterms) {
    Poly sh = p.shifted(z0);
    std::vector<K> c(static_cast<std::size_t>(nterms), K(Rat(0)));
    for (int i = 0; i < nterms && i <= sh.degree(); ++i)
        c[static_cast<std::size_t>(i)] = series_field<K>::from_rat(sh.coeff(i));
    return LaurentSeries<K>(z0, 0, std::move(c));
}

// Laurent expansion of a rational function about z0 (poles allowed)
template <class K>
LaurentSeries<K> series_of_rf(const RationalFunction& a, const Rat& z0, int nterms) {
    if (a.is_zero()) return LaurentSeries<K>(z0, nterms);
    // window padding so the quotient keeps nterms trusted coefficients past
    // its leading order
    int extra = a.den().root_multiplicity(z0) + a.num().root_multiplicity(z0) + 1;
    auto num = series_of_poly<K>(a.num(), z0, nterms + extra);
    auto den = series_of_poly<K>(a.den(), z0, nterms + extra);
    return num / den;
}

inline RatSeries rat_series_of_rf(const RationalFunction& a, const Rat& z0, int nterms) {
    return series_of_rf<Rat>(a, z0, nterms);
}

// P(z, u) along a series u, expanding the z-coefficients about the base point
template <class K>
LaurentSeries<K> eval_fpoly_on_series(const FPoly& p, const LaurentSeries<K>& u) {
    const Rat& z0 = u.base_point();
    int span = u.trunc_order() - u.min_order();
    // window wide enough that the expanded coefficients never cap the trust of
    // the Horner chain, whose intermediate valuations can reach deg * span in
    // either direction
    int deg = std::max(p.degree(), 1);
    int nterms = span * (deg + 1) + std::max(0, -u.min_order()) * deg + 4;
    LaurentSeries<K> acc(z0, u.trunc_order());
    bool any = false;
    for (int i = p.degree(); i >= 0; --i) {
        if (!any) {
            if (p.coeff(i).is_zero()) continue;
            acc = series_of_rf<K>(p.coeff(i), z0, nterms);
            any = true;
            continue;
        }
        acc = acc * u;
        if (!p.coeff(i).is_zero()) acc = acc + series_of_rf<K>(p.coeff(i), z0, nterms);
    }
    if (!any) {
        // zero polynomial: exact zero, trusted as far as a product with u would be
        return LaurentSeries<K>(z0, u.trunc_order());
    }
    return acc;
}

// ---- the Schwarzian operator on series ------------------------------------

// S(f) = (f''/f')' - (1/2)(f''/f')^2, cross-checked against f'''/f' - (3/2)(f''/f')^2
template <class K>
LaurentSeries<K> schwarzian_series(const LaurentSeries<K>& f) {
    LaurentSeries<K> d1 = f.derivative();
    if (d1.is_zero())
        throw Error(ErrorKind::ConstantInput,
                    "schwarzian of a series constant up to truncation");
    LaurentSeries<K> d2 = d1.derivative();
    LaurentSeries<K> d3 = d2.derivative();
    LaurentSeries<K> w = d2 / d1;
    K half = series_field<K>::from_rat(Rat(1, 2));
    K three_half = series_field<K>::from_rat(Rat(3, 2));
    LaurentSeries<K> s1 = w.derivative() - half * (w * w);
    LaurentSeries<K> s2 = d3 / d1 - three_half * (w * w);
    if (!s1.agrees_with(s2))
        throw Error(ErrorKind::Internal, "schwarzian formulas disagree on a series");
    return s1.truncated(std::min(s1.trunc_order(), s2.trunc_order()));
}

template <class K>
LaurentSeries<K> ls_pow(const LaurentSeries<K>& a, unsigned m) {
    return a.pow(m);
}

// Taylor composition f(g - g0) where g0 = g(base); f must be a Taylor series
// expanded at g0 and g - g0 must vanish at the base point.
template <class K>
LaurentSeries<K> compose(const LaurentSeries<K>& f, const LaurentSeries<K>& g) {
    if (f.min_order() < 0)
        throw Error(ErrorKind::Internal, "composition needs a Taylor outer series");
    if (g.min_order() < 0)
        throw Error(ErrorKind::Internal, "composition needs a Taylor inner series");
    K g0 = g.min_order() == 0 ? g.coeff(0) : K(Rat(0));
    LaurentSeries<K> w = g - LaurentSeries<K>::constant(g0, g.base_point(), g.trunc_order());
    int v = w.is_zero() ? w.trunc_order() : w.min_order();
    if (v < 1)
        throw Error(ErrorKind::Internal, "inner series must map the base point to the center");
    int trunc = std::min(g.trunc_order(), v * f.trunc_order());
    LaurentSeries<K> acc(g.base_point(), trunc);
    for (int i = f.trunc_order() - 1; i >= 0; --i) {
        acc = acc * w;
        K fi = i >= f.min_order() ? f.coeff(i) : K(Rat(0));
        if (!series_field<K>::is_zero(fi))
            acc = acc + LaurentSeries<K>::constant(fi, g.base_point(), trunc);
        acc = acc.truncated(trunc);
    }
    return acc;
}

}  // namespace swz
