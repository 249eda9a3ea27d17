// Exact rational roots of a univariate polynomial over Q.
// Sturm-chain isolation, then the simplest rational in each isolating interval
// is tested by exact evaluation. No integer factorization involved.
#pragma once

#include <algorithm>
#include <vector>

#include "swz/poly.hpp"

namespace swz {
namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        Poly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// number of distinct real roots in (a, b], for square-free p
inline int roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// The rational with smallest denominator in the closed interval [lo, hi].
inline Rat simplest_in_closed(const Rat& lo, const Rat& hi) {
    BigInt fl = lo.ceil();
    if (Rat(fl) <= hi) return Rat(fl);
    // now floor(lo) == floor(hi) and the interval avoids integers
    BigInt a = lo.floor();
    Rat inv = simplest_in_closed((hi - Rat(a)).inverse(), (lo - Rat(a)).inverse());
    return Rat(a) + inv.inverse();
}

}  // namespace detail

// All rational roots of p (distinct; multiplicities ignored). p must be nonzero.
inline std::vector<Rat> rational_roots(const Poly& p_in) {
    if (p_in.is_zero()) throw Error(ErrorKind::ZeroFunction, "rational_roots of zero poly");
    std::vector<Rat> roots;
    Poly p = p_in;
    // strip roots at zero
    {
        std::size_t k = 0;
        while (k < p.coeffs().size() && p.coeffs()[k].is_zero()) ++k;
        if (k > 0) {
            roots.push_back(Rat(0));
            std::vector<Rat> rest(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
            p = Poly(std::move(rest));
        }
    }
    if (p.degree() <= 0) return roots;
    // square-free part
    Poly g = Poly::gcd(p, p.derivative());
    if (g.degree() > 0) p = p / g;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    // clear denominators to integer coefficients
    BigInt lcm(1);
    for (const auto& c : p.coeffs()) {
        BigInt d = c.den();
        lcm = lcm / BigInt::gcd(lcm, d) * d;
    }
    p = p * Rat(lcm);
    const BigInt den_bound = p.leading().num().abs();

    auto chain = detail::sturm_chain(p);
    // Cauchy bound
    Rat bound(1);
    for (const auto& c : p.coeffs()) {
        Rat q = (c / p.leading()).abs();
        if (q > bound) bound = q;
    }
    bound += Rat(1);

    // isolate: stack of half-open intervals (a, b] with root counts
    struct Iv {
        Rat a, b;
        int n;
    };
    std::vector<Iv> stack, isolated;
    {
        Rat lo = -bound, hi = bound;
        if (p.eval(lo).is_zero()) lo -= Rat(1);  // keep endpoints off roots
        int n = detail::roots_in(chain, lo, hi);
        if (n > 0) stack.push_back({lo, hi, n});
    }
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        if (iv.n == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rat mid = (iv.a + iv.b) / Rat(2);
        if (p.eval(mid).is_zero()) {
            roots.push_back(mid);
            // perturb so the root sits strictly inside neither half
            Rat eps = (iv.b - iv.a) / Rat(1000);
            Rat lo2 = mid - eps, hi2 = mid + eps;
            while (p.eval(lo2).is_zero()) lo2 -= eps;
            while (p.eval(hi2).is_zero()) hi2 += eps;
            int nl = detail::roots_in(chain, iv.a, lo2);
            int nr = detail::roots_in(chain, hi2, iv.b);
            if (nl > 0) stack.push_back({iv.a, lo2, nl});
            if (nr > 0) stack.push_back({hi2, iv.b, nr});
            continue;
        }
        int nl = detail::roots_in(chain, iv.a, mid);
        int nr = iv.n - nl;
        if (nl > 0) stack.push_back({iv.a, mid, nl});
        if (nr > 0) stack.push_back({mid, iv.b, nr});
    }
    // refine each isolating interval until a unique bounded-denominator rational
    // can be picked out, then verify it is a root
    Rat width_target = Rat(BigInt(1), BigInt(2) * den_bound * den_bound + BigInt(1));
    for (auto& iv : isolated) {
        Rat a = iv.a, b = iv.b;
        while (b - a > width_target) {
            Rat mid = (a + b) / Rat(2);
            if (p.eval(mid).is_zero()) {
                a = b = mid;
                break;
            }
            if (detail::roots_in(chain, a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        Rat cand = (a == b) ? a : detail::simplest_in_closed(a, b);
        if (p.eval(cand).is_zero()) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace swz
