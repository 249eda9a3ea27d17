// Classification of the denominator Q(z,f) against the sixteen canonical
// multiplicity patterns, with parameter extraction and side conditions.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swz/equation.hpp"

namespace swz {

enum class QTag {
    QE1, QE2, QE3, QE4, QE5, QE6, QE7, QE8,
    QE9, QE10, QE11, QE12, QE13, QE14, QE15, QE16,
    Unmatched,
};

inline const char* qtag_name(QTag t) {
    switch (t) {
        case QTag::QE1: return "QE1";
        case QTag::QE2: return "QE2";
        case QTag::QE3: return "QE3";
        case QTag::QE4: return "QE4";
        case QTag::QE5: return "QE5";
        case QTag::QE6: return "QE6";
        case QTag::QE7: return "QE7";
        case QTag::QE8: return "QE8";
        case QTag::QE9: return "QE9";
        case QTag::QE10: return "QE10";
        case QTag::QE11: return "QE11";
        case QTag::QE12: return "QE12";
        case QTag::QE13: return "QE13";
        case QTag::QE14: return "QE14";
        case QTag::QE15: return "QE15";
        case QTag::QE16: return "QE16";
        case QTag::Unmatched: return "Unmatched";
    }
    return "?";
}

// parameters extracted for whichever tag matched; fields unused by the tag
// stay empty
struct QClass {
    QTag tag = QTag::Unmatched;
    std::optional<RationalFunction> c;       // unit in front of the factored form
    std::optional<RationalFunction> b;       // nonconstant b(z) in (f + b)
    std::optional<RationalFunction> b1, b2;  // the pair in (f+b1)(f+b2)
    std::optional<RationalFunction> a0, a1;  // quadratic f^2 + a1 f + a0
    std::vector<Rat> taus;                   // distinct constants
    std::optional<int> n, n1, n2;            // divisor parameters

    // rendered parameter map, e.g. for reports
    std::map<std::string, std::string> param_strings() const {
        std::map<std::string, std::string> out;
        if (c) out["c"] = c->to_string();
        if (b) out["b"] = b->to_string();
        if (b1) out["b1"] = b1->to_string();
        if (b2) out["b2"] = b2->to_string();
        if (a0) out["a0"] = a0->to_string();
        if (a1) out["a1"] = a1->to_string();
        for (std::size_t i = 0; i < taus.size(); ++i)
            out["tau" + std::to_string(i + 1)] = taus[i].to_string();
        if (n) out["n"] = std::to_string(*n);
        if (n1) out["n1"] = std::to_string(*n1);
        if (n2) out["n2"] = std::to_string(*n2);
        return out;
    }
};

namespace detail {

struct LinFactor {
    RationalFunction root;  // factor is f - root
    int mult;
    bool constant;
    Rat tau;  // valid when constant
};

struct QuadFactor {
    RationalFunction a1, a0;  // monic f^2 + a1 f + a0
    int mult;
};

struct QShape {
    RationalFunction unit;
    std::vector<LinFactor> lins;
    std::vector<QuadFactor> quads;
    bool unsplittable = false;
    int const_count = 0;
    int nonconst_count = 0;
};

inline QShape shape_of(const FPoly& q) {
    QShape s;
    FactoredFPoly fac = squarefree_factor(q);
    s.unit = fac.unit;
    s.unsplittable = fac.has_unsplittable();
    for (const auto& f : fac.factors) {
        if (f.poly.degree() == 1) {
            LinFactor lf;
            lf.root = -f.poly.coeff(0);
            lf.mult = f.mult;
            lf.constant = lf.root.is_constant();
            if (lf.constant) lf.tau = lf.root.constant_value();
            s.lins.push_back(std::move(lf));
        } else {
            s.quads.push_back({f.poly.coeff(1), f.poly.coeff(0), f.mult});
        }
    }
    for (const auto& l : s.lins) (l.constant ? s.const_count : s.nonconst_count)++;
    std::sort(s.lins.begin(), s.lins.end(), [](const LinFactor& x, const LinFactor& y) {
        if (x.mult != y.mult) return x.mult > y.mult;
        if (x.constant != y.constant) return x.constant < y.constant;
        if (x.constant && y.constant) return x.tau < y.tau;
        return x.root.to_string() < y.root.to_string();
    });
    return s;
}

// divisor n = 2m/e when integral and >= 2
inline std::optional<int> divisor_n(int m, int e) {
    if (e <= 0 || (2 * m) % e != 0) return std::nullopt;
    int n = 2 * m / e;
    if (n < 2) return std::nullopt;
    return n;
}

// constant-root linear factors sorted by (mult desc, tau asc); empty when any
// factor violates the all-constant requirement
inline bool only_constant_lins(const QShape& s) {
    return s.quads.empty() && !s.unsplittable && s.nonconst_count == 0;
}

}  // namespace detail

// try a single tag against the factored shape; nullopt when it does not match
inline std::optional<QClass> match_tag(QTag tag, int m, const detail::QShape& s) {
    using detail::divisor_n;
    QClass out;
    out.tag = tag;
    out.c = s.unit;
    const auto& L = s.lins;
    switch (tag) {
        case QTag::QE1: {
            if (s.quads.empty() && !s.unsplittable && L.size() == 2 && s.nonconst_count == 2 &&
                L[0].mult == 2 * m && L[1].mult == 2 * m) {
                out.b1 = -L[0].root;
                out.b2 = -L[1].root;
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE2: {
            if (L.empty() && !s.unsplittable && s.quads.size() == 1 && s.quads[0].mult == 2 * m) {
                const auto& qd = s.quads[0];
                if (qd.a0.is_constant() && qd.a1.is_constant()) return std::nullopt;  // |a0'|+|a1'| != 0
                out.a0 = qd.a0;
                out.a1 = qd.a1;
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE3: {
            if (s.quads.empty() && !s.unsplittable && L.size() == 1 && s.nonconst_count == 1 &&
                L[0].mult == 2 * m) {
                out.b = -L[0].root;
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE4: {
            if (s.quads.empty() && !s.unsplittable && L.size() == 3 && s.nonconst_count == 1 &&
                s.const_count == 2) {
                const detail::LinFactor* bf = nullptr;
                std::vector<const detail::LinFactor*> ts;
                for (const auto& l : L) (l.constant ? (void)ts.push_back(&l) : (void)(bf = &l));
                if (bf && bf->mult == 2 * m && ts[0]->mult == m && ts[1]->mult == m) {
                    out.b = -bf->root;
                    out.taus = {std::min(ts[0]->tau, ts[1]->tau), std::max(ts[0]->tau, ts[1]->tau)};
                    return out;
                }
            }
            return std::nullopt;
        }
        case QTag::QE5: {
            if (s.quads.empty() && !s.unsplittable && L.size() == 2 && s.nonconst_count == 1 &&
                s.const_count == 1) {
                const detail::LinFactor* bf = nullptr;
                const detail::LinFactor* tf = nullptr;
                for (const auto& l : L) (l.constant ? tf : bf) = &l;
                auto n = divisor_n(m, tf->mult);
                if (bf->mult == 2 * m && n) {
                    out.b = -bf->root;
                    out.taus = {tf->tau};
                    out.n = *n;
                    return out;
                }
            }
            return std::nullopt;
        }
        case QTag::QE6: {
            if (detail::only_constant_lins(s) && L.size() == 4 && L[0].mult == m &&
                L[1].mult == m && L[2].mult == m && L[3].mult == m) {
                for (const auto& l : L) out.taus.push_back(l.tau);
                std::sort(out.taus.begin(), out.taus.end());
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE7: {
            if (!detail::only_constant_lins(s) || L.size() != 3) return std::nullopt;
            // two slots of multiplicity m, one of 2m/n
            for (std::size_t k = 0; k < 3; ++k) {
                std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
                if (L[i].mult != m || L[j].mult != m) continue;
                auto n = divisor_n(m, L[k].mult);
                if (!n) continue;
                out.taus = {std::min(L[i].tau, L[j].tau), std::max(L[i].tau, L[j].tau), L[k].tau};
                out.n = *n;
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE8:
        case QTag::QE9:
        case QTag::QE10:
        case QTag::QE11: {
            if (!detail::only_constant_lins(s) || L.size() != 3) return std::nullopt;
            bool div_ok = false;
            int third = 0;
            if (tag == QTag::QE8) {
                div_ok = (2 * m) % 3 == 0;
                third = div_ok ? 2 * m / 3 : 0;
            } else if (tag == QTag::QE9) {
                div_ok = m % 6 == 0;
                third = div_ok ? m / 2 : 0;  // 2m/4
            } else if (tag == QTag::QE10) {
                div_ok = (2 * m) % 15 == 0;
                third = div_ok ? 2 * m / 5 : 0;
            } else {
                div_ok = m % 3 == 0;
                third = div_ok ? m / 3 : 0;  // 2m/6
            }
            if (!div_ok) return std::nullopt;
            int second = 2 * m / 3;
            if (tag == QTag::QE8) {
                // multiset {m, 2m/3, 2m/3}
                for (std::size_t k = 0; k < 3; ++k) {
                    std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
                    if (L[k].mult == m && L[i].mult == second && L[j].mult == second) {
                        out.taus = {L[k].tau, std::min(L[i].tau, L[j].tau),
                                    std::max(L[i].tau, L[j].tau)};
                        return out;
                    }
                }
                return std::nullopt;
            }
            // distinct multiplicities m, 2m/3, third
            const detail::LinFactor *t1 = nullptr, *t2 = nullptr, *t3 = nullptr;
            for (const auto& l : L) {
                if (l.mult == m && !t1) t1 = &l;
                else if (l.mult == second && !t2) t2 = &l;
                else if (l.mult == third && !t3) t3 = &l;
            }
            if (t1 && t2 && t3) {
                out.taus = {t1->tau, t2->tau, t3->tau};
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE12: {
            if (!detail::only_constant_lins(s) || L.size() != 3) return std::nullopt;
            if ((2 * m) % 3 != 0) return std::nullopt;
            int e = 2 * m / 3;
            if (L[0].mult == e && L[1].mult == e && L[2].mult == e) {
                out.taus = {L[0].tau, L[1].tau, L[2].tau};
                std::sort(out.taus.begin(), out.taus.end());
                return out;
            }
            return std::nullopt;
        }
        case QTag::QE13: {
            if (!detail::only_constant_lins(s) || L.size() != 3) return std::nullopt;
            if (m % 2 != 0) return std::nullopt;
            int e = m / 2;  // 2m/4
            for (std::size_t k = 0; k < 3; ++k) {
                std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
                if (L[k].mult == m && L[i].mult == e && L[j].mult == e) {
                    out.taus = {L[k].tau, std::min(L[i].tau, L[j].tau),
                                std::max(L[i].tau, L[j].tau)};
                    return out;
                }
            }
            return std::nullopt;
        }
        case QTag::QE14: {
            if (!detail::only_constant_lins(s) || L.size() != 2) return std::nullopt;
            auto na = divisor_n(m, L[0].mult), nb = divisor_n(m, L[1].mult);
            if (!na || !nb) return std::nullopt;
            // larger exponent (smaller n) first; ties by tau
            out.taus = {L[0].tau, L[1].tau};
            out.n1 = *na;
            out.n2 = *nb;
            return out;
        }
        case QTag::QE15: {
            if (!detail::only_constant_lins(s) || L.size() != 1) return std::nullopt;
            auto n = divisor_n(m, L[0].mult);
            if (!n) return std::nullopt;
            out.taus = {L[0].tau};
            out.n = *n;
            return out;
        }
        case QTag::QE16: {
            if (L.empty() && s.quads.empty() && !s.unsplittable) return out;
            return std::nullopt;
        }
        case QTag::Unmatched: return std::nullopt;
    }
    return std::nullopt;
}

// fixed priority: most-constrained forms first
inline const std::vector<QTag>& classify_priority() {
    static const std::vector<QTag> order = {
        QTag::QE1,  QTag::QE2,  QTag::QE4,  QTag::QE5, QTag::QE3,  QTag::QE6,
        QTag::QE7,  QTag::QE9,  QTag::QE10, QTag::QE11, QTag::QE13, QTag::QE8,
        QTag::QE12, QTag::QE14, QTag::QE15, QTag::QE16,
    };
    return order;
}

// all matching tags in priority order (usually zero or one)
inline std::vector<QClass> classify_all(const SchwarzEquation& eq) {
    detail::QShape s = detail::shape_of(eq.q());
    std::vector<QClass> out;
    for (QTag tag : classify_priority()) {
        auto m = match_tag(tag, eq.m(), s);
        if (m) out.push_back(std::move(*m));
    }
    return out;
}

// the unique matching tag under the documented priority order
inline QClass classify_q(const SchwarzEquation& eq) {
    auto all = classify_all(eq);
    if (all.empty()) {
        QClass un;
        un.tag = QTag::Unmatched;
        return un;
    }
    return all.front();
}

// ---- candidate exponent patterns per tag ----------------------------------

struct ExponentPattern {
    std::vector<int> exps;  // in the written slot order of the form
    std::optional<int> n, n1, n2;
};

// all legal multiplicity vectors for the tag at this m; empty when the tag's
// divisibility conditions reject m
inline std::vector<ExponentPattern> enumerate_candidates(int m, QTag tag) {
    if (tag == QTag::Unmatched)
        throw Error(ErrorKind::Internal, "no candidate patterns for Unmatched");
    std::vector<ExponentPattern> out;
    auto divisors_ge2 = [&]() {
        std::vector<int> ns;
        for (int n = 2; n <= 2 * m; ++n)
            if ((2 * m) % n == 0) ns.push_back(n);
        return ns;
    };
    switch (tag) {
        case QTag::QE1: out.push_back({{2 * m, 2 * m}, {}, {}, {}}); break;
        case QTag::QE2: out.push_back({{2 * m}, {}, {}, {}}); break;
        case QTag::QE3: out.push_back({{2 * m}, {}, {}, {}}); break;
        case QTag::QE4: out.push_back({{2 * m, m, m}, {}, {}, {}}); break;
        case QTag::QE5:
            for (int n : divisors_ge2()) out.push_back({{2 * m, 2 * m / n}, n, {}, {}});
            break;
        case QTag::QE6: out.push_back({{m, m, m, m}, {}, {}, {}}); break;
        case QTag::QE7:
            for (int n : divisors_ge2()) out.push_back({{m, m, 2 * m / n}, n, {}, {}});
            break;
        case QTag::QE8:
            if ((2 * m) % 3 == 0) out.push_back({{m, 2 * m / 3, 2 * m / 3}, {}, {}, {}});
            break;
        case QTag::QE9:
            if (m % 6 == 0) out.push_back({{m, 2 * m / 3, m / 2}, {}, {}, {}});
            break;
        case QTag::QE10:
            if ((2 * m) % 15 == 0) out.push_back({{m, 2 * m / 3, 2 * m / 5}, {}, {}, {}});
            break;
        case QTag::QE11:
            if (m % 3 == 0) out.push_back({{m, 2 * m / 3, m / 3}, {}, {}, {}});
            break;
        case QTag::QE12:
            if ((2 * m) % 3 == 0) {
                int e = 2 * m / 3;
                out.push_back({{e, e, e}, {}, {}, {}});
            }
            break;
        case QTag::QE13:
            if (m % 2 == 0) out.push_back({{m, m / 2, m / 2}, {}, {}, {}});
            break;
        case QTag::QE14:
            for (int na : divisors_ge2())
                for (int nb : divisors_ge2())
                    if (na <= nb) out.push_back({{2 * m / na, 2 * m / nb}, {}, na, nb});
            break;
        case QTag::QE15:
            for (int n : divisors_ge2()) out.push_back({{2 * m / n}, n, {}, {}});
            break;
        case QTag::QE16: out.push_back({{}, {}, {}, {}}); break;
        case QTag::Unmatched: break;
    }
    return out;
}

}  // namespace swz
