// Dense univariate polynomials with exact rational coefficients.
// The indeterminate is abstract; rendering picks the variable name.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swz/errors.hpp"
#include "swz/rat.hpp"

namespace swz {

class Poly {
public:
    Poly() = default;
    Poly(Rat c) {  // NOLINT: implicit constant
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    Poly(long long c) : Poly(Rat(c)) {}  // NOLINT
    Poly(int c) : Poly(Rat(c)) {}        // NOLINT
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    // The monomial c * x^k.
    static Poly monomial(Rat c, int k) {
        if (c.is_zero()) return Poly();
        std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const Rat& coeff(int k) const {
        static const Rat zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const Rat& leading() const {
        if (is_zero()) throw Error(ErrorKind::Internal, "leading coefficient of zero poly");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s.is_zero()) return Poly();
        std::vector<Rat> r(a.c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        q = Poly();
        r = a;
        int db = b.degree();
        const Rat& lb = b.leading();
        std::vector<Rat> qc;
        if (r.degree() >= db) qc.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            Rat f = r.leading() / lb;
            qc[static_cast<std::size_t>(k)] = f;
            r -= monomial(f, k) * b;
        }
        q = Poly(std::move(qc));
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1, Rat(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long long>(i));
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(x + c), exact Taylor shift
    Poly shifted(const Rat& c) const {
        Poly lin(std::vector<Rat>{c, Rat(1)});
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly base = *this, acc = Rat(1);
        while (e) {
            if (e & 1u) acc *= base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    // integer-primitive form: coefficients are coprime integers, leading > 0
    Poly primitive_integer() const {
        if (is_zero()) return *this;
        BigInt lcm(1);
        for (const auto& c : c_) {
            const BigInt& d = c.den();
            lcm = lcm / BigInt::gcd(lcm, d) * d;
        }
        std::vector<Rat> r(c_);
        for (auto& c : r) c *= Rat(lcm);
        BigInt content(0);
        for (const auto& c : r) content = BigInt::gcd(content, c.num());
        if (r.back().is_negative()) content = -content;
        Rat inv = Rat(content).inverse();
        for (auto& c : r) c *= inv;
        return Poly(std::move(r));
    }

    // monic gcd over Q, computed by a primitive pseudo-remainder sequence to
    // keep integer coefficients small
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero()) return b.is_zero() ? b : b.monic();
        if (b.is_zero()) return a.monic();
        a = a.primitive_integer();
        b = b.primitive_integer();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            // pseudo-remainder: scale by lc(b) each elimination step
            Poly r = a;
            const Rat& lb = b.leading();
            int db = b.degree();
            while (!r.is_zero() && r.degree() >= db) {
                int k = r.degree() - db;
                r = r * lb - monomial(r.leading(), k) * b;
            }
            a = std::move(b);
            b = r.is_zero() ? r : r.primitive_integer();
        }
        return a.monic();
    }

    // multiplicity of root x0 (0 when p(x0) != 0); p must be nonzero
    int root_multiplicity(const Rat& x0) const {
        if (is_zero()) throw Error(ErrorKind::ZeroFunction, "root multiplicity of zero poly");
        Poly p = *this;
        Poly lin(std::vector<Rat>{-x0, Rat(1)});
        int mult = 0;
        while (p.eval(x0).is_zero()) {
            p = p / lin;
            ++mult;
        }
        return mult;
    }

    // exact square root when one exists
    std::optional<Poly> sqrt_exact() const {
        if (is_zero()) return Poly();
        int d = degree();
        if (d % 2 != 0) return std::nullopt;
        auto lc = leading().sqrt_exact();
        if (!lc) return std::nullopt;
        int h = d / 2;
        std::vector<Rat> b(static_cast<std::size_t>(h) + 1, Rat(0));
        b[static_cast<std::size_t>(h)] = *lc;
        Rat two_lc = Rat(2) * (*lc);
        for (int j = 1; j <= h; ++j) {
            // match coefficient of x^(d-j)
            Rat s(0);
            for (int i = h - j + 1; i <= h; ++i) {
                int k = d - j - i;
                if (k > h || k < 0) continue;
                if (k <= h - j) continue;  // only already-known pairs above b[h-j]
                s += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k)];
            }
            b[static_cast<std::size_t>(h - j)] = (coeff(d - j) - s) / two_lc;
        }
        Poly cand{std::vector<Rat>(b)};
        if (cand * cand == *this) return cand;
        return std::nullopt;
    }

    // Rendering with explicit '*' between coefficient and variable.
    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rat& c = coeff(k);
            if (c.is_zero()) continue;
            Rat a = c.abs();
            if (out.empty()) {
                if (c.is_negative()) out += "-";
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            bool coef_one = a.is_one();
            if (k == 0) {
                out += a.to_string();
            } else {
                if (!coef_one) {
                    bool needs_paren = !a.is_integer();
                    if (needs_paren) out += "(" + a.to_string() + ")";
                    else out += a.to_string();
                    out += "*";
                }
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;  // c_[k] multiplies x^k; trailing zeros trimmed

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

}  // namespace swz
