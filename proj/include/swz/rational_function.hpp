// Rational functions in one variable over Q, kept canonical:
// gcd(num, den) = 1 and den monic.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "swz/poly.hpp"

namespace swz {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(Rat c) : num_(std::move(c)), den_(Rat(1)) {}  // NOLINT
    RationalFunction(long long c) : num_(Rat(c)), den_(Rat(1)) {}  // NOLINT
    RationalFunction(int c) : num_(Rat(c)), den_(Rat(1)) {}        // NOLINT
    RationalFunction(Poly p) : num_(std::move(p)), den_(Rat(1)) {} // NOLINT
    RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RationalFunction var() { return RationalFunction(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(Rat(1)) && den_ == Poly(Rat(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == Poly(Rat(1)); }

    // constant value; only valid when is_constant()
    Rat constant_value() const {
        if (!is_constant()) throw Error(ErrorKind::Internal, "not a constant rational function");
        return num_.coeff(0);  // den is monic constant, i.e. 1
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                                den_ * den_);
    }

    RationalFunction pow(long long e) const {
        if (e < 0) {
            if (is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
            return RationalFunction(den_, num_).pow(-e);
        }
        return RationalFunction(num_.pow(static_cast<unsigned>(e)),
                                den_.pow(static_cast<unsigned>(e)));
    }

    // value at z0, or nullopt at a pole
    std::optional<Rat> eval(const Rat& z0) const {
        Rat d = den_.eval(z0);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(z0) / d;
    }

    bool regular_at(const Rat& z0) const { return !den_.eval(z0).is_zero(); }

    std::string to_string(const std::string& var = "z") const {
        if (is_polynomial()) return num_.to_string(var);
        std::string n = num_.to_string(var);
        std::string d = den_.to_string(var);
        if (num_.degree() > 0 || num_.coeff(0).is_negative() || !num_.coeff(0).is_integer())
            n = "(" + n + ")";
        d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    Poly num_, den_;

    void normalize() {
        if (den_.is_zero())
            throw Error(ErrorKind::DivisionByZero, "zero denominator in rational function");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat lc = den_.leading();
        if (!lc.is_one()) {
            Rat inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

// multiplicity of zero (positive) or pole (negative) of a at z0; 0 when regular
// and nonvanishing
inline int order_at(const RationalFunction& a, const Rat& z0) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "order_at of the zero function");
    return a.num().root_multiplicity(z0) - a.den().root_multiplicity(z0);
}

// square root in Q(z) when one exists
inline std::optional<RationalFunction> is_square(const RationalFunction& a) {
    if (a.is_zero()) return RationalFunction(Rat(0));
    auto ns = a.num().sqrt_exact();
    if (!ns) return std::nullopt;
    auto ds = a.den().sqrt_exact();
    if (!ds) return std::nullopt;
    RationalFunction r(*ns, *ds);
    // canonical sign: positive leading numerator coefficient
    if (r.num().leading().is_negative()) r = -r;
    return r;
}

inline std::string to_string(const RationalFunction& v) { return v.to_string(); }

}  // namespace swz
