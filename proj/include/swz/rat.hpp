// Exact rational numbers over BigInt. Always canonical: gcd(|num|, den) = 1, den >= 1.
#pragma once

#include <optional>
#include <string>

#include "swz/bigint.hpp"
#include "swz/errors.hpp"

namespace swz {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rat(int v) : num_(v), den_(1) {}        // NOLINT
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt::from_string(s));
        return Rat(BigInt::from_string(s.substr(0, slash)),
                   BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return Rat(den_, num_);
    }

    Rat pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rat base = *this, acc = 1;
        while (e) {
            if (e & 1) acc *= base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Rat abs() const { return is_negative() ? -*this : *this; }

    // Exact square root when one exists in Q.
    std::optional<Rat> sqrt_exact() const {
        if (is_negative()) return std::nullopt;
        BigInt sn = num_.isqrt(), sd = den_.isqrt();
        if (sn * sn != num_ || sd * sd != den_) return std::nullopt;
        return Rat(sn, sd);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.is_negative()) q = q - BigInt(1);
        return q;
    }
    BigInt ceil() const { return -((-*this).floor()); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline std::string to_string(const Rat& v) { return v.to_string(); }

}  // namespace swz
