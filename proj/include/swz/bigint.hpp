// Arbitrary-precision signed integers, sign-magnitude over 32-bit limbs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "swz/errors.hpp"

namespace swz {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, mirrors built-in ints
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size()) throw Error(ErrorKind::Internal, "empty integer literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error(ErrorKind::Internal, "bad digit in integer literal: " + s);
            r = r.mul_small(10);
            r = r + BigInt(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool is_even() const { return is_zero() || (mag_[0] & 1u) == 0; }

    // Fits in long long? (used for diagnostics and small fast paths)
    bool fits_ll() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_ull_unchecked();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }
    long long to_ll() const {
        unsigned long long u = to_ull_unchecked();
        return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division; remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "integer division by zero");
        if (a.is_zero()) {
            q = BigInt();
            r = BigInt();
            return;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.trim();
        r.trim();
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.mag_.empty()) r.sign_ = a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, acc = 1;
        while (e) {
            if (e & 1u) acc *= base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Floor of the square root of a non-negative integer.
    BigInt isqrt() const {
        if (sign_ < 0) throw Error(ErrorKind::Internal, "isqrt of negative");
        if (is_zero()) return BigInt();
        std::size_t bits = bit_length();
        BigInt x = BigInt(1);
        x = x.shl((bits + 1) / 2);
        for (;;) {
            BigInt y = (x + *this / x) / 2;
            if (y >= x) break;
            x = y;
        }
        return x;
    }

    std::size_t bit_length() const {
        if (is_zero()) return 0;
        uint32_t top = mag_.back();
        std::size_t b = (mag_.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            // divide magnitude by 10^9, collect remainder
            uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            char buf[10];
            for (int d = 0; d < 9; ++d) {
                buf[d] = static_cast<char>('0' + rem % 10);
                rem /= 10;
            }
            if (tmp.empty()) {
                int top = 8;
                while (top > 0 && buf[top] == '0') --top;
                for (int d = 0; d <= top; ++d) digits.push_back(buf[d]);
            } else {
                digits.append(buf, buf + 9);
            }
        }
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian limbs; empty iff zero

    unsigned long long to_ull_unchecked() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    BigInt mul_small(uint32_t v) const {
        if (is_zero() || v == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.mag_.resize(mag_.size() + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(mag_[i]) * v + carry;
            r.mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.mag_[mag_.size()] = static_cast<uint32_t>(carry);
        r.trim();
        return r;
    }

    BigInt shl(std::size_t bits) const {
        if (is_zero()) return BigInt();
        std::size_t words = bits / 32, rem = bits % 32;
        BigInt r;
        r.sign_ = sign_;
        r.mag_.assign(words, 0);
        uint32_t carry = 0;
        for (uint32_t limb : mag_) {
            if (rem == 0) {
                r.mag_.push_back(limb);
            } else {
                r.mag_.push_back((limb << rem) | carry);
                carry = limb >> (32 - rem);
            }
        }
        if (rem != 0 && carry) r.mag_.push_back(carry);
        r.trim();
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D. Requires |a| >= |b|, b nonzero.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        const uint64_t BASE = 1ULL << 32;
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the top limb of v has its high bit set
        int shift = 0;
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::size_t n = b.size(), m = a.size() - n;
        std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint32_t lo = a[i] << shift;
            uint32_t hi = shift ? (i ? (a[i - 1] >> (32 - shift)) : 0) : 0;
            u[i] = lo | hi;
        }
        u[a.size()] = shift ? (a.back() >> (32 - shift)) : 0;
        for (std::size_t i = 0; i < n; ++i) {
            uint32_t lo = b[i] << shift;
            uint32_t hi = shift ? (i ? (b[i - 1] >> (32 - shift)) : 0) : 0;
            v[i] = lo | hi;
        }
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= BASE ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= BASE) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) {
                    t += static_cast<int64_t>(BASE);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += static_cast<int64_t>(BASE);
                --qhat;
                uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= static_cast<int64_t>(BASE) - 1;
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        // denormalize remainder
        r.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            uint32_t lo = u[i] >> shift;
            uint32_t hi = shift ? ((i + 1 < u.size()) ? (u[i + 1] << (32 - shift)) : 0) : 0;
            r[i] = lo | hi;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace swz
