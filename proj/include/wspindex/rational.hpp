#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>

#include "wspindex/errors.hpp"

namespace wspindex {

// Exact rational number over int64 with overflow-checked arithmetic.
// All weight/phase/degree bookkeeping in this project stays within tiny
// denominators, but every operation still goes through a checked __int128
// intermediate so silent wraparound is impossible.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    // Integer floor, exact for negatives: floor(-3/2) = -2.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Value reduced into [0, 1), used for group-element phases.
    Rational mod1() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(checked_neg(num_), den_, already_normalized_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.num_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArithmeticOverflow("rational division by zero");
        __int128 n = (__int128)a.num_ * b.den_;
        __int128 d = (__int128)a.den_ * b.num_;
        return from_i128(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return (double)num_ / (double)den_; }

    // Canonical form "p/q" with q >= 1, always with an explicit denominator.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q" with optional leading sign; q must be positive.
    static Rational parse(const std::string& text);

private:
    struct already_normalized_tag {};
    Rational(long long n, long long d, already_normalized_tag) : num_(n), den_(d) {}

    static long long checked_neg(long long v) {
        if (v == INT64_MIN) throw ArithmeticOverflow("rational negation overflow");
        return -v;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw ArithmeticOverflow("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd_i128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw ArithmeticOverflow("rational arithmetic overflow");
        return Rational((long long)n, (long long)d, already_normalized_tag{});
    }

    static __int128 gcd_i128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw ArithmeticOverflow("rational with zero denominator");
        if (den_ < 0) { num_ = checked_neg(num_); den_ = checked_neg(den_); }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw SyntaxError(0, "empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
        throw SyntaxError(pos, "expected digits in rational literal '" + text + "'");
    long long num = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
        num = num * 10 + (text[pos] - '0');
        if (num < 0) throw ArithmeticOverflow("rational literal too large");
        ++pos;
    }
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw SyntaxError(pos, "expected denominator digits in '" + text + "'");
        den = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            den = den * 10 + (text[pos] - '0');
            if (den < 0) throw ArithmeticOverflow("rational literal too large");
            ++pos;
        }
        if (den == 0) throw SyntaxError(pos, "zero denominator in '" + text + "'");
    }
    if (pos != text.size()) throw SyntaxError(pos, "trailing characters in rational '" + text + "'");
    return Rational(negative ? -num : num, den);
}

} // namespace wspindex
