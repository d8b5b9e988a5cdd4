#ifndef GAUGEDIM_RATIONAL_HPP
#define GAUGEDIM_RATIONAL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "gaugedim/errors.hpp"

namespace gaugedim {

using int128 = __int128;

namespace detail {

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("rational arithmetic overflow (128-bit)");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("rational arithmetic overflow (128-bit)");
    return r;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    char buf[48];
    int i = 48;
    while (u != 0) {
        buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s(buf + i, buf + 48);
    return neg ? "-" + s : s;
}

} // namespace detail

/// Exact rational with 128-bit numerator/denominator, always normalized
/// (den > 0, gcd 1). Covers the seven-adic interval endpoints, dyadic grids
/// and {1/n} points without rounding; overflow throws rather than degrades.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}

    Rational(long long n) : num_(n), den_(1) {}

    Rational(int128 num, int128 den) : num_(num), den_(den) {
        if (den_ == 0) throw precondition_error("rational with zero denominator");
        normalize();
    }

    /// Exact value of a finite double (every finite double is p/2^k).
    static Rational from_double(double v) {
        if (!std::isfinite(v)) throw precondition_error("rational from non-finite double");
        if (v == 0.0) return Rational();
        int exp = 0;
        double m = std::frexp(v, &exp); // v = m * 2^exp, |m| in [0.5, 1)
        // 53 mantissa bits
        auto n = static_cast<long long>(std::ldexp(m, 53));
        exp -= 53;
        Rational r(n, 1);
        if (exp > 0) {
            if (exp > 74) throw overflow_error("double exponent too large for exact rational");
            return Rational(detail::checked_mul(n, int128(1) << exp), 1);
        }
        if (exp < -126) {
            // fold what we can; desk-scale inputs never get here
            throw overflow_error("double exponent too small for exact rational");
        }
        return Rational(n, int128(1) << (-exp));
    }

    /// base^exp as an exact rational; exp may be negative.
    static Rational power(int base, int exp) {
        if (base <= 0) throw precondition_error("rational power needs positive base");
        int128 p = 1;
        for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) p = detail::checked_mul(p, base);
        return exp < 0 ? Rational(1, p) : Rational(p, 1);
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        int128 g = detail::gcd128(den_, o.den_);
        int128 l = detail::checked_mul(den_ / g, o.den_);
        int128 n = detail::checked_add(detail::checked_mul(num_, o.den_ / g),
                                       detail::checked_mul(o.num_, den_ / g));
        return Rational(n, l);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        // cross-reduce before multiplying
        int128 g1 = detail::gcd128(num_, o.den_);
        int128 g2 = detail::gcd128(o.num_, den_);
        return Rational(detail::checked_mul(num_ / g1, o.num_ / g2),
                        detail::checked_mul(den_ / g2, o.den_ / g1));
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw precondition_error("rational division by zero");
        return *this * Rational(o.den_, o.num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational half() const { return Rational(num_, detail::checked_mul(den_, 2)); }

    std::strong_ordering operator<=>(const Rational& o) const {
        // num_/den_ ? o.num_/o.den_  with positive denominators
        int128 l = detail::checked_mul(num_, o.den_);
        int128 r = detail::checked_mul(o.num_, den_);
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const {
        if (den_ == 1) return detail::to_string128(num_);
        return detail::to_string128(num_) + "/" + detail::to_string128(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = detail::gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_;
    int128 den_;
};

} // namespace gaugedim

#endif
