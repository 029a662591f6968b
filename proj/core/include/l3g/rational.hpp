#ifndef L3G_RATIONAL_HPP
#define L3G_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "l3g/common.hpp"

namespace l3g {

/// Exact rational on 64-bit numerator/denominator, always stored reduced
/// with a positive denominator. Intermediate products go through 128-bit
/// arithmetic; a result that cannot be reduced back into 64 bits throws
/// errc::overflow. Densities, average degrees and every identity check in
/// the library use this type, so equality tests carry no float tolerance.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) fail(errc::bad_argument, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Reduced form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p", "p/q", or a plain decimal like "0.85".
    static Rational parse(const std::string& text);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(w(a.num_) * b.den_ + w(b.num_) * a.den_, w(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(w(a.num_) * b.den_ - w(b.num_) * a.den_, w(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(w(a.num_) * b.num_, w(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(errc::bad_argument, "rational division by zero");
        return from_i128(w(a.num_) * b.den_, w(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return w(a.num_) * b.den_ < w(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using i128 = __int128;

    static i128 w(std::int64_t v) { return static_cast<i128>(v); }

    static Rational from_i128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            num /= a;
            den /= a;
        }
        constexpr i128 lo = static_cast<i128>(INT64_MIN);
        constexpr i128 hi = static_cast<i128>(INT64_MAX);
        if (num < lo || num > hi || den > hi)
            fail(errc::overflow, "rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Smallest integer >= a/b for a positive rational.
inline std::int64_t ceil_div(const Rational& r) {
    if (r.num() <= 0) return r.num() / r.den();
    return (r.num() + r.den() - 1) / r.den();
}

}  // namespace l3g

#endif
