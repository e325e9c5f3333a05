/**
 * @file rational.hpp
 * @brief Exact rational scalar on 64-bit numerator/denominator.
 *
 * Invariant: denominator > 0 and gcd(|num|, den) = 1.  All arithmetic runs
 * through 128-bit intermediates and throws std::overflow_error when a reduced
 * result no longer fits in 64 bits, so results are exact or loudly absent.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kacmod {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(static_cast<__int128>(n), static_cast<__int128>(d)); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Smallest-denominator rational whose double value equals x exactly
    /// (continued-fraction search, denominators up to max_den).  Throws
    /// std::domain_error when no such fraction exists.  The default cap is
    /// small enough that doubles of generic irrationals are rejected: their
    /// first exactly-reproducing convergent needs a denominator near 1e8.
    static Rat from_double(double x, long long max_den = 1000000LL);

private:
    using i128 = __int128;

    long long num_;
    long long den_;

    static i128 abs128(i128 v) { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a); b = abs128(b);
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    void assign(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        if (n == 0) { num_ = 0; den_ = 1; return; }
        const i128 g = gcd128(n, d);
        n /= g; d /= g;
        constexpr i128 lo = static_cast<i128>(INT64_MIN);
        constexpr i128 hi = static_cast<i128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rat: value exceeds 64-bit range");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    static Rat from128(i128 n, i128 d) { Rat r; r.assign(n, d); return r; }
};

} // namespace kacmod
