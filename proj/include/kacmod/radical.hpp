/**
 * @file radical.hpp
 * @brief Exact scalar field Q(sqrt(n1), sqrt(n2), ...) for classical checks.
 *
 * A value is a finite sum of terms c * sqrt(r) with rational c and positive
 * squarefree integer r (r = 1 carries the rational part).  Distinct
 * squarefree radicands are linearly independent over Q, so the representation
 * is canonical: equality is term-by-term, and zero is the empty sum.
 */
#pragma once

#include <kacmod/rational.hpp>

#include <map>
#include <stdexcept>

namespace kacmod {

class Radical {
public:
    Radical() = default;
    Radical(const Rat& r) { if (!r.is_zero()) terms_[1] = r; }
    Radical(long long n) : Radical(Rat(n)) {}

    /// sqrt(n) for n >= 0, reduced to s*sqrt(r) with r squarefree.
    static Radical sqrt_of_int(long long n);

    /// sqrt(p/q) = sqrt(p*q)/q for p >= 0, q > 0.
    static Radical sqrt_of_ratio(long long p, long long q);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    /// The rational part (coefficient of sqrt(1)).
    Rat rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    double to_double() const;

    friend Radical operator+(const Radical& a, const Radical& b);
    friend Radical operator-(const Radical& a, const Radical& b);
    friend Radical operator*(const Radical& a, const Radical& b);
    Radical operator-() const;

    Radical& operator+=(const Radical& o) { *this = *this + o; return *this; }
    Radical& operator-=(const Radical& o) { *this = *this - o; return *this; }
    Radical& operator*=(const Radical& o) { *this = *this * o; return *this; }

    /// Exact inverse.  Supported for sums of at most two terms (a single term
    /// inverts directly, a two-term sum through its conjugate); larger sums
    /// throw std::domain_error.
    Radical inverse() const;

    friend Radical operator/(const Radical& a, const Radical& b) { return a * b.inverse(); }

    friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

    std::string str() const;

private:
    // radicand (positive squarefree) -> coefficient; no zero coefficients.
    std::map<long long, Rat> terms_;

    void add_term(long long radicand, const Rat& coeff);
};

} // namespace kacmod
