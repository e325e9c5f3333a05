#include <kacmod/radical.hpp>

#include <cmath>
#include <numeric>

namespace kacmod {

namespace {

// n = square * radicand with radicand squarefree (n >= 1).
void split_square(long long n, long long& square_root, long long& radicand) {
    square_root = 1;
    radicand = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2 == 1) radicand *= p;
    }
    radicand *= n; // remaining prime factor, exponent 1
}

} // namespace

Radical Radical::sqrt_of_int(long long n) {
    if (n < 0) throw std::domain_error("Radical: square root of negative integer");
    if (n == 0) return Radical();
    long long s = 0, r = 0;
    split_square(n, s, r);
    Radical out;
    out.add_term(r, Rat(s));
    return out;
}

Radical Radical::sqrt_of_ratio(long long p, long long q) {
    if (q <= 0) throw std::domain_error("Radical: nonpositive denominator under root");
    if (p < 0) throw std::domain_error("Radical: square root of negative ratio");
    if (p == 0) return Radical();
    const long long g = std::gcd(p, q);
    p /= g; q /= g;
    // sqrt(p/q) = sqrt(p*q)/q with p, q coprime.
    Radical root = sqrt_of_int(p * q);
    Radical out;
    for (const auto& [rad, coeff] : root.terms_)
        out.add_term(rad, coeff / Rat(q));
    return out;
}

double Radical::to_double() const {
    double acc = 0.0;
    for (const auto& [rad, coeff] : terms_)
        acc += coeff.to_double() * std::sqrt(static_cast<double>(rad));
    return acc;
}

void Radical::add_term(long long radicand, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Radical operator+(const Radical& a, const Radical& b) {
    Radical out = a;
    for (const auto& [rad, coeff] : b.terms_)
        out.add_term(rad, coeff);
    return out;
}

Radical operator-(const Radical& a, const Radical& b) {
    Radical out = a;
    for (const auto& [rad, coeff] : b.terms_)
        out.add_term(rad, -coeff);
    return out;
}

Radical Radical::operator-() const {
    Radical out;
    for (const auto& [rad, coeff] : terms_)
        out.terms_[rad] = -coeff;
    return out;
}

Radical operator*(const Radical& a, const Radical& b) {
    Radical out;
    for (const auto& [ra, ca] : a.terms_) {
        for (const auto& [rb, cb] : b.terms_) {
            // sqrt(ra)*sqrt(rb) = g*sqrt(u*v) with ra = g*u, rb = g*v;
            // u and v are coprime and squarefree, so u*v is squarefree.
            const long long g = std::gcd(ra, rb);
            out.add_term((ra / g) * (rb / g), ca * cb * Rat(g));
        }
    }
    return out;
}

Radical Radical::inverse() const {
    if (terms_.empty())
        throw std::domain_error("Radical: inverse of zero");
    if (terms_.size() == 1) {
        const auto& [rad, coeff] = *terms_.begin();
        // (c*sqrt(r))^{-1} = sqrt(r)/(c*r)
        Radical out;
        out.add_term(rad, Rat(1) / (coeff * Rat(rad)));
        return out;
    }
    if (terms_.size() == 2) {
        auto it = terms_.begin();
        const auto [r1, c1] = *it++;
        const auto [r2, c2] = *it;
        // Conjugate trick: (x+y)(x-y) = x^2 - y^2 is rational.
        Radical conj;
        conj.add_term(r1, c1);
        conj.add_term(r2, -c2);
        const Rat norm = c1 * c1 * Rat(r1) - c2 * c2 * Rat(r2);
        if (norm.is_zero())
            throw std::domain_error("Radical: degenerate two-term inverse");
        Radical out;
        for (const auto& [rad, coeff] : conj.terms_)
            out.add_term(rad, coeff / norm);
        return out;
    }
    throw std::domain_error("Radical: inverse unsupported for sums of 3+ terms");
}

std::string Radical::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, coeff] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (rad == 1) {
            out += coeff.str();
        } else {
            out += coeff.str() + "*sqrt(" + std::to_string(rad) + ")";
        }
    }
    return out;
}

} // namespace kacmod
