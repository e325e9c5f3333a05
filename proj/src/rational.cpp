#include <kacmod/rational.hpp>

#include <cmath>

namespace kacmod {

Rat Rat::from_double(double x, long long max_den) {
    if (!std::isfinite(x))
        throw std::domain_error("Rat::from_double: non-finite input");
    if (x == std::floor(x) && std::fabs(x) < 9.0e18)
        return Rat(static_cast<long long>(x));

    // Continued-fraction convergents p/q of x; accept the first convergent
    // that reproduces x exactly in double arithmetic.
    double frac = x;
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(frac));
    long long q_cur = 1;
    frac -= std::floor(frac);
    for (int it = 0; it < 64; ++it) {
        if (static_cast<double>(p_cur) / static_cast<double>(q_cur) == x)
            return Rat(p_cur, q_cur);
        if (frac == 0.0) break;
        frac = 1.0 / frac;
        const double fl = std::floor(frac);
        if (fl > 9.0e18) break;
        const long long a = static_cast<long long>(fl);
        frac -= fl;
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        if (q_next > max_den || q_next <= 0) break;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
    }
    throw std::domain_error("Rat::from_double: no small exact fraction for input");
}

} // namespace kacmod
