#ifndef ORBITATLAS_RATIONAL_HPP
#define ORBITATLAS_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace orbitatlas {

// Exact rational scalar. All orbit classification in this library is
// rank-threshold logic, so every computation stays over Q; there is no
// floating point anywhere. mpq_class keeps the canonical invariant
// (denominator > 0, gcd(num, den) = 1) after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical "num/den" form, denominator always spelled out.
inline std::string rat_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q", "p" and plain integer strings.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace orbitatlas

#endif
