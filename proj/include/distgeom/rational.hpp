#ifndef DISTGEOM_RATIONAL_HPP
#define DISTGEOM_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace distgeom {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>=1 after
// canonicalize(), which matches the invariants we need.
using Rational = mpq_class;

inline Rational rational_from_long(long n, unsigned long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "123", "-4/7", and decimal strings like "0.25" or "-1.5e-3".
Rational parse_rational(const std::string& text);

// "n" when den==1, else "n/d".
std::string rational_to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace distgeom

#endif
