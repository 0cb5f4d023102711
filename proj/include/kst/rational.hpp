#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace kst {

// Arbitrary-precision rationals. GMP keeps values canonical (lowest terms,
// positive denominator), which is exactly the exactnum invariant.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& r) { return sgn(r); }

inline Rational rational_of(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q" with optional surrounding spaces.
Rational rational_from_string(const std::string& s);

// Lowest terms; "/q" omitted when q = 1.
std::string rational_to_string(const Rational& r);

} // namespace kst
