#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace bianchi {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int sign(const Integer& a) { return sgn(a); }

inline std::string to_string(const Integer& a) { return a.get_str(); }

// Exact ratio a/b, canonicalized.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool fits_int64(const Integer& a) { return a.fits_slong_p(); }

}  // namespace bianchi
