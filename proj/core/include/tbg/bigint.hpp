#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace tbg {

/// Exact arbitrary-precision integer. All homology coordinates, genus values
/// and word-search matrices use this type; there are no range limits anywhere.
using Int = mpz_class;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int abs_val(const Int& x) { return Int(abs(x)); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Divisibility with the convention 0 | x  <=>  x = 0.
inline bool divides(const Int& a, const Int& b) {
    if (sign(a) == 0) return sign(b) == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

/// Exact quotient; the caller guarantees den | num and den != 0.
inline Int exact_div(const Int& num, const Int& den) {
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// gcd of all entries (non-negative); 0 exactly when every entry is 0.
inline Int content(std::span<const Int> v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline bool fits_int64(const Int& x) {
    return mpz_fits_slong_p(x.get_mpz_t()) != 0;
}

inline long to_long(const Int& x) { return mpz_get_si(x.get_mpz_t()); }

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace tbg
