#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pim/errors.hpp"

namespace pim {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw Error("expected integer, got " + r.get_str());
    return r.get_num();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// base^e for e of either sign; throws on 0^negative.
inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw Error("0 to a negative power");
    return pow_rat(1 / base, -e);
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Gamma(a)/Gamma(b) for integers a,b >= 1, as an exact rational.
inline Rat gamma_ratio(unsigned long a, unsigned long b) {
    return Rat(factorial(a - 1)) / Rat(factorial(b - 1));
}

inline long ord_p(Int n, long p) {
    if (n == 0) throw Error("ord_p of 0");
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

// Canonicalized quotient.  The two-argument mpq_class constructor does NOT
// reduce, so every non-literal numerator/denominator pair goes through here.
inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw Error("frac: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

}  // namespace pim
