#ifndef SUBFIELD_NUMERIC_HPP
#define SUBFIELD_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <string>

#include "subfield/errors.hpp"

namespace subfield {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_pow(std::uint64_t base, unsigned long exp) {
    return big_pow(BigInt(static_cast<unsigned long>(base)), exp);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// floor(a) for an exact rational a.
inline BigInt rational_floor(const Rational& a) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return r;
}

/// ceil(a) for an exact rational a.
inline BigInt rational_ceil(const Rational& a) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return r;
}

inline bool is_integer(const Rational& a) { return a.get_den() == 1; }

/// log2 of a positive big integer, accurate to double precision.
inline double big_log2(const BigInt& x) {
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

/// log2 of a positive rational.
inline double big_log2(const Rational& x) {
    return big_log2(BigInt(x.get_num())) - big_log2(BigInt(x.get_den()));
}

inline double rational_to_double(const Rational& x) { return x.get_d(); }

/// Parses "num/den" or "num" into an exact rational. Throws ParseError.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw ParseError("not a rational number: '" + text + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace subfield

#endif
