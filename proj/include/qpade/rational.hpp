#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpade {

// Exact arbitrary-precision scalars. mpq_class keeps values canonical
// (lowest terms, positive denominator) through arithmetic, which is the
// invariant everything downstream relies on.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt int_pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline BigInt int_pow(unsigned long base, unsigned long exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

// base^exponent for signed exponents; negative powers invert.
inline Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    const unsigned long mag = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                           : static_cast<unsigned long>(exponent);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    out.canonicalize();
    if (exponent < 0) {
        if (out == 0) throw std::domain_error("rational_pow: negative power of zero");
        out = 1 / out;
    }
    return out;
}

// p^exponent as a rational, exponent may be negative (p an integer base).
inline Rational power_of(unsigned long p, long exponent) {
    return rational_pow(Rational(p), exponent);
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline size_t bit_length(const BigInt& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Parses "a/b" or "a" in base 10 into a canonical rational.
inline Rational parse_rational(const std::string& text) {
    Rational out;
    if (text.empty() || mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (out.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    out.canonicalize();
    return out;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace qpade
