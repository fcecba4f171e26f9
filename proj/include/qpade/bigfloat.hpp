#pragma once

#include "qpade/rational.hpp"

#include <mpfr.h>

#include <string>

namespace qpade {

// A binary float at explicit precision together with a certified absolute
// error bound: the true quantity lies in [value - err, value + err]. Bounds
// are propagated conservatively (directed rounding, one ulp per inexact
// operation), so every derived predicate below is a certificate rather than
// a heuristic.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& x, mpfr_prec_t precision);
    // Exact conversion (error bound 0); precision adapts to the bit length.
    static BigFloat from_integer(const BigInt& x);
    static BigFloat from_unsigned(unsigned long x);
    // Certified ln of a positive integer.
    static BigFloat ln_of_integer(const BigInt& x, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    // Requires the divisor to be certifiably nonzero.
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat abs() const;

    // Certified ln|x|; requires |value| - err > 0.
    BigFloat ln_abs() const;

    // Adds an extra error term (e.g. a series tail bound). Negative input is
    // taken by magnitude.
    void inflate_error(const Rational& extra);
    void inflate_error_pow2(long exponent2);  // adds 2^exponent2

    // --- certified predicates ---------------------------------------------
    bool nonzero_certified() const;  // |value| > err
    // err < |true value|/2, i.e. the stored sign is certified with margin.
    bool error_below_half_magnitude() const;
    // Sign of the true quantity; throws std::logic_error if not certified.
    int certified_sign() const;
    bool certainly_le(const Rational& bound) const;      // value + err <= bound
    bool certainly_ge(const Rational& bound) const;      // value - err >= bound
    bool abs_certainly_le(const Rational& bound) const;  // |value| + err <= bound
    // |this| certainly below |other|: |v| + e < |v'| - e'.
    bool abs_certainly_below(const BigFloat& other) const;
    // The two balls intersect, i.e. |v1 - v2| <= e1 + e2.
    bool consistent_with(const BigFloat& other) const;
    // |value - center| + err <= tolerance (doubles are exact binary values).
    bool within(double center, double tolerance) const;

    // --- views --------------------------------------------------------------
    double to_double() const;
    double error_to_double() const;  // may underflow to 0 for tiny bounds
    bool error_is_zero() const;
    std::string value_string(int significant_digits) const;  // scientific
    std::string value_general_string(int significant_digits) const;
    std::string value_fixed_string(int decimals) const;
    std::string error_string() const;  // two-digit scientific upper bound
    // floor(log2 err), or LONG_MIN when the bound is exactly zero.
    long error_exponent2() const;

    const mpfr_t& raw_value() const { return value_; }
    const mpfr_t& raw_error() const { return error_; }

private:
    static constexpr mpfr_prec_t kErrPrec = 64;

    // Adds one ulp of v to the error bound when an operation was inexact.
    static void bump_rounding(mpfr_t err, const mpfr_t v, int ternary);

    mpfr_t value_;
    mpfr_t error_;  // >= 0, always rounded upward
};

}  // namespace qpade
