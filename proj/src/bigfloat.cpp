#include "qpade/bigfloat.hpp"

#include <climits>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qpade {

namespace {

// Scoped mpfr temporary.
struct Scratch {
    explicit Scratch(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~Scratch() { mpfr_clear(x); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    mpfr_t x;
};

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
    mpfr_init2(error_, kErrPrec);
    mpfr_set_zero(error_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    mpfr_init2(error_, kErrPrec);
    mpfr_set(error_, other.error_, MPFR_RNDU);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, 64);
    mpfr_init2(error_, kErrPrec);
    mpfr_swap(value_, other.value_);
    mpfr_swap(error_, other.error_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        mpfr_set(error_, other.error_, MPFR_RNDU);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    mpfr_swap(error_, other.error_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
    mpfr_clear(error_);
}

void BigFloat::bump_rounding(mpfr_t err, const mpfr_t v, int ternary) {
    if (ternary == 0) return;
    if (mpfr_zero_p(v) || !mpfr_number_p(v))
        throw std::logic_error("BigFloat: inexact rounding to zero or non-finite value");
    const mpfr_exp_t ulp_exp = mpfr_get_exp(v) - mpfr_get_prec(v);
    Scratch u(32);
    mpfr_set_ui_2exp(u.x, 1, ulp_exp, MPFR_RNDU);
    mpfr_add(err, err, u.x, MPFR_RNDU);
}

BigFloat BigFloat::from_rational(const Rational& x, mpfr_prec_t precision) {
    BigFloat out(precision);
    int t = mpfr_set_q(out.value_, x.get_mpq_t(), MPFR_RNDN);
    bump_rounding(out.error_, out.value_, t);
    return out;
}

BigFloat BigFloat::from_integer(const BigInt& x) {
    const mpfr_prec_t prec =
        std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(bit_length(x)) + 1);
    BigFloat out(prec);
    int t = mpfr_set_z(out.value_, x.get_mpz_t(), MPFR_RNDN);
    if (t != 0) throw std::logic_error("BigFloat::from_integer: conversion was not exact");
    return out;
}

BigFloat BigFloat::from_unsigned(unsigned long x) { return from_integer(BigInt(x)); }

BigFloat BigFloat::ln_of_integer(const BigInt& x, mpfr_prec_t precision) {
    if (x <= 0) throw std::domain_error("ln_of_integer: argument must be positive");
    BigFloat arg(precision);
    int t = mpfr_set_z(arg.value_, x.get_mpz_t(), MPFR_RNDN);
    bump_rounding(arg.error_, arg.value_, t);
    return arg.ln_abs();
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    int t = mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    mpfr_add(out.error_, a.error_, b.error_, MPFR_RNDU);
    BigFloat::bump_rounding(out.error_, out.value_, t);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    int t = mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    mpfr_add(out.error_, a.error_, b.error_, MPFR_RNDU);
    BigFloat::bump_rounding(out.error_, out.value_, t);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    int t = mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);

    // |a| e_b + |b| e_a + e_a e_b, all upward
    Scratch aa(BigFloat::kErrPrec), bb(BigFloat::kErrPrec), term(BigFloat::kErrPrec);
    mpfr_abs(aa.x, a.value_, MPFR_RNDU);
    mpfr_abs(bb.x, b.value_, MPFR_RNDU);
    mpfr_mul(term.x, aa.x, b.error_, MPFR_RNDU);
    mpfr_add(out.error_, out.error_, term.x, MPFR_RNDU);
    mpfr_mul(term.x, bb.x, a.error_, MPFR_RNDU);
    mpfr_add(out.error_, out.error_, term.x, MPFR_RNDU);
    mpfr_mul(term.x, a.error_, b.error_, MPFR_RNDU);
    mpfr_add(out.error_, out.error_, term.x, MPFR_RNDU);
    BigFloat::bump_rounding(out.error_, out.value_, t);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (!b.nonzero_certified())
        throw std::domain_error("BigFloat division: divisor not certified nonzero");
    BigFloat out(std::max(a.precision(), b.precision()));
    int t = mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);

    // m = |b| - e_b (downward) is a positive lower bound for the divisor;
    // |a*/b* - a/b| <= (e_a + |a/b| e_b) / m.
    Scratch m(BigFloat::kErrPrec), q(BigFloat::kErrPrec), num(BigFloat::kErrPrec),
        t1(BigFloat::kErrPrec);
    mpfr_abs(m.x, b.value_, MPFR_RNDD);
    mpfr_sub(m.x, m.x, b.error_, MPFR_RNDD);
    if (mpfr_sgn(m.x) <= 0)
        throw std::domain_error("BigFloat division: divisor not certified nonzero");
    mpfr_abs(q.x, a.value_, MPFR_RNDU);
    mpfr_div(q.x, q.x, m.x, MPFR_RNDU);  // >= |a/b|
    mpfr_mul(t1.x, q.x, b.error_, MPFR_RNDU);
    mpfr_add(num.x, a.error_, t1.x, MPFR_RNDU);
    mpfr_div(num.x, num.x, m.x, MPFR_RNDU);
    mpfr_add(out.error_, out.error_, num.x, MPFR_RNDU);
    BigFloat::bump_rounding(out.error_, out.value_, t);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(*this);
    mpfr_abs(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::ln_abs() const {
    Scratch m(kErrPrec);
    mpfr_abs(m.x, value_, MPFR_RNDD);
    mpfr_sub(m.x, m.x, error_, MPFR_RNDD);
    if (mpfr_sgn(m.x) <= 0)
        throw std::domain_error("BigFloat::ln_abs: value not certified nonzero");

    BigFloat out(precision());
    Scratch av(precision());
    mpfr_abs(av.x, value_, MPFR_RNDN);  // exact
    int t = mpfr_log(out.value_, av.x, MPFR_RNDN);

    // |ln(v +- e) - ln v| <= e / (|v| - e)
    Scratch prop(kErrPrec);
    mpfr_div(prop.x, error_, m.x, MPFR_RNDU);
    mpfr_add(out.error_, out.error_, prop.x, MPFR_RNDU);
    bump_rounding(out.error_, out.value_, t);
    return out;
}

void BigFloat::inflate_error(const Rational& extra) {
    Scratch e(kErrPrec);
    mpfr_set_q(e.x, extra.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(e.x, e.x, MPFR_RNDU);
    mpfr_add(error_, error_, e.x, MPFR_RNDU);
}

void BigFloat::inflate_error_pow2(long exponent2) {
    Scratch e(32);
    mpfr_set_ui_2exp(e.x, 1, exponent2, MPFR_RNDU);
    mpfr_add(error_, error_, e.x, MPFR_RNDU);
}

bool BigFloat::nonzero_certified() const {
    Scratch m(kErrPrec);
    mpfr_abs(m.x, value_, MPFR_RNDD);
    return mpfr_cmp(m.x, error_) > 0;
}

bool BigFloat::error_below_half_magnitude() const {
    // |true| >= |v| - err, so |v| > 3 err implies err < |true|/2.
    Scratch triple(kErrPrec), v(kErrPrec);
    mpfr_mul_ui(triple.x, error_, 3, MPFR_RNDU);
    mpfr_abs(v.x, value_, MPFR_RNDD);
    return mpfr_cmp(v.x, triple.x) > 0;
}

int BigFloat::certified_sign() const {
    if (!nonzero_certified())
        throw std::logic_error("BigFloat::certified_sign: sign not certified");
    return mpfr_sgn(value_);
}

bool BigFloat::certainly_le(const Rational& bound) const {
    Scratch u(kErrPrec);
    mpfr_add(u.x, value_, error_, MPFR_RNDU);
    return mpfr_cmp_q(u.x, bound.get_mpq_t()) <= 0;
}

bool BigFloat::certainly_ge(const Rational& bound) const {
    Scratch l(kErrPrec);
    mpfr_sub(l.x, value_, error_, MPFR_RNDD);
    return mpfr_cmp_q(l.x, bound.get_mpq_t()) >= 0;
}

bool BigFloat::abs_certainly_le(const Rational& bound) const {
    Scratch u(kErrPrec);
    mpfr_abs(u.x, value_, MPFR_RNDU);
    mpfr_add(u.x, u.x, error_, MPFR_RNDU);
    return mpfr_cmp_q(u.x, bound.get_mpq_t()) <= 0;
}

bool BigFloat::abs_certainly_below(const BigFloat& other) const {
    Scratch mine(kErrPrec), theirs(kErrPrec);
    mpfr_abs(mine.x, value_, MPFR_RNDU);
    mpfr_add(mine.x, mine.x, error_, MPFR_RNDU);
    mpfr_abs(theirs.x, other.value_, MPFR_RNDD);
    mpfr_sub(theirs.x, theirs.x, other.error_, MPFR_RNDD);
    return mpfr_cmp(mine.x, theirs.x) < 0;
}

bool BigFloat::consistent_with(const BigFloat& other) const {
    const mpfr_prec_t prec = std::max(precision(), other.precision());
    Scratch diff(prec), budget(kErrPrec);
    mpfr_sub(diff.x, value_, other.value_, MPFR_RNDA);
    mpfr_abs(diff.x, diff.x, MPFR_RNDU);
    mpfr_add(budget.x, error_, other.error_, MPFR_RNDD);
    return mpfr_cmp(diff.x, budget.x) <= 0;
}

bool BigFloat::within(double center, double tolerance) const {
    Scratch gap(std::max<mpfr_prec_t>(precision(), 64));
    mpfr_sub_d(gap.x, value_, center, MPFR_RNDA);
    mpfr_abs(gap.x, gap.x, MPFR_RNDU);
    mpfr_add(gap.x, gap.x, error_, MPFR_RNDU);
    return mpfr_cmp_d(gap.x, tolerance) <= 0;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double BigFloat::error_to_double() const { return mpfr_get_d(error_, MPFR_RNDU); }

bool BigFloat::error_is_zero() const { return mpfr_zero_p(error_); }

namespace {

std::string format_mpfr(const mpfr_t x, const char* format, int digits) {
    char stack_buf[256];
    int needed = mpfr_snprintf(stack_buf, sizeof(stack_buf), format, digits, x);
    if (needed < 0) throw std::runtime_error("mpfr_snprintf failed");
    if (static_cast<size_t>(needed) < sizeof(stack_buf)) return std::string(stack_buf);
    std::vector<char> buf(static_cast<size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), format, digits, x);
    return std::string(buf.data());
}

}  // namespace

std::string BigFloat::value_string(int significant_digits) const {
    return format_mpfr(value_, "%.*Re", std::max(0, significant_digits - 1));
}

std::string BigFloat::value_general_string(int significant_digits) const {
    return format_mpfr(value_, "%.*Rg", std::max(1, significant_digits));
}

std::string BigFloat::value_fixed_string(int decimals) const {
    return format_mpfr(value_, "%.*Rf", std::max(0, decimals));
}

std::string BigFloat::error_string() const {
    if (mpfr_zero_p(error_)) return "0";
    return format_mpfr(error_, "%.*Re", 1);
}

long BigFloat::error_exponent2() const {
    if (mpfr_zero_p(error_)) return LONG_MIN;
    return static_cast<long>(mpfr_get_exp(error_));
}

}  // namespace qpade
