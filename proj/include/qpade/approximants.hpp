#pragma once

#include "qpade/bigfloat.hpp"
#include "qpade/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qpade {

// The three Lambert-type targets: h_p(1) = sum 1/(p^k - 1),
// ln_p(2) = -sum 1/(p^k + 1), and L(c,p) = sum 1/(c p^k - 1), all over k >= 1.
enum class SeriesKind { harmonic_q, log_q2, lambert };

// The series has a pole: c p^k = 1 at the reported index.
class PoleError : public std::domain_error {
public:
    PoleError(unsigned long k, const std::string& message)
        : std::domain_error(message), k_(k) {}
    unsigned long offending_k() const noexcept { return k_; }

private:
    unsigned long k_;
};

// (c;p)_n = 0, which happens exactly at c = 1; the generic Lambert
// construction is undefined there (use the harmonic kind instead).
class ZeroFactorError : public std::domain_error {
    using std::domain_error::domain_error;
};

struct TargetConstant {
    SeriesKind kind = SeriesKind::harmonic_q;
    unsigned long p = 2;
    Rational c = 1;  // only meaningful for lambert
    BigFloat value;
};

// Sums the target series until the geometric tail bound drops below
// 2^{-(precision_bits+8)}; the certified error bound covers tail and
// rounding. Throws PoleError when some c p^k = 1 (k >= 1).
TargetConstant eval_constant(SeriesKind kind, unsigned long p, const Rational& c,
                             mpfr_prec_t precision_bits);

// Stieltjes transform of the lattice measure, f(z) = sum_{k>=0} 1/(z p^k - 1).
// Throws PoleError when z lies on the support {q^k : k >= 0} and
// std::domain_error for z = 0.
BigFloat stieltjes_f(const Rational& z, unsigned long p, mpfr_prec_t precision_bits);

// One row of the approximation table. a and b are exact integers produced
// with a denominator-1 certificate; the residual b*x - a carries an error
// bound below |residual|/2, so its sign (and nonvanishing) is certified.
struct ApproximantRecord {
    unsigned n = 0;
    BigInt a;
    BigInt b;
    BigFloat residual;
    BigFloat exponent;          // log_p |residual| / n^2
    BigFloat b_exponent;        // log_p |b| / n^2
    BigFloat measure_estimate;  // 1 + log|b| / (-log|residual|)
    int residual_sign = 0;      // certified
    bool sign_pattern_ok = false;  // kind-specific expected sign pattern
};

// b_n = d_n(p) P_n(p^n|q), a_n = d_n(p) Q_n(p^n|q) + b_n sum_{k<n} 1/(p^k-1).
// Sign pattern: (-1)^n b_n > 0 and (-1)^n (b_n h_p(1) - a_n) > 0.
ApproximantRecord approximant_harmonic(unsigned n, unsigned long p);

// b_n = d_n(p^2) P_n(-p^n|q), a_n = d_n(p^2) Q_n(-p^n|q) - b_n sum 1/(p^k+1).
// Sign pattern: b_n > 0 and b_n ln_p(2) - a_n < 0.
ApproximantRecord approximant_log2(unsigned n, unsigned long p);

// Generic target with c = a/b in lowest terms; the integrality factor is
// b^{2n} d_n(p) (c;p)_n. Rejects c = 1 (zero factor) and series poles.
ApproximantRecord approximant_lambert(unsigned n, unsigned long p, const Rational& c);

// Independent residual route through the orthogonality remainder: evaluates
// factor * sum_k P_n(q^k|q) q^k / (z - q^k) with exact lattice values up to a
// certified geometric tail. Must agree with the direct residual within the
// combined error bounds.
BigFloat residual_via_remainder(unsigned n, unsigned long p, SeriesKind kind, const Rational& c,
                                mpfr_prec_t precision_bits);

// Remainder evaluation plus the positivity/sandwich diagnostics.
// positive_sum is sum_k P_n^2(q^k|q) q^k / (p^n -+ q^k), which the norm
// identity sandwiches between the stated rational bounds (harmonic and
// log2 kinds; for lambert the bounds are empty and sandwich_ok is true).
struct RemainderDiagnostics {
    BigFloat remainder;
    BigFloat positive_sum;
    Rational lower_bound;
    Rational upper_bound;
    bool sandwich_ok = false;
};

RemainderDiagnostics remainder_diagnostics(unsigned n, unsigned long p, SeriesKind kind,
                                           const Rational& c, mpfr_prec_t precision_bits);

// Rows n = 1..n_max sharing one constant evaluation. Auto precision follows
// the residual certification policy; an explicit precision_bits raises (never
// lowers) the constant's evaluation target. Requires n_max >= 2.
std::vector<ApproximantRecord> convergence_table(SeriesKind kind, unsigned long p,
                                                 const Rational& c, unsigned n_max,
                                                 std::optional<mpfr_prec_t> precision_bits = {});

// Certified-residual error target: ceil(1.3 n^2 log2 p) + 64 bits, far below
// the expected residual magnitude for every kind and p >= 2.
mpfr_prec_t residual_target_bits(unsigned n, unsigned long p);

// Limits of the table columns, in base-p logarithmic scale.
double residual_exponent_limit(SeriesKind kind);  // -1.19605, -0.89207, -0.69604
double scaling_exponent_limit(SeriesKind kind);   // 1.80396, 2.10793, 2.30396
double irrationality_bound(SeriesKind kind);      // 2.50828, 3.36295, 4.310119

}  // namespace qpade
