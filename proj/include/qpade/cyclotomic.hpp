#pragma once

#include "qpade/bigfloat.hpp"
#include "qpade/poly.hpp"
#include "qpade/rational.hpp"

#include <vector>

namespace qpade {

// Euler's totient by trial-division factorization. Throws on n = 0.
unsigned long euler_phi(unsigned long n);

// Moebius function: 0 on squareful n, else (-1)^{#prime factors}. Throws on n = 0.
int mobius(unsigned long n);

// Sum of euler_phi(1..n); grows like (3/pi^2) n^2.
unsigned long long totient_sum(unsigned long n);

// n-th cyclotomic polynomial, computed by exactly dividing x^n - 1 by the
// product of the lower cyclotomic factors. Monic of degree euler_phi(n).
// Results are memoized; returned by value.
IntPoly cyclotomic_poly(unsigned long n);

// Independent route: the Moebius product prod_{d|n} (x^d - 1)^{mu(n/d)},
// assembled by exact multiplication and division. Must equal cyclotomic_poly.
IntPoly cyclotomic_via_mobius(unsigned long n);

enum class DenomVariant { standard, squared };

// Cumulative products d_n = prod_{k<=n} Phi_k(p) (or Phi_k(p^2)). d_0 = 1.
// d_n clears every denominator p^l - 1 with l <= n; the squared variant
// additionally clears every p^l + 1.
struct DenominatorSequence {
    unsigned long p = 2;
    DenomVariant variant = DenomVariant::standard;
    std::vector<BigInt> values;  // values[n] = d_n, n = 0..n_max

    const BigInt& at(unsigned n) const { return values.at(n); }
};

DenominatorSequence denominator_sequence(unsigned long p, unsigned n_max,
                                         DenomVariant variant = DenomVariant::standard);

// g_n = log_p(d_n)/n^2 for n = 1..n_max, with certified rounding error.
// The sequence approaches 3/pi^2 (standard) or 6/pi^2 (squared).
std::vector<BigFloat> growth_report(unsigned long p, unsigned n_max,
                                    DenomVariant variant = DenomVariant::standard);

// Limit of growth_report: 3/pi^2, or 6/pi^2 for the squared variant.
double growth_limit(DenomVariant variant);

}  // namespace qpade
