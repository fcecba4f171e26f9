#pragma once

#include "qpade/poly.hpp"
#include "qpade/rational.hpp"

#include <vector>

namespace qpade {

// Exact q-calculus primitives. Every quantity is computed over p = 1/q with
// integer p > 1, so that all values live in Z or Q exactly; q itself never
// appears as a floating value.

// Pochhammer symbol (a; base)_k = prod_{j=0}^{k-1} (1 - a*base^j).
// The empty product (k = 0) is 1.
Rational poch(const Rational& a, const Rational& base, unsigned k);

// Gaussian binomial [n k]_p for an integer base p > 1, computed by the
// Pascal-type recurrence [n k]_p = [n-1 k-1]_p + p^k [n-1 k]_p. The rows
// are memoized per base behind a lock, so concurrent callers are fine.
// Throws std::domain_error when k > n.
BigInt qbinom(unsigned n, unsigned k, unsigned long p);

// (q;q)_k with q = 1/p, evaluated through the base-p rewrite
// (q;q)_k = (-1)^k p^{-k(k+1)/2} (p;p)_k. Agrees with poch(1/p, 1/p, k).
Rational qtop_poch(unsigned k, unsigned long p);

// Gaussian binomial in the base q = 1/p: [n k]_q = p^{-k(n-k)} [n k]_p.
Rational qbinom_q(unsigned n, unsigned k, unsigned long p);

// Coefficients e with (x;q)_n = sum_k e[k] x^k  (q-Newton binomium),
// e[k] = [n k]_q q^{k(k-1)/2} (-1)^k.
std::vector<Rational> newton_binomium_coeffs(unsigned n, unsigned long p);

// Coefficients f with x^n = sum_k f[k] (x;q)_k  (dual binomium),
// f[k] = [n k]_q (-1)^k q^{-nk+k(k+1)/2}.
std::vector<Rational> dual_binomium_coeffs(unsigned n, unsigned long p);

// Monomial coefficients of (qx;q)_n, i.e. the Newton binomium shifted by q.
RatPoly shifted_poch_monomial_coeffs(unsigned n, unsigned long p);

// Scalar s with D_p^k (qx;q)_n = s * (qx;q)_{n-k}, namely
// (q;q)_n / ((q;q)_{n-k} (1-p)^k). Throws std::domain_error when k > n:
// the k-th difference of a degree-n polynomial is then the zero polynomial
// and no multiplier exists.
Rational dp_poch_shift(unsigned k, unsigned n, unsigned long p);

// q-difference operator on monomial coefficients: for f = x^m the image is
// [m]_base x^{m-1} with [m]_base = (1-base^m)/(1-base). Degree drops by one;
// constants map to the zero polynomial. The z = 0 case of the pointwise
// definition is automatic in coefficient space.
// Throws std::domain_error when base is 0 or 1.
RatPoly dq_apply(const RatPoly& coeffs, const Rational& base);

}  // namespace qpade
