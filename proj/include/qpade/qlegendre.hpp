#pragma once

#include "qpade/poly.hpp"
#include "qpade/rational.hpp"

#include <vector>

namespace qpade {

// Little q-Legendre polynomial P_n(x|q), q = 1/p, in two exact bases.
//
// monomial[k] = [n k]_p [n+k k]_p p^{-kn+k(k-1)/2} (-1)^k        (rational)
// poch[k]     = (-1)^{n+k} [n k]_p [n+k k]_p p^{(n-k)(n-k+1)/2}  (integer)
//
// with P_n(x|q) = sum_k monomial[k] x^k = sum_k poch[k] (qx;q)_k. The
// Pochhammer-basis coefficients carry the global sign (-1)^n and certify
// integrality; the monomial basis carries the analysis.
struct QLegendreRep {
    unsigned n = 0;
    unsigned long p = 2;
    std::vector<Rational> monomial;  // length n+1
    std::vector<BigInt> poch;        // length n+1
};

QLegendreRep legendre_rep(unsigned n, unsigned long p);

// Horner evaluation in the monomial basis.
Rational eval_at(const QLegendreRep& rep, const Rational& x);

// Evaluation through the Pochhammer basis; equals eval_at everywhere.
Rational eval_poch_basis(const QLegendreRep& rep, const Rational& x);

// P_n(c p^n | q) through the scaled closed form
// sum_k [n k]_p [n+k k]_p p^{k(k-1)/2} (-c)^k; an integer for integer c.
Rational eval_scaled(unsigned n, unsigned long p, const Rational& c);

// Moments of the lattice measure sum_k q^k delta_{q^k}:
// raw[j] = p^{j+1}/(p^{j+1}-1) and modified[l] = p^l/(p^l-1) (l >= 1,
// stored from index 1; modified[0] is unused and set to 0).
struct MomentTable {
    unsigned long p = 2;
    std::vector<Rational> raw;
    std::vector<Rational> modified;
};

MomentTable moment_table(unsigned long p, unsigned j_max);

Rational raw_moment(unsigned long p, unsigned j);

// sum_k q^k P_n(q^k|q) q^{kj}, contracted exactly against raw moments.
// Vanishes for j < n.
Rational orthogonality_inner(unsigned n, unsigned j, unsigned long p);

// sum_k q^k P_n^2(q^k|q); must equal p^{n+1}/(p^{2n+1}-1).
Rational norm_check(unsigned n, unsigned long p);

// Rebuilds P_n from the n-th p-difference of (qx;q)_n x^n and compares
// coefficients exactly.
bool rodrigues_check(unsigned n, unsigned long p);

// Associated polynomial Q_n(x|q) of degree n-1 (Q_0 = 0):
// (-1)^{n+1} sum_k [n k]_p [n+k k]_p (-1)^k p^{(n-k)(n-k+1)/2}
//            sum_{l=1}^{k} (q^{l+1}x;q)_{k-l} / (p^l - 1).
Rational assoc_eval(unsigned n, unsigned long p, const Rational& x);

// Q_n(c p^n | q) via the scaled form with (c p^{n-k}; p)_{k-l} factors.
Rational assoc_scaled(unsigned n, unsigned long p, const Rational& c);

// Divided-difference identity behind the Q_n expansion:
// ((qx;q)_k - (qy;q)_k)/(x-y) = -sum_{l=1}^k q^l (qy;q)_{l-1} (q^{l+1}x;q)_{k-l}.
// Evaluates both sides exactly. Throws std::domain_error when x = y.
bool divided_difference_identity_check(unsigned k, unsigned long p, const Rational& x,
                                       const Rational& y);

}  // namespace qpade
