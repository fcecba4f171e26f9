#include "qpade/qlegendre.hpp"

#include "qpade/qcore.hpp"

#include <stdexcept>

namespace qpade {

QLegendreRep legendre_rep(unsigned n, unsigned long p) {
    if (p < 2) throw std::domain_error("legendre_rep: p must be an integer > 1");
    QLegendreRep rep;
    rep.n = n;
    rep.p = p;
    rep.monomial.resize(n + 1);
    rep.poch.resize(n + 1);
    const long ln = n;
    for (unsigned k = 0; k <= n; ++k) {
        const long lk = k;
        const BigInt pair = qbinom(n, k, p) * qbinom(n + k, k, p);
        Rational mono = Rational(pair) * power_of(p, -lk * ln + lk * (lk - 1) / 2);
        rep.monomial[k] = (k % 2 == 0) ? mono : -mono;
        BigInt pochc = pair * int_pow(p, static_cast<unsigned long>(ln - lk) *
                                             static_cast<unsigned long>(ln - lk + 1) / 2);
        rep.poch[k] = ((n + k) % 2 == 0) ? pochc : -pochc;
    }
    return rep;
}

Rational eval_at(const QLegendreRep& rep, const Rational& x) {
    return poly_eval(rep.monomial, x);
}

Rational eval_poch_basis(const QLegendreRep& rep, const Rational& x) {
    const Rational q(1, rep.p);
    Rational basis(1);  // (qx;q)_k
    Rational q_pow = q;
    Rational sum(0);
    for (unsigned k = 0; k <= rep.n; ++k) {
        if (k > 0) {
            basis *= 1 - x * q_pow;
            q_pow *= q;
        }
        sum += Rational(rep.poch[k]) * basis;
    }
    return sum;
}

Rational eval_scaled(unsigned n, unsigned long p, const Rational& c) {
    Rational sum(0);
    Rational c_pow(1);  // (-c)^k
    for (unsigned k = 0; k <= n; ++k) {
        const long lk = k;
        if (k > 0) c_pow *= -c;
        sum += Rational(qbinom(n, k, p) * qbinom(n + k, k, p)) *
               power_of(p, lk * (lk - 1) / 2) * c_pow;
    }
    return sum;
}

Rational raw_moment(unsigned long p, unsigned j) {
    // sum_k q^k (q^k)^j = 1/(1 - q^{j+1})
    BigInt pj = int_pow(p, j + 1);
    Rational m(pj, pj - 1);
    m.canonicalize();
    return m;
}

MomentTable moment_table(unsigned long p, unsigned j_max) {
    if (p < 2) throw std::domain_error("moment_table: p must be an integer > 1");
    MomentTable table;
    table.p = p;
    table.raw.reserve(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) table.raw.push_back(raw_moment(p, j));
    table.modified.resize(j_max + 1, Rational(0));
    for (unsigned l = 1; l <= j_max; ++l) {
        BigInt pl = int_pow(p, l);
        Rational m(pl, pl - 1);
        m.canonicalize();
        table.modified[l] = m;  // 1/(1 - q^l)
    }
    return table;
}

Rational orthogonality_inner(unsigned n, unsigned j, unsigned long p) {
    const QLegendreRep rep = legendre_rep(n, p);
    Rational sum(0);
    for (unsigned i = 0; i <= n; ++i) sum += rep.monomial[i] * raw_moment(p, i + j);
    return sum;
}

Rational norm_check(unsigned n, unsigned long p) {
    const QLegendreRep rep = legendre_rep(n, p);
    const RatPoly square = poly_mul(rep.monomial, rep.monomial);
    Rational sum(0);
    for (unsigned i = 0; i < square.size(); ++i) sum += square[i] * raw_moment(p, i);
    return sum;
}

bool rodrigues_check(unsigned n, unsigned long p) {
    // q^{n(n-1)/2} (1-q)^n / (q;q)_n * D_p^n [ (qx;q)_n x^n ]
    RatPoly f = poly_shift_up(shifted_poch_monomial_coeffs(n, p), n);
    const Rational base(p);
    for (unsigned k = 0; k < n; ++k) f = dq_apply(f, base);

    const Rational q(1, p);
    const long ln = n;
    Rational scale = power_of(p, -ln * (ln - 1) / 2) * rational_pow(1 - q, n) / qtop_poch(n, p);
    f = poly_scale(f, scale);

    RatPoly expected = legendre_rep(n, p).monomial;
    poly_trim(expected);
    return f == expected;
}

Rational assoc_eval(unsigned n, unsigned long p, const Rational& x) {
    const Rational q(1, p);
    Rational outer(0);
    for (unsigned k = 0; k <= n; ++k) {
        // inner = sum_{l=1}^{k} (q^{l+1}x;q)_{k-l} / (p^l - 1), built from
        // l = k downward via (q^l x;q)_{k-l+1} = (1 - x q^l)(q^{l+1}x;q)_{k-l}.
        Rational inner(0);
        Rational tail(1);  // (q^{l+1}x;q)_{k-l}
        for (unsigned l = k; l >= 1; --l) {
            inner += tail / Rational(int_pow(p, l) - 1);
            tail *= 1 - x * rational_pow(q, l);
        }
        const long lk = k, ln = n;
        Rational term = Rational(qbinom(n, k, p) * qbinom(n + k, k, p)) *
                        power_of(p, (ln - lk) * (ln - lk + 1) / 2) * inner;
        outer += (k % 2 == 0) ? term : -term;
    }
    return (n % 2 == 0) ? -outer : outer;  // overall sign (-1)^{n+1}
}

Rational assoc_scaled(unsigned n, unsigned long p, const Rational& c) {
    Rational outer(0);
    for (unsigned k = 0; k <= n; ++k) {
        // (c p^{n-k};p)_{k-l} built from l = k downward:
        // (c p^{n-l};p)_{k-l+1} = (1 - c p^{n-l})(c p^{n-l-1+1};p)_{k-l} with
        // the new leftmost factor 1 - c p^{n-l}.
        Rational inner(0);
        Rational tail(1);
        for (unsigned l = k; l >= 1; --l) {
            inner += tail / Rational(int_pow(p, l) - 1);
            tail *= 1 - c * power_of(p, static_cast<long>(n) - static_cast<long>(l));
        }
        const long lk = k, ln = n;
        Rational term = Rational(qbinom(n, k, p) * qbinom(n + k, k, p)) *
                        power_of(p, (ln - lk) * (ln - lk + 1) / 2) * inner;
        outer += (k % 2 == 0) ? term : -term;
    }
    return (n % 2 == 0) ? -outer : outer;
}

bool divided_difference_identity_check(unsigned k, unsigned long p, const Rational& x,
                                       const Rational& y) {
    if (x == y) throw std::domain_error("divided_difference_identity_check: x = y");
    const Rational q(1, p);
    Rational lhs = (poch(q * x, q, k) - poch(q * y, q, k)) / (x - y);

    Rational rhs(0);
    for (unsigned l = 1; l <= k; ++l)
        rhs -= rational_pow(q, l) * poch(q * y, q, l - 1) *
               poch(rational_pow(q, l + 1) * x, q, k - l);
    return lhs == rhs;
}

}  // namespace qpade
