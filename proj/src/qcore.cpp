#include "qpade/qcore.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qpade {

Rational poch(const Rational& a, const Rational& base, unsigned k) {
    Rational product(1);
    Rational scaled = a;  // a * base^j
    for (unsigned j = 0; j < k; ++j) {
        product *= 1 - scaled;
        scaled *= base;
    }
    return product;
}

namespace {

// Pascal rows of [n k]_p per base. Values are copied out under the lock.
class QBinomialCache {
public:
    static BigInt get(unsigned n, unsigned k, unsigned long p) {
        static QBinomialCache cache;
        std::lock_guard<std::mutex> guard(cache.mutex_);
        auto& rows = cache.tables_[p];
        while (rows.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows.size());
            std::vector<BigInt> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (unsigned j = 1; j < m; ++j)
                row[j] = rows[m - 1][j - 1] + int_pow(p, j) * rows[m - 1][j];
            rows.push_back(std::move(row));
        }
        return rows[n][k];
    }

private:
    std::mutex mutex_;
    std::map<unsigned long, std::vector<std::vector<BigInt>>> tables_;
};

}  // namespace

BigInt qbinom(unsigned n, unsigned k, unsigned long p) {
    if (p < 2) throw std::domain_error("qbinom: base must be an integer > 1");
    if (k > n) throw std::domain_error("qbinom: k > n");
    return QBinomialCache::get(n, k, p);
}

Rational qtop_poch(unsigned k, unsigned long p) {
    // (q;q)_k = (-1)^k p^{-k(k+1)/2} (p;p)_k
    Rational pp = poch(Rational(p), Rational(p), k);
    Rational value = power_of(p, -static_cast<long>(k) * (static_cast<long>(k) + 1) / 2) * pp;
    return (k % 2 == 0) ? value : -value;
}

Rational qbinom_q(unsigned n, unsigned k, unsigned long p) {
    return power_of(p, -static_cast<long>(k) * static_cast<long>(n - k)) * Rational(qbinom(n, k, p));
}

std::vector<Rational> newton_binomium_coeffs(unsigned n, unsigned long p) {
    std::vector<Rational> e(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        long lk = k;
        Rational value = qbinom_q(n, k, p) * power_of(p, -lk * (lk - 1) / 2);
        e[k] = (k % 2 == 0) ? value : -value;
    }
    return e;
}

std::vector<Rational> dual_binomium_coeffs(unsigned n, unsigned long p) {
    std::vector<Rational> f(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        long lk = k, ln = n;
        // q^{-nk + k(k+1)/2} = p^{nk - k(k+1)/2}
        Rational value = qbinom_q(n, k, p) * power_of(p, ln * lk - lk * (lk + 1) / 2);
        f[k] = (k % 2 == 0) ? value : -value;
    }
    return f;
}

RatPoly shifted_poch_monomial_coeffs(unsigned n, unsigned long p) {
    // (qx;q)_n = sum_k e[k] q^k x^k with e the Newton binomium coefficients
    RatPoly coeffs = newton_binomium_coeffs(n, p);
    for (unsigned k = 0; k < coeffs.size(); ++k)
        coeffs[k] *= power_of(p, -static_cast<long>(k));
    poly_trim(coeffs);
    return coeffs;
}

Rational dp_poch_shift(unsigned k, unsigned n, unsigned long p) {
    if (k > n) throw std::domain_error("dp_poch_shift: k > n maps onto the zero polynomial");
    Rational one_minus_p = 1 - Rational(p);
    return qtop_poch(n, p) / (qtop_poch(n - k, p) * rational_pow(one_minus_p, k));
}

RatPoly dq_apply(const RatPoly& coeffs, const Rational& base) {
    if (base == 0 || base == 1) throw std::domain_error("dq_apply: base must not be 0 or 1");
    if (coeffs.size() <= 1) return {};
    RatPoly out(coeffs.size() - 1);
    const Rational denom = 1 - base;
    Rational base_pow(1);  // base^m
    for (size_t m = 1; m < coeffs.size(); ++m) {
        base_pow *= base;
        out[m - 1] = coeffs[m] * (1 - base_pow) / denom;
    }
    poly_trim(out);
    return out;
}

}  // namespace qpade
