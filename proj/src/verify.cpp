#include "qpade/verify.hpp"

#include "qpade/approximants.hpp"
#include "qpade/cyclotomic.hpp"
#include "qpade/qcore.hpp"
#include "qpade/qlegendre.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qpade {

namespace {

std::string join_primes(const std::vector<unsigned long>& ps) {
    std::ostringstream out;
    for (size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << ps[i];
    return out.str();
}

class Suite {
public:
    explicit Suite(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

    std::vector<CheckResult> run() {
        qcore_checks();
        cyclotomic_checks();
        qlegendre_checks();
        approximant_checks();
        return std::move(results_);
    }

private:
    void report(const std::string& name, bool ok, const std::string& detail) {
        results_.push_back({name, ok, detail});
    }

    Rational random_rational() {
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(1, 17);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }

    void qcore_checks() {
        const unsigned n_cap = std::max(30u, options_.n_max);
        {
            bool ok = true;
            std::string detail = "n <= " + std::to_string(n_cap) + ", p in {" +
                                 join_primes(options_.exact_primes) + "}";
            for (unsigned long p : options_.exact_primes)
                for (unsigned n = 0; ok && n <= n_cap; ++n)
                    for (unsigned k = 0; ok && k <= n; ++k) {
                        BigInt v = qbinom(n, k, p);
                        ok = v > 0 && v == qbinom(n, n - k, p);
                        if (ok && k >= 1 && k < n)
                            ok = v == qbinom(n - 1, k - 1, p) + int_pow(p, k) * qbinom(n - 1, k, p) &&
                                 v == qbinom(n - 1, k, p) +
                                          int_pow(p, n - k) * qbinom(n - 1, k - 1, p);
                        if (!ok)
                            detail = "failed at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " p=" + std::to_string(p);
                    }
            report("qcore: q-binomial symmetry and both Pascal identities", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "k <= 20";
            for (unsigned long p : options_.exact_primes)
                for (unsigned k = 0; ok && k <= 20; ++k) {
                    ok = qtop_poch(k, p) == poch(Rational(1, p), Rational(1, p), k);
                    if (!ok) detail = "failed at k=" + std::to_string(k) + " p=" + std::to_string(p);
                }
            report("qcore: base conversion (q;q)_k agreement", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "n <= 12";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 0; ok && n <= 12; ++n) {
                    auto f = dual_binomium_coeffs(n, p);
                    RatPoly total;
                    for (unsigned k = 0; k <= n; ++k)
                        total = poly_add(total, poly_scale(newton_binomium_coeffs(k, p), f[k]));
                    RatPoly monomial(n + 1, Rational(0));
                    monomial[n] = 1;
                    ok = total == monomial;
                    if (!ok) detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            report("qcore: binomium round-trip x^n -> (x;q)_k -> x^n", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "k <= n <= 10";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 0; ok && n <= 10; ++n) {
                    RatPoly diff = shifted_poch_monomial_coeffs(n, p);
                    for (unsigned k = 0; ok && k <= n; ++k) {
                        ok = diff == poly_scale(shifted_poch_monomial_coeffs(n - k, p),
                                                dp_poch_shift(k, n, p));
                        if (!ok)
                            detail = "failed at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " p=" + std::to_string(p);
                        diff = dq_apply(diff, Rational(p));
                    }
                }
            report("qcore: iterated difference operator matches the Pochhammer shift", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "j,k <= 10";
            Rational a(3, 7), b(2, 5);
            a.canonicalize();
            b.canonicalize();
            for (unsigned j = 0; ok && j <= 10; ++j)
                for (unsigned k = 0; ok && k <= 10; ++k) {
                    ok = poch(a, b, j + k) == poch(a, b, j) * poch(a * rational_pow(b, j), b, k);
                    if (!ok) detail = "failed at j=" + std::to_string(j) + " k=" + std::to_string(k);
                }
            report("qcore: Pochhammer splitting", ok, detail);
        }
    }

    void cyclotomic_checks() {
        {
            bool ok = true;
            std::string detail = "n <= " + std::to_string(options_.cyclotomic_n_max);
            for (unsigned long n = 1; ok && n <= options_.cyclotomic_n_max; ++n) {
                IntPoly product{BigInt(1)};
                for (unsigned long d = 1; d <= n; ++d) {
                    if (n % d != 0) continue;
                    IntPoly factor = cyclotomic_poly(d);
                    if (options_.inject_fault && n == 6 && d == 6) factor[0] += 1;
                    product = poly_mul(product, factor);
                }
                IntPoly expected(n + 1, BigInt(0));
                expected[0] = -1;
                expected[n] = 1;
                ok = product == expected && cyclotomic_via_mobius(n) == cyclotomic_poly(n) &&
                     poly_degree(cyclotomic_poly(n)) == static_cast<int>(euler_phi(n));
                if (!ok) detail = "failed at n=" + std::to_string(n);
            }
            report("cyclotomic: product identity and Moebius cross-check", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "n <= 60, p in {" + join_primes(options_.integer_primes) + "}";
            for (unsigned long p : options_.integer_primes) {
                auto standard = denominator_sequence(p, 60);
                auto squared = denominator_sequence(p, 60, DenomVariant::squared);
                for (unsigned n = 0; ok && n <= 60; ++n)
                    for (unsigned l = 1; ok && l <= n; ++l) {
                        ok = standard.at(n) % (int_pow(p, l) - 1) == 0 &&
                             squared.at(n) % (int_pow(p, l) - 1) == 0 &&
                             squared.at(n) % (int_pow(p, l) + 1) == 0;
                        if (!ok)
                            detail = "failed at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                                     " p=" + std::to_string(p);
                    }
            }
            report("cyclotomic: denominator divisibility (both variants)", ok, detail);
        }
        {
            const unsigned n_top = std::max(100u, options_.cyclotomic_n_max);
            auto rates = growth_report(2, n_top);
            const double limit = growth_limit(DenomVariant::standard);
            double constant = 0;
            for (unsigned n = 2; n <= n_top; ++n)
                constant = std::max(constant,
                                    std::abs(rates[n - 1].to_double() - limit) * n / std::log(n));
            std::ostringstream detail;
            detail << "observed rate constant C = " << constant << " over n <= " << n_top;
            report("cyclotomic: growth rate |g_n - 3/pi^2| <= C log(n)/n", constant <= 2.0,
                   detail.str());
        }
    }

    void qlegendre_checks() {
        const unsigned n_cap = std::min(20u, options_.n_max);
        {
            bool ok = true;
            std::string detail = "n <= 15, 20 random points each";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 0; ok && n <= 15; ++n) {
                    auto rep = legendre_rep(n, p);
                    ok = eval_at(rep, Rational(0)) == 1;
                    for (int trial = 0; ok && trial < 20; ++trial) {
                        Rational x = random_rational();
                        ok = eval_at(rep, x) == eval_poch_basis(rep, x);
                        if (!ok)
                            detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                     " x=" + to_string(x);
                    }
                }
            report("qlegendre: monomial and Pochhammer bases agree", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "j < n <= " + std::to_string(n_cap) + ", p in {" +
                                 join_primes(options_.exact_primes) + "}";
            for (unsigned long p : options_.exact_primes)
                for (unsigned n = 0; ok && n <= n_cap; ++n) {
                    for (unsigned j = 0; ok && j < n; ++j) {
                        ok = orthogonality_inner(n, j, p) == 0;
                        if (!ok) detail = "nonzero at n=" + std::to_string(n) + " j=" + std::to_string(j);
                    }
                    if (ok) ok = orthogonality_inner(n, n, p) != 0;
                }
            report("qlegendre: exact orthogonality against moments", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "n <= " + std::to_string(n_cap);
            for (unsigned long p : options_.exact_primes)
                for (unsigned n = 0; ok && n <= n_cap; ++n) {
                    Rational expected(int_pow(p, n + 1), int_pow(p, 2 * n + 1) - 1);
                    expected.canonicalize();
                    ok = norm_check(n, p) == expected;
                    if (!ok) detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            report("qlegendre: norm identity p^{n+1}/(p^{2n+1}-1)", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "n <= 10, p in {2,3}";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 0; ok && n <= 10; ++n) {
                    ok = rodrigues_check(n, p);
                    if (!ok) detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            report("qlegendre: Rodrigues route rebuilds the coefficients", ok, detail);
        }
        {
            bool ok = true;
            const unsigned n_int = std::max(30u, options_.n_max);
            std::string detail = "n <= " + std::to_string(n_int) + ", c in {1,-1,2,-3}";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 0; ok && n <= n_int; ++n)
                    for (long c : {1l, -1l, 2l, -3l}) {
                        Rational value = eval_scaled(n, p, Rational(c));
                        ok = is_integer(value);
                        if (ok && c == 1) ok = (n % 2 == 0) ? value > 0 : value < 0;
                        if (ok && c == -1) ok = value > 0;
                        if (!ok)
                            detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                     " c=" + std::to_string(c);
                    }
            report("qlegendre: scaled values are integers with the stated signs", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "50 random pairs, k <= 8";
            for (unsigned k = 1; ok && k <= 8; ++k)
                for (int trial = 0; ok && trial < 50; ++trial) {
                    Rational x = random_rational();
                    Rational y = random_rational();
                    if (x == y) y += 1;
                    ok = divided_difference_identity_check(k, 2, x, y);
                    if (!ok) detail = "failed at k=" + std::to_string(k) + " x=" + to_string(x) +
                                      " y=" + to_string(y);
                }
            report("qlegendre: divided-difference identity", ok, detail);
        }
        {
            bool ok = true;
            std::string detail = "n-th finite difference of Q_n vanishes, n <= 8";
            for (unsigned long p : {2ul, 3ul})
                for (unsigned n = 1; ok && n <= 8; ++n) {
                    std::vector<Rational> values;
                    for (unsigned i = 0; i <= n; ++i) values.push_back(assoc_eval(n, p, Rational(i)));
                    for (unsigned round = 0; round < n; ++round)
                        for (unsigned i = 0; i + 1 < values.size(); ++i)
                            values[i] = values[i + 1] - values[i];
                    ok = values[0] == 0;
                    if (!ok) detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            report("qlegendre: associated polynomial has degree n-1", ok, detail);
        }
        {
            // |P_n(c p^n|q)|^{1/n^2} -> p^{3/2}: log-scale gap <= 0.1 at n = 40.
            bool ok = true;
            const unsigned n = 40;
            std::string detail = "n = 40, c in {1,-1,3/2}, p = 2";
            for (Rational c : {Rational(1), Rational(-1), Rational(3, 2)}) {
                c.canonicalize();
                const double estimate =
                    BigFloat::from_rational(eval_scaled(n, 2, c), 128).ln_abs().to_double() /
                    std::log(2.0) / (double(n) * n);
                if (std::abs(estimate - 1.5) > 0.1) {
                    ok = false;
                    detail = "gap " + std::to_string(std::abs(estimate - 1.5)) + " at c=" + to_string(c);
                }
            }
            report("qlegendre: scaled-point growth approaches sqrt(p)|x|", ok, detail);
        }
    }

    void approximant_checks() {
        const unsigned n_cap = std::min(25u, options_.n_max);
        {
            bool ok = true;
            std::string detail = "n <= " + std::to_string(n_cap) + ", p in {" +
                                 join_primes(options_.integer_primes) + "}, lambert c in {2,3/2,-1}";
            for (unsigned long p : options_.integer_primes) {
                if (!ok) break;
                try {
                    for (const auto& rec : convergence_table(SeriesKind::harmonic_q, p, Rational(1),
                                                             std::max(2u, n_cap)))
                        if (!rec.sign_pattern_ok || !rec.residual.error_below_half_magnitude()) {
                            ok = false;
                            detail = "harmonic sign/certification failed at n=" +
                                     std::to_string(rec.n) + " p=" + std::to_string(p);
                        }
                    for (const auto& rec :
                         convergence_table(SeriesKind::log_q2, p, Rational(1), std::max(2u, n_cap)))
                        if (!rec.sign_pattern_ok) {
                            ok = false;
                            detail = "log2 sign failed at n=" + std::to_string(rec.n) +
                                     " p=" + std::to_string(p);
                        }
                    for (Rational c : {Rational(2), Rational(3, 2), Rational(-1)}) {
                        c.canonicalize();
                        for (const auto& rec :
                             convergence_table(SeriesKind::lambert, p, c, std::max(2u, n_cap)))
                            if (!rec.residual.nonzero_certified()) {
                                ok = false;
                                detail = "lambert residual uncertified at n=" +
                                         std::to_string(rec.n) + " p=" + std::to_string(p);
                            }
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = std::string("integrality assembly threw: ") + e.what();
                }
            }
            report("approximants: integer pairs with certified sign patterns", ok, detail);
        }
        {
            bool ok = true;
            const unsigned n_two = std::min(15u, options_.n_max);
            std::string detail = "n <= " + std::to_string(n_two) + ", p in {" +
                                 join_primes(options_.residual_primes) + "}, all kinds";
            for (unsigned long p : options_.residual_primes)
                for (unsigned n = 1; ok && n <= n_two; ++n) {
                    const mpfr_prec_t bits = residual_target_bits(n, p);
                    auto harmonic = approximant_harmonic(n, p);
                    auto hdiag = remainder_diagnostics(n, p, SeriesKind::harmonic_q, Rational(1), bits);
                    auto log2 = approximant_log2(n, p);
                    auto ldiag = remainder_diagnostics(n, p, SeriesKind::log_q2, Rational(-1), bits);
                    ok = harmonic.residual.consistent_with(hdiag.remainder) && hdiag.sandwich_ok &&
                         log2.residual.consistent_with(ldiag.remainder) && ldiag.sandwich_ok;
                    for (Rational c : {Rational(2), Rational(3, 2), Rational(-1)}) {
                        if (!ok) break;
                        c.canonicalize();
                        auto rec = approximant_lambert(n, p, c);
                        ok = rec.residual.consistent_with(
                            residual_via_remainder(n, p, SeriesKind::lambert, c, bits));
                    }
                    if (!ok) detail = "failed at n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            report("approximants: two-path residual agreement and norm sandwich", ok, detail);
        }
        {
            bool ok = true;
            const unsigned n_top = std::max(4u, std::min(14u, options_.n_max));
            std::string detail = "strict decrease over 2 <= n <= " + std::to_string(n_top);
            for (SeriesKind kind : {SeriesKind::harmonic_q, SeriesKind::log_q2}) {
                auto records = convergence_table(kind, 2, Rational(1), n_top);
                for (size_t i = 2; ok && i < records.size(); ++i) {
                    ok = records[i].residual.abs_certainly_below(records[i - 1].residual);
                    if (!ok) detail = "not decreasing at n=" + std::to_string(records[i].n);
                }
            }
            report("approximants: residual magnitudes strictly decrease", ok, detail);
        }
        {
            bool ok = true;
            std::ostringstream detail;
            std::vector<unsigned> sizes;
            if (options_.n_max >= 20) sizes.push_back(20);
            if (options_.n_max >= 40) sizes.push_back(40);
            if (sizes.empty()) {
                report("approximants: exponent columns approach the closed-form limits", true,
                       "skipped (needs n_max >= 20)");
                return;
            }
            detail << "p = 2, n in {";
            for (size_t i = 0; i < sizes.size(); ++i) detail << (i ? "," : "") << sizes[i];
            detail << "}, tolerance 1.5 log(n)/n";
            for (SeriesKind kind : {SeriesKind::harmonic_q, SeriesKind::log_q2}) {
                Rational c = kind == SeriesKind::log_q2 ? Rational(-1) : Rational(1);
                auto records = convergence_table(kind, 2, c, sizes.back());
                for (unsigned n : sizes) {
                    const double gap = std::abs(records[n - 1].exponent.to_double() -
                                                residual_exponent_limit(kind));
                    if (gap > 1.5 * std::log(n) / n) {
                        ok = false;
                        detail.str("exponent gap " + std::to_string(gap) + " at n=" +
                                   std::to_string(n));
                    }
                }
            }
            report("approximants: exponent columns approach the closed-form limits", ok,
                   detail.str());
        }
    }

    VerifyOptions options_;
    std::mt19937 rng_;
    std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    return Suite(options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& result : results)
        if (!result.ok) return false;
    return true;
}

}  // namespace qpade
