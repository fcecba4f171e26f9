#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpade/approximants.hpp"

#include <cmath>

using namespace qpade;

namespace {

Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("target constants at known decimals") {
    auto hp1 = eval_constant(SeriesKind::harmonic_q, 2, rat(1), 128);
    // Partial sums of sum 1/(2^k - 1): the Erdos-Borwein value
    CHECK(hp1.value.within(1.6066951524152917637, 1e-15));
    CHECK(hp1.value.error_to_double() <= std::ldexp(1.0, -128));

    auto ln2 = eval_constant(SeriesKind::log_q2, 2, rat(1), 128);
    CHECK(ln2.value.within(-0.76449978034844420919, 1e-15));

    // L(2,2) = h_2(1) - 1 by re-indexing
    auto lam = eval_constant(SeriesKind::lambert, 2, rat(2), 128);
    BigFloat shifted = hp1.value - BigFloat::from_unsigned(1);
    CHECK(lam.value.consistent_with(shifted));

    CHECK_THROWS_AS(eval_constant(SeriesKind::lambert, 2, rat(1, 2), 128), PoleError);
    try {
        eval_constant(SeriesKind::lambert, 2, rat(1, 2), 128);
    } catch (const PoleError& e) {
        CHECK(e.offending_k() == 1);
    }
    CHECK_THROWS_AS(eval_constant(SeriesKind::lambert, 3, rat(1, 9), 64), PoleError);
    CHECK_NOTHROW(eval_constant(SeriesKind::lambert, 2, rat(-1, 2), 64));
    CHECK_NOTHROW(eval_constant(SeriesKind::lambert, 2, rat(3, 2), 64));
}

TEST_CASE("stieltjes transform against shifted constants") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n : {1u, 2u, 4u}) {
            // f(p^n) = h_p(1) - sum_{k<n} 1/(p^k-1)
            BigFloat f = stieltjes_f(power_of(p, n), p, 192);
            BigFloat h = eval_constant(SeriesKind::harmonic_q, p, rat(1), 192).value;
            Rational prefix(0);
            for (unsigned k = 1; k < n; ++k) prefix += Rational(1) / Rational(int_pow(p, k) - 1);
            CHECK(f.consistent_with(h - BigFloat::from_rational(prefix, 192)));

            // f(-p^n) = ln_p(2) + sum_{k<n} 1/(p^k+1)
            BigFloat fneg = stieltjes_f(-power_of(p, n), p, 192);
            BigFloat l = eval_constant(SeriesKind::log_q2, p, rat(1), 192).value;
            Rational prefix2(0);
            for (unsigned k = 1; k < n; ++k) prefix2 += Rational(1) / Rational(int_pow(p, k) + 1);
            CHECK(fneg.consistent_with(l + BigFloat::from_rational(prefix2, 192)));
        }

    CHECK(stieltjes_f(rat(2), 2, 64).certainly_ge(rat(1)));
    CHECK_THROWS_AS(stieltjes_f(rat(1), 2, 64), PoleError);      // z = q^0
    CHECK_THROWS_AS(stieltjes_f(rat(1, 8), 2, 64), PoleError);   // z = q^3
    CHECK_THROWS_AS(stieltjes_f(rat(0), 2, 64), std::domain_error);
}

TEST_CASE("first harmonic record is (-3, -2) with residual -0.21339") {
    auto rec = approximant_harmonic(1, 2);
    CHECK(rec.a == -3);
    CHECK(rec.b == -2);
    CHECK(rec.residual.within(-0.21339, 5e-6));
    CHECK(rec.residual_sign == -1);
    CHECK(rec.sign_pattern_ok);
    CHECK_THROWS_AS(approximant_harmonic(0, 2), std::domain_error);
}

TEST_CASE("first log2 record is (-9, 12) with residual -0.17400") {
    auto rec = approximant_log2(1, 2);
    CHECK(rec.a == -9);
    CHECK(rec.b == 12);
    CHECK(rec.residual.within(-0.17400, 5e-6));
    CHECK(rec.residual_sign == -1);
    CHECK(rec.sign_pattern_ok);
}

TEST_CASE("integrality and sign patterns, n <= 25") {
    for (unsigned long p : {2ul, 3ul, 10ul}) {
        for (const auto& rec : convergence_table(SeriesKind::harmonic_q, p, rat(1), 25)) {
            CHECK(rec.sign_pattern_ok);
            CHECK(rec.residual.error_below_half_magnitude());
        }
        for (const auto& rec : convergence_table(SeriesKind::log_q2, p, rat(1), 25))
            CHECK(rec.sign_pattern_ok);
        for (Rational c : {rat(2), rat(3, 2), rat(-1)})
            for (const auto& rec : convergence_table(SeriesKind::lambert, p, c, 25))
                CHECK(rec.residual.nonzero_certified());
    }
    // the single-record path agrees with the shared-constant table
    auto single = approximant_harmonic(7, 3);
    auto table = convergence_table(SeriesKind::harmonic_q, 3, rat(1), 8);
    CHECK(single.a == table[6].a);
    CHECK(single.b == table[6].b);
    CHECK(single.residual.consistent_with(table[6].residual));
}

TEST_CASE("lambert rejections") {
    CHECK_THROWS_AS(approximant_lambert(3, 2, rat(1)), ZeroFactorError);
    CHECK_THROWS_AS(approximant_lambert(3, 2, rat(1, 2)), PoleError);
    CHECK_THROWS_AS(approximant_lambert(3, 2, rat(0)), std::domain_error);
}

TEST_CASE("lambert table converges to the shifted harmonic target") {
    // L(2,2) = h_2(1) - 1, so a_n/b_n approaches hp1 - 1.
    auto records = convergence_table(SeriesKind::lambert, 2, rat(2), 12);
    auto target = eval_constant(SeriesKind::lambert, 2, rat(2), 256).value;
    for (const auto& rec : records) {
        BigFloat ratio = BigFloat::from_integer(rec.a) / BigFloat::from_integer(rec.b);
        if (rec.n >= 4) CHECK((target - ratio).abs_certainly_le(rat(1, 100000)));
    }
}

TEST_CASE("two-path residual agreement and sandwich bounds") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 1; n <= 15; ++n) {
            const mpfr_prec_t bits = residual_target_bits(n, p);
            {
                auto rec = approximant_harmonic(n, p);
                auto diag = remainder_diagnostics(n, p, SeriesKind::harmonic_q, rat(1), bits);
                CHECK(rec.residual.consistent_with(diag.remainder));
                CHECK(diag.sandwich_ok);
            }
            {
                auto rec = approximant_log2(n, p);
                auto diag = remainder_diagnostics(n, p, SeriesKind::log_q2, rat(-1), bits);
                CHECK(rec.residual.consistent_with(diag.remainder));
                CHECK(diag.sandwich_ok);
            }
            for (Rational c : {rat(2), rat(3, 2), rat(-1)}) {
                auto rec = approximant_lambert(n, p, c);
                BigFloat remainder = residual_via_remainder(n, p, SeriesKind::lambert, c, bits);
                CHECK(rec.residual.consistent_with(remainder));
            }
        }
}

TEST_CASE("residuals decrease strictly from n = 2") {
    for (SeriesKind kind : {SeriesKind::harmonic_q, SeriesKind::log_q2}) {
        auto records = convergence_table(kind, 2, rat(1), 14);
        for (size_t i = 2; i < records.size(); ++i)
            CHECK(records[i].residual.abs_certainly_below(records[i - 1].residual));
    }
}

TEST_CASE("exponent columns approach the stated limits") {
    const double rate20 = 1.5 * std::log(20.0) / 20.0;

    auto harmonic = convergence_table(SeriesKind::harmonic_q, 2, rat(1), 20);
    CHECK(std::abs(harmonic[19].exponent.to_double() -
                   residual_exponent_limit(SeriesKind::harmonic_q)) <= rate20);
    CHECK(std::abs(residual_exponent_limit(SeriesKind::harmonic_q) - (-1.19605)) < 1e-4);

    auto log2 = convergence_table(SeriesKind::log_q2, 2, rat(1), 20);
    CHECK(std::abs(log2[19].exponent.to_double() -
                   residual_exponent_limit(SeriesKind::log_q2)) <= rate20);
    CHECK(std::abs(residual_exponent_limit(SeriesKind::log_q2) - (-0.89207)) < 1e-4);

    auto lambert = convergence_table(SeriesKind::lambert, 2, rat(3, 2), 20);
    CHECK(std::abs(lambert[19].exponent.to_double() -
                   residual_exponent_limit(SeriesKind::lambert)) <= 0.12);
    CHECK(std::abs(residual_exponent_limit(SeriesKind::lambert) - (-0.69604)) < 1e-4);

    CHECK(std::abs(irrationality_bound(SeriesKind::harmonic_q) - 2.50828) < 1e-5);
    CHECK(std::abs(irrationality_bound(SeriesKind::log_q2) - 3.36295) < 1e-5);
    CHECK(std::abs(irrationality_bound(SeriesKind::lambert) - 4.310119) < 1e-5);
    CHECK(std::abs(scaling_exponent_limit(SeriesKind::harmonic_q) - 1.80396) < 1e-4);
    CHECK(std::abs(scaling_exponent_limit(SeriesKind::log_q2) - 2.10793) < 1e-4);
    CHECK(std::abs(scaling_exponent_limit(SeriesKind::lambert) - 2.30396) < 1e-4);
}

TEST_CASE("explicit precision raises the constant evaluation target") {
    auto coarse = convergence_table(SeriesKind::harmonic_q, 2, rat(1), 4);
    auto fine = convergence_table(SeriesKind::harmonic_q, 2, rat(1), 4, 4096);
    for (size_t i = 0; i < coarse.size(); ++i) {
        CHECK(coarse[i].a == fine[i].a);
        CHECK(coarse[i].b == fine[i].b);
        CHECK(coarse[i].residual.consistent_with(fine[i].residual));
    }
    CHECK_THROWS_AS(convergence_table(SeriesKind::harmonic_q, 2, rat(1), 1), std::domain_error);
}
