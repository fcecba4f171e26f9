#include "qpade/approximants.hpp"

#include "qpade/cyclotomic.hpp"
#include "qpade/qcore.hpp"
#include "qpade/qlegendre.hpp"

#include <cmath>
#include <numbers>

namespace qpade {

namespace {

// If z p^k = 1 for some k >= k_min, returns that k.
std::optional<unsigned long> find_pole(const Rational& z, unsigned long p, unsigned long k_min) {
    const BigInt& num = z.get_num();
    const BigInt& den = z.get_den();
    if (num <= 0) return std::nullopt;  // p^k = den/num needs a positive ratio
    if (den % num != 0) return std::nullopt;
    BigInt ratio = den / num;
    unsigned long k = 0;
    while (ratio % p == 0) {
        ratio /= p;
        ++k;
    }
    if (ratio == 1 && k >= k_min) return k;
    return std::nullopt;
}

// Certified sum_{k>=k_min} 1/(z p^k - 1). All three target constants and the
// Stieltjes transform reduce to this series.
BigFloat lambert_series_sum(const Rational& z, unsigned long p, unsigned long k_min,
                            mpfr_prec_t precision_bits) {
    if (p < 2) throw std::domain_error("series: p must be an integer > 1");
    if (z == 0) throw std::domain_error("series: z must be nonzero");
    if (auto k = find_pole(z, p, k_min))
        throw PoleError(*k, "pole in series: c*p^k = 1 at k = " + std::to_string(*k));

    const BigInt& num = z.get_num();
    const BigInt& den = z.get_den();
    BigInt abs_num = num < 0 ? BigInt(-num) : num;

    const mpfr_prec_t work_prec = precision_bits + 48;
    const Rational target = power_of(2, -static_cast<long>(precision_bits) - 8);

    BigFloat sum(work_prec);
    BigInt pk = int_pow(p, k_min);
    for (unsigned long k = k_min;; ++k) {
        Rational term(den, num * pk - den);
        term.canonicalize();
        sum = sum + BigFloat::from_rational(term, work_prec);

        // Once |z| p^{k+1} >= 2, every later term is below 2/(|z| p^j), so the
        // tail is at most 2/(|z| p^k (p-1)).
        if (abs_num * pk * p >= 2 * den) {
            Rational tail(2 * den, abs_num * pk * (p - 1));
            tail.canonicalize();
            if (tail <= target) {
                sum.inflate_error(tail);
                break;
            }
        }
        pk *= p;
    }
    return sum;
}

Rational scale_value(SeriesKind kind, const Rational& c) {
    switch (kind) {
        case SeriesKind::harmonic_q:
            return Rational(1);
        case SeriesKind::log_q2:
            return Rational(-1);
        case SeriesKind::lambert:
            return c;
    }
    throw std::logic_error("unknown series kind");
}

// Exact data of one approximant row before the residual is attached.
struct AssembledPair {
    Rational z;       // series scale: 1, -1, or c
    Rational factor;  // d_n(p), d_n(p^2), or cd^{2n} d_n(p) (c;p)_n
    BigInt a;
    BigInt b;
};

BigInt require_integer(const Rational& x, const char* label) {
    if (!is_integer(x))
        throw std::logic_error(std::string(label) + ": expected an integer, got " + to_string(x));
    return x.get_num();
}

AssembledPair assemble_pair(SeriesKind kind, unsigned n, unsigned long p, const Rational& c) {
    if (n < 1) throw std::domain_error("approximant: n must be >= 1");
    if (p < 2) throw std::domain_error("approximant: p must be an integer > 1");

    AssembledPair out;
    out.z = scale_value(kind, c);
    switch (kind) {
        case SeriesKind::harmonic_q:
            out.factor = Rational(denominator_sequence(p, n).at(n));
            break;
        case SeriesKind::log_q2:
            out.factor = Rational(denominator_sequence(p, n, DenomVariant::squared).at(n));
            break;
        case SeriesKind::lambert: {
            if (c == 0) throw std::domain_error("lambert: c must be nonzero");
            if (auto k = find_pole(c, p, 1))
                throw PoleError(*k, "pole in series: c*p^k = 1 at k = " + std::to_string(*k));
            Rational cpn = poch(c, Rational(p), n);
            if (cpn == 0)
                throw ZeroFactorError("lambert: (c;p)_n = 0 at c = 1; use the harmonic kind");
            out.factor = Rational(int_pow(c.get_den(), 2 * n)) *
                         Rational(denominator_sequence(p, n).at(n)) * cpn;
            break;
        }
    }

    out.b = require_integer(out.factor * eval_scaled(n, p, out.z), "b_n");

    // sum_{k=1}^{n-1} 1/(z p^k - 1), exact
    Rational prefix(0);
    BigInt pk = p;
    for (unsigned k = 1; k < n; ++k) {
        Rational term(out.z.get_den(), out.z.get_num() * pk - out.z.get_den());
        term.canonicalize();
        prefix += term;
        pk *= p;
    }
    out.a = require_integer(out.factor * assoc_scaled(n, p, out.z) + Rational(out.b) * prefix,
                            "a_n");
    return out;
}

bool expected_sign_pattern(SeriesKind kind, unsigned n, const BigInt& b, int residual_sign) {
    switch (kind) {
        case SeriesKind::harmonic_q: {
            const int parity = n % 2 == 0 ? 1 : -1;
            return sgn(b) == parity && residual_sign == parity;
        }
        case SeriesKind::log_q2:
            return b > 0 && residual_sign < 0;
        case SeriesKind::lambert:
            return true;  // no sign claim for the generic construction
    }
    return false;
}

ApproximantRecord finish_record(SeriesKind kind, unsigned n, unsigned long p,
                                AssembledPair pair, const TargetConstant& constant) {
    ApproximantRecord rec;
    rec.n = n;
    rec.a = std::move(pair.a);
    rec.b = std::move(pair.b);

    rec.residual = BigFloat::from_integer(rec.b) * constant.value -
                   BigFloat::from_integer(rec.a);
    if (!rec.residual.error_below_half_magnitude())
        throw std::logic_error("residual sign not certified; constant precision too low");
    rec.residual_sign = rec.residual.certified_sign();
    rec.sign_pattern_ok = expected_sign_pattern(kind, n, rec.b, rec.residual_sign);

    const BigFloat log_p = BigFloat::ln_of_integer(BigInt(p), 256);
    const BigFloat n_sq = BigFloat::from_unsigned(static_cast<unsigned long>(n) * n);
    const BigFloat log_residual = rec.residual.ln_abs();
    BigInt abs_b = rec.b < 0 ? BigInt(-rec.b) : rec.b;
    const BigFloat log_b = BigFloat::ln_of_integer(abs_b, 256);

    rec.exponent = log_residual / (n_sq * log_p);
    rec.b_exponent = log_b / (n_sq * log_p);
    rec.measure_estimate = BigFloat::from_unsigned(1) + log_b / (-log_residual);
    return rec;
}

mpfr_prec_t constant_precision_for(const AssembledPair& pair, unsigned n, unsigned long p) {
    BigInt abs_b = pair.b < 0 ? BigInt(-pair.b) : pair.b;
    return static_cast<mpfr_prec_t>(bit_length(abs_b)) + residual_target_bits(n, p) + 32;
}

}  // namespace

mpfr_prec_t residual_target_bits(unsigned n, unsigned long p) {
    const double bits = 1.3 * static_cast<double>(n) * n * std::log2(static_cast<double>(p));
    return static_cast<mpfr_prec_t>(std::ceil(bits)) + 64;
}

TargetConstant eval_constant(SeriesKind kind, unsigned long p, const Rational& c,
                             mpfr_prec_t precision_bits) {
    if (p < 2) throw std::domain_error("eval_constant: p must be an integer > 1");
    if (kind == SeriesKind::lambert && c == 0)
        throw std::domain_error("eval_constant: lambert c must be nonzero");
    TargetConstant out;
    out.kind = kind;
    out.p = p;
    out.c = scale_value(kind, c);
    out.value = lambert_series_sum(out.c, p, 1, precision_bits);
    return out;
}

BigFloat stieltjes_f(const Rational& z, unsigned long p, mpfr_prec_t precision_bits) {
    if (z == 0) throw std::domain_error("stieltjes_f: z must be nonzero");
    return lambert_series_sum(z, p, 0, precision_bits);
}

ApproximantRecord approximant_harmonic(unsigned n, unsigned long p) {
    AssembledPair pair = assemble_pair(SeriesKind::harmonic_q, n, p, Rational(1));
    TargetConstant constant =
        eval_constant(SeriesKind::harmonic_q, p, Rational(1), constant_precision_for(pair, n, p));
    return finish_record(SeriesKind::harmonic_q, n, p, std::move(pair), constant);
}

ApproximantRecord approximant_log2(unsigned n, unsigned long p) {
    AssembledPair pair = assemble_pair(SeriesKind::log_q2, n, p, Rational(-1));
    TargetConstant constant =
        eval_constant(SeriesKind::log_q2, p, Rational(-1), constant_precision_for(pair, n, p));
    return finish_record(SeriesKind::log_q2, n, p, std::move(pair), constant);
}

ApproximantRecord approximant_lambert(unsigned n, unsigned long p, const Rational& c) {
    AssembledPair pair = assemble_pair(SeriesKind::lambert, n, p, c);
    TargetConstant constant =
        eval_constant(SeriesKind::lambert, p, c, constant_precision_for(pair, n, p));
    return finish_record(SeriesKind::lambert, n, p, std::move(pair), constant);
}

RemainderDiagnostics remainder_diagnostics(unsigned n, unsigned long p, SeriesKind kind,
                                           const Rational& c, mpfr_prec_t precision_bits) {
    if (n < 1) throw std::domain_error("remainder: n must be >= 1");
    AssembledPair pair = assemble_pair(kind, n, p, c);
    const Rational z_point = pair.z * power_of(p, n);
    const Rational q(1, p);
    const QLegendreRep rep = legendre_rep(n, p);

    // |P_n| <= A on [0,1]; the lattice tail beyond q^K stays at distance >= m
    // from the evaluation point.
    Rational coeff_sum(0);
    for (const auto& coeff : rep.monomial) coeff_sum += coeff < 0 ? -coeff : coeff;
    Rational m;
    if (z_point > 1) {
        m = z_point - 1;
    } else if (z_point < 0) {
        m = -z_point;
    } else {
        // 0 < z < 1: scan the lattice around z; past q^k <= z/2 the distance
        // is at least z/2.
        m = z_point / 2;
        Rational qk(1);
        while (qk * 2 > z_point) {
            Rational dist = z_point - qk;
            if (dist < 0) dist = -dist;
            if (dist == 0) throw PoleError(0, "remainder: evaluation point on the lattice");
            if (dist < m) m = dist;
            qk *= q;
        }
    }

    Rational factor_mag = pair.factor < 0 ? -pair.factor : pair.factor;
    const Rational pz = eval_scaled(n, p, pair.z);
    Rational pz_mag = pz < 0 ? -pz : pz;
    Rational outer_scale = factor_mag > pz_mag ? factor_mag : pz_mag;
    const Rational target =
        power_of(2, -static_cast<long>(precision_bits) - 8) / outer_scale;

    // Working precision pads the target by the magnitude of the summands so
    // the accumulated rounding stays far below the tail bound.
    auto magnitude_bits = [](const Rational& x) {
        if (x == 0) return 0L;
        return static_cast<long>(bit_length(x.get_num())) -
               static_cast<long>(bit_length(x.get_den())) + 1;
    };
    const long scale_bits = std::max(0L, magnitude_bits(coeff_sum) + magnitude_bits(outer_scale) +
                                             std::max(0L, -magnitude_bits(m)));
    const mpfr_prec_t work_prec = precision_bits + 64 + scale_bits;

    // sum_{k<=K} P_n(q^k) q^k / (z - q^k): every lattice term exact, the
    // accumulator a certified ball; K from the geometric tail.
    BigFloat sum(work_prec);
    Rational qk(1);
    Rational tail_bound;
    const Rational ratio = Rational(p, p - 1);
    for (unsigned long k = 0;; ++k) {
        Rational term = eval_at(rep, qk) * qk / (z_point - qk);
        sum = sum + BigFloat::from_rational(term, work_prec);
        qk *= q;  // now q^{k+1}, the first omitted power
        tail_bound = coeff_sum * qk * ratio / m;
        if (tail_bound <= target) break;
    }

    RemainderDiagnostics diag;
    diag.remainder = BigFloat::from_rational(pair.factor, work_prec) * sum;
    diag.remainder.inflate_error(factor_mag * tail_bound);

    // S = sum_k P_n^2(q^k) q^k / (z - q^k) = P_n(z) * T by orthogonality.
    BigFloat s = BigFloat::from_rational(pz, work_prec) * sum;
    s.inflate_error(pz_mag * tail_bound);

    switch (kind) {
        case SeriesKind::harmonic_q: {
            // p/(p^{2n+1}-1) <= S <= p^{n+1}/((p^n-1)(p^{2n+1}-1))
            const BigInt big = int_pow(p, 2 * n + 1) - 1;
            diag.lower_bound = Rational(p) / Rational(big);
            diag.upper_bound = Rational(int_pow(p, n + 1)) / Rational((int_pow(p, n) - 1) * big);
            diag.positive_sum = s;
            break;
        }
        case SeriesKind::log_q2: {
            // p^{n+1}/((p^n+1)(p^{2n+1}-1)) <= -S <= p/(p^{2n+1}-1)
            const BigInt big = int_pow(p, 2 * n + 1) - 1;
            diag.lower_bound = Rational(int_pow(p, n + 1)) / Rational((int_pow(p, n) + 1) * big);
            diag.upper_bound = Rational(p) / Rational(big);
            diag.positive_sum = -s;
            break;
        }
        case SeriesKind::lambert:
            diag.positive_sum = s;
            diag.sandwich_ok = true;  // no sandwich claim for the generic kind
            return diag;
    }
    diag.lower_bound.canonicalize();
    diag.upper_bound.canonicalize();
    diag.sandwich_ok = diag.positive_sum.certainly_ge(diag.lower_bound) &&
                       diag.positive_sum.certainly_le(diag.upper_bound);
    return diag;
}

BigFloat residual_via_remainder(unsigned n, unsigned long p, SeriesKind kind, const Rational& c,
                                mpfr_prec_t precision_bits) {
    return remainder_diagnostics(n, p, kind, c, precision_bits).remainder;
}

std::vector<ApproximantRecord> convergence_table(SeriesKind kind, unsigned long p,
                                                 const Rational& c, unsigned n_max,
                                                 std::optional<mpfr_prec_t> precision_bits) {
    if (n_max < 2) throw std::domain_error("convergence_table: n_max must be >= 2");

    std::vector<AssembledPair> pairs;
    pairs.reserve(n_max);
    mpfr_prec_t needed = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        pairs.push_back(assemble_pair(kind, n, p, c));
        needed = std::max(needed, constant_precision_for(pairs.back(), n, p));
    }
    if (precision_bits) needed = std::max(needed, *precision_bits);

    const TargetConstant constant = eval_constant(kind, p, c, needed);
    std::vector<ApproximantRecord> records;
    records.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        records.push_back(finish_record(kind, n, p, std::move(pairs[n - 1]), constant));
    return records;
}

double residual_exponent_limit(SeriesKind kind) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    switch (kind) {
        case SeriesKind::harmonic_q:
            return -3 * (pi2 - 2) / (2 * pi2);  // -1.19605...
        case SeriesKind::log_q2:
            return -3 * (pi2 - 4) / (2 * pi2);  // -0.89207...
        case SeriesKind::lambert:
            return -(pi2 - 3) / pi2;  // -0.69604...
    }
    throw std::logic_error("unknown series kind");
}

double scaling_exponent_limit(SeriesKind kind) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    switch (kind) {
        case SeriesKind::harmonic_q:
            return 3 * (pi2 + 2) / (2 * pi2);  // 1.80396...
        case SeriesKind::log_q2:
            return 3 * (pi2 + 4) / (2 * pi2);  // 2.10793...
        case SeriesKind::lambert:
            return 3 / pi2 + 2;  // 2.30396...
    }
    throw std::logic_error("unknown series kind");
}

double irrationality_bound(SeriesKind kind) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    switch (kind) {
        case SeriesKind::harmonic_q:
            return 2 * pi2 / (pi2 - 2);  // 2.50828...
        case SeriesKind::log_q2:
            return 2 * pi2 / (pi2 - 4);  // 3.36295...
        case SeriesKind::lambert:
            return 3 * pi2 / (pi2 - 3);  // 4.310119...
    }
    throw std::logic_error("unknown series kind");
}

}  // namespace qpade
