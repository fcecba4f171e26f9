#include "qpade/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qpade {

namespace {

// Distinct prime factors by trial division; second slot is the squarefree flag.
std::pair<std::vector<unsigned long>, bool> factor_distinct(unsigned long n) {
    std::vector<unsigned long> primes;
    bool squarefree = true;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        primes.push_back(d);
        unsigned long count = 0;
        while (n % d == 0) {
            n /= d;
            ++count;
        }
        if (count > 1) squarefree = false;
    }
    if (n > 1) primes.push_back(n);
    return {primes, squarefree};
}

IntPoly x_pow_minus_one(unsigned long n) {
    IntPoly f(n + 1, BigInt(0));
    f[0] = -1;
    f[n] = 1;
    return f;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be positive");
    unsigned long result = n;
    for (unsigned long prime : factor_distinct(n).first) result -= result / prime;
    return result;
}

int mobius(unsigned long n) {
    if (n == 0) throw std::domain_error("mobius: n must be positive");
    auto [primes, squarefree] = factor_distinct(n);
    if (!squarefree) return 0;
    return primes.size() % 2 == 0 ? 1 : -1;
}

unsigned long long totient_sum(unsigned long n) {
    unsigned long long sum = 0;
    for (unsigned long k = 1; k <= n; ++k) sum += euler_phi(k);
    return sum;
}

IntPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic_poly: n must be positive");

    static std::mutex mutex;
    static std::map<unsigned long, IntPoly> cache;
    {
        std::lock_guard<std::mutex> guard(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    IntPoly phi;
    if (n == 1) {
        phi = IntPoly{BigInt(-1), BigInt(1)};  // x - 1
    } else {
        IntPoly lower{BigInt(1)};
        for (unsigned long d : divisors(n))
            if (d < n) lower = poly_mul(lower, cyclotomic_poly(d));
        phi = poly_divexact(x_pow_minus_one(n), lower);
    }
    if (phi.size() != euler_phi(n) + 1 || phi.back() != 1)
        throw std::logic_error("cyclotomic_poly: result is not monic of degree phi(n)");

    std::lock_guard<std::mutex> guard(mutex);
    return cache.emplace(n, std::move(phi)).first->second;
}

IntPoly cyclotomic_via_mobius(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic_via_mobius: n must be positive");
    // Phi_n(x) = prod_{d|n} (x^d - 1)^{mu(n/d)}: multiply the mu = +1 factors,
    // then divide the mu = -1 factors out exactly.
    IntPoly numerator{BigInt(1)};
    std::vector<unsigned long> denominator_parts;
    for (unsigned long d : divisors(n)) {
        switch (mobius(n / d)) {
            case 1:
                numerator = poly_mul(numerator, x_pow_minus_one(d));
                break;
            case -1:
                denominator_parts.push_back(d);
                break;
            default:
                break;
        }
    }
    for (unsigned long d : denominator_parts)
        numerator = poly_divexact(numerator, x_pow_minus_one(d));
    return numerator;
}

DenominatorSequence denominator_sequence(unsigned long p, unsigned n_max, DenomVariant variant) {
    if (p < 2) throw std::domain_error("denominator_sequence: p must be an integer > 1");
    const BigInt point = variant == DenomVariant::squared ? BigInt(p) * BigInt(p) : BigInt(p);

    DenominatorSequence seq;
    seq.p = p;
    seq.variant = variant;
    seq.values.reserve(n_max + 1);
    seq.values.emplace_back(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        BigInt factor = poly_eval(cyclotomic_poly(n), point);
        seq.values.push_back(seq.values.back() * factor);
        if (seq.values.back() <= 0)
            throw std::logic_error("denominator_sequence: nonpositive value");
    }
    return seq;
}

std::vector<BigFloat> growth_report(unsigned long p, unsigned n_max, DenomVariant variant) {
    if (n_max < 1) throw std::domain_error("growth_report: n_max must be positive");
    DenominatorSequence seq = denominator_sequence(p, n_max, variant);
    const BigFloat log_p = BigFloat::ln_of_integer(BigInt(p), 192);

    std::vector<BigFloat> report;
    report.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        BigFloat g = BigFloat::ln_of_integer(seq.at(n), 192) / log_p;
        report.push_back(g / BigFloat::from_unsigned(static_cast<unsigned long>(n) * n));
    }
    return report;
}

double growth_limit(DenomVariant variant) {
    constexpr double pi = 3.14159265358979323846;
    const double base = 3.0 / (pi * pi);  // 0.303963...
    return variant == DenomVariant::squared ? 2 * base : base;
}

}  // namespace qpade
