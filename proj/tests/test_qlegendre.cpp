#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpade/qlegendre.hpp"

#include "qpade/bigfloat.hpp"
#include "qpade/qcore.hpp"

#include <random>

using namespace qpade;

namespace {

Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::mt19937& rng() {
    static std::mt19937 gen(20240519);
    return gen;
}

Rational random_rational() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 17);
    return rat(num(rng()), den(rng()));
}

// Truncated lattice-series oracle for Q_n(x|q) from its defining sum
// sum_j q^j (P_n(x) - P_n(q^j)) / (x - q^j), with an exact tail bound.
// Returns (partial sum, tail bound).
std::pair<Rational, Rational> assoc_series_oracle(unsigned n, unsigned long p, const Rational& x,
                                                  unsigned terms) {
    const QLegendreRep rep = legendre_rep(n, p);
    const Rational q(1, p);
    Rational sum(0);
    Rational qj(1);
    for (unsigned j = 0; j < terms; ++j) {
        if (x == qj) throw std::domain_error("oracle: x on the lattice");
        sum += qj * (eval_at(rep, x) - eval_at(rep, qj)) / (x - qj);
        qj *= q;
    }
    // Every difference quotient is bounded by the total variation of the
    // coefficients on [0,1]-sized arguments; crude but exact: use
    // sum_i |c_i| * (|x|^i + 1) / dist, dist = min distance from x to the
    // remaining lattice tail which lives in (0, q^terms].
    Rational bound(0);
    Rational xp(1);
    for (unsigned i = 0; i <= n; ++i) {
        Rational ai = rep.monomial[i];
        if (ai < 0) ai = -ai;
        Rational xa = xp;
        if (xa < 0) xa = -xa;
        bound += ai * (xa + 1);
        xp *= x;
    }
    Rational tail_start = rational_pow(q, terms);
    Rational dist;
    if (x == 0)
        dist = 1;  // the quotient itself is bounded by the coefficient sum
    else if (x > tail_start)
        dist = x - tail_start;
    else if (x < 0)
        dist = -x;
    else
        throw std::domain_error("oracle: tail too close to x, raise terms");
    Rational tail = bound * tail_start * Rational(p, p - 1) / dist;
    tail.canonicalize();
    return {sum, tail};
}

}  // namespace

TEST_CASE("legendre_rep basics") {
    auto rep0 = legendre_rep(0, 2);
    CHECK(rep0.monomial == std::vector<Rational>{rat(1)});
    CHECK(rep0.poch == std::vector<BigInt>{BigInt(1)});

    auto rep1 = legendre_rep(1, 2);
    CHECK(rep1.monomial == std::vector<Rational>{rat(1), rat(-3, 2)});
    CHECK(eval_at(rep1, rat(1)) == rat(-1, 2));
    CHECK(eval_at(rep1, rat(0)) == 1);
    CHECK(eval_at(rep1, rat(2)) == rat(-2));
}

TEST_CASE("two bases agree and P_n(0) = 1") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 0; n <= 15; ++n) {
            auto rep = legendre_rep(n, p);
            CHECK(eval_at(rep, rat(0)) == 1);
            BigInt poch_sum = 0;
            for (const auto& c : rep.poch) poch_sum += c;
            CHECK(poch_sum == 1);  // (q*0;q)_k = 1 for every k
            for (int trial = 0; trial < 20; ++trial) {
                Rational x = random_rational();
                CHECK(eval_at(rep, x) == eval_poch_basis(rep, x));
            }
        }
}

TEST_CASE("eval_scaled against the monomial basis") {
    CHECK(eval_scaled(0, 2, rat(1)) == 1);
    CHECK(eval_scaled(1, 2, rat(1)) == rat(-2));
    CHECK(eval_scaled(1, 2, rat(-1)) == rat(4));
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 0; n <= 12; ++n)
            for (Rational c : {rat(1), rat(-1), rat(3, 2), rat(-5, 3), rat(2)}) {
                auto rep = legendre_rep(n, p);
                CHECK(eval_scaled(n, p, c) == eval_at(rep, c * power_of(p, n)));
            }
}

TEST_CASE("integrality and sign of scaled values") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 0; n <= 30; ++n)
            for (long c : {1l, -1l, 2l, -3l}) {
                Rational value = eval_scaled(n, p, rat(c));
                CHECK(is_integer(value));
                if (c == 1) CHECK((n % 2 == 0 ? value > 0 : value < 0));
                if (c == -1) CHECK(value > 0);
            }
}

TEST_CASE("moment table") {
    auto table = moment_table(2, 6);
    CHECK(table.raw[0] == 2);
    CHECK(table.raw[1] == rat(4, 3));
    CHECK(table.modified[1] == 2);
    for (unsigned j = 0; j + 1 <= 6; ++j) {
        CHECK(table.raw[j] > 1);
        CHECK(table.raw[j + 1] < table.raw[j]);
    }

    // modified[l] = sum_j q^j (q^{j+1};q)_{l-1}, checked through partial sums
    // with the tail bound q^{J+1}/(1-q).
    const Rational q = rat(1, 2);
    for (unsigned l = 1; l <= 4; ++l) {
        const unsigned J = 40;
        Rational partial(0);
        Rational qj(1);
        for (unsigned j = 0; j <= J; ++j) {
            partial += qj * poch(qj * q, q, l - 1);
            qj *= q;
        }
        Rational gap = table.modified[l] - partial;
        if (gap < 0) gap = -gap;
        CHECK(gap <= qj / (1 - q));
    }
}

TEST_CASE("orthogonality against moments") {
    CHECK(orthogonality_inner(1, 0, 2) == 0);
    CHECK(orthogonality_inner(2, 0, 2) == 0);
    CHECK(orthogonality_inner(2, 1, 2) == 0);
    CHECK(orthogonality_inner(1, 1, 2) == rat(-8, 21));
    for (unsigned long p : {2ul, 3ul, 5ul})
        for (unsigned n = 0; n <= 20; ++n) {
            for (unsigned j = 0; j < n; ++j) CHECK(orthogonality_inner(n, j, p) == 0);
            CHECK(orthogonality_inner(n, n, p) != 0);
        }
}

TEST_CASE("norm identity") {
    CHECK(norm_check(0, 2) == 2);
    CHECK(norm_check(1, 2) == rat(4, 7));
    CHECK(norm_check(2, 2) == rat(8, 31));
    for (unsigned long p : {2ul, 3ul, 5ul})
        for (unsigned n = 0; n <= 20; ++n) {
            BigInt num = int_pow(p, n + 1);
            BigInt den = int_pow(p, 2 * n + 1) - 1;
            Rational expected(num, den);
            expected.canonicalize();
            CHECK(norm_check(n, p) == expected);
        }
}

TEST_CASE("Rodrigues route rebuilds the coefficients") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 0; n <= 10; ++n) CHECK(rodrigues_check(n, p));
}

TEST_CASE("associated polynomial: base cases and scaled form") {
    CHECK(assoc_eval(0, 2, rat(5, 7)) == 0);
    CHECK(assoc_eval(1, 2, rat(0)) == rat(-3));
    CHECK(assoc_eval(1, 2, rat(19, 3)) == rat(-3));
    CHECK(assoc_scaled(0, 3, rat(2)) == 0);
    CHECK(assoc_scaled(1, 2, rat(1)) == rat(-3));
    CHECK(assoc_scaled(2, 2, rat(-1)) == assoc_eval(2, 2, rat(-4)));

    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 0; n <= 10; ++n)
            for (Rational c : {rat(1), rat(-1), rat(3, 2), rat(2)})
                CHECK(assoc_scaled(n, p, c) == assoc_eval(n, p, c * power_of(p, n)));
}

TEST_CASE("associated polynomial matches its defining series") {
    // Q_1 is the leading coefficient of P_1 times the total mass.
    CHECK(assoc_eval(1, 2, rat(0)) == rat(-3, 2) * raw_moment(2, 0));

    for (Rational x : {rat(0), rat(2), rat(-3, 2)}) {
        auto [sum, tail] = assoc_series_oracle(2, 2, x, 64);
        Rational gap = assoc_eval(2, 2, x) - sum;
        if (gap < 0) gap = -gap;
        CHECK(gap <= tail);
    }
}

TEST_CASE("Q_n has degree n-1: n-th finite difference vanishes") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned n = 1; n <= 8; ++n) {
            std::vector<Rational> values;
            for (unsigned i = 0; i <= n; ++i) values.push_back(assoc_eval(n, p, rat(i)));
            for (unsigned round = 0; round < n; ++round)
                for (unsigned i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
            values.resize(1);
            CHECK(values[0] == 0);
        }
}

TEST_CASE("divided-difference identity") {
    CHECK(divided_difference_identity_check(1, 2, rat(7, 2), rat(1, 3)));
    CHECK(divided_difference_identity_check(3, 2, rat(2), rat(1, 3)));
    CHECK_THROWS_AS(divided_difference_identity_check(2, 2, rat(1), rat(1)), std::domain_error);
    for (unsigned k = 1; k <= 8; ++k)
        for (int trial = 0; trial < 10; ++trial) {
            Rational x = random_rational();
            Rational y = random_rational();
            if (x == y) y += 1;
            CHECK(divided_difference_identity_check(k, 3, x, y));
        }
}

TEST_CASE("leading coefficient trend toward sqrt(p)") {
    for (unsigned long p : {2ul, 3ul}) {
        const double logp = std::log(static_cast<double>(p));
        double previous = -1.0;
        for (unsigned n = 8; n <= 40; n += 4) {
            // kappa_n = (-1)^n [2n n]_p p^{-n(n+1)/2}
            Rational kappa = Rational(qbinom(2 * n, n, p)) *
                             power_of(p, -static_cast<long>(n) * (static_cast<long>(n) + 1) / 2);
            const double t =
                BigFloat::from_rational(kappa, 128).ln_abs().to_double() / logp / (double(n) * n);
            CHECK(t > previous);
            previous = t;
            if (n == 40) CHECK(std::abs(t - 0.5) < 0.02);
        }
    }
}

TEST_CASE("scaled-point growth |P_n(c p^n|q)|^(1/n^2) -> p^(3/2)") {
    const unsigned n = 40;
    for (Rational c : {rat(1), rat(-1), rat(3, 2)}) {
        const double log2_value = BigFloat::from_rational(eval_scaled(n, 2, c), 128)
                                      .ln_abs()
                                      .to_double() /
                                  std::log(2.0);
        const double estimate = log2_value / (double(n) * n);
        CHECK(std::abs(estimate - 1.5) < 0.1);
    }
}
