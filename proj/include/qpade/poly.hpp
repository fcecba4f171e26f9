#pragma once

#include "qpade/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qpade {

// Dense polynomials, lowest degree first, trailing zeros trimmed.
// The zero polynomial is the empty vector.
template <typename Coeff>
using Poly = std::vector<Coeff>;

using RatPoly = Poly<Rational>;
using IntPoly = Poly<BigInt>;

template <typename Coeff>
void poly_trim(Poly<Coeff>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

template <typename Coeff>
int poly_degree(const Poly<Coeff>& f) {
    return static_cast<int>(f.size()) - 1;  // -1 for the zero polynomial
}

template <typename Coeff>
Poly<Coeff> poly_add(const Poly<Coeff>& f, const Poly<Coeff>& g) {
    Poly<Coeff> out(std::max(f.size(), g.size()), Coeff(0));
    for (size_t i = 0; i < f.size(); ++i) out[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) out[i] += g[i];
    poly_trim(out);
    return out;
}

template <typename Coeff>
Poly<Coeff> poly_sub(const Poly<Coeff>& f, const Poly<Coeff>& g) {
    Poly<Coeff> out(std::max(f.size(), g.size()), Coeff(0));
    for (size_t i = 0; i < f.size(); ++i) out[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
    poly_trim(out);
    return out;
}

template <typename Coeff>
Poly<Coeff> poly_mul(const Poly<Coeff>& f, const Poly<Coeff>& g) {
    if (f.empty() || g.empty()) return {};
    Poly<Coeff> out(f.size() + g.size() - 1, Coeff(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    poly_trim(out);
    return out;
}

template <typename Coeff>
Poly<Coeff> poly_scale(const Poly<Coeff>& f, const Coeff& s) {
    if (s == 0) return {};
    Poly<Coeff> out = f;
    for (auto& c : out) c *= s;
    return out;
}

// Multiplies by x^k.
template <typename Coeff>
Poly<Coeff> poly_shift_up(const Poly<Coeff>& f, size_t k) {
    if (f.empty()) return {};
    Poly<Coeff> out(f.size() + k, Coeff(0));
    for (size_t i = 0; i < f.size(); ++i) out[i + k] = f[i];
    return out;
}

template <typename Coeff, typename Point>
Point poly_eval(const Poly<Coeff>& f, const Point& x) {
    Point acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + Point(f[i]);
    return acc;
}

// Exact division of integer polynomials; the divisor must be monic-led in
// the sense that every coefficient division is exact. Throws on any
// nonzero remainder, which callers treat as a logic error.
inline IntPoly poly_divexact(const IntPoly& num, const IntPoly& den) {
    if (den.empty()) throw std::domain_error("poly_divexact: division by zero polynomial");
    if (num.empty()) return {};
    if (num.size() < den.size())
        throw std::logic_error("poly_divexact: nonzero remainder (degree)");
    IntPoly rem = num;
    IntPoly quot(num.size() - den.size() + 1, BigInt(0));
    const BigInt& lead = den.back();
    for (size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + den.size() - 1];
        if (top == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::logic_error("poly_divexact: nonzero remainder (leading)");
        quot[i] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    poly_trim(quot);
    return quot;
}

}  // namespace qpade
