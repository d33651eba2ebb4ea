#pragma once

// Exact q-series with rational exponents: Fock weights, the singlet-type
// series in closed form and through the fragment pipeline, triplet-type
// series by summation over horizontal positions, and Dedekind-eta handling.
// Everything is integer/rational arithmetic; truncation is a bound on the
// exponent, not a term count.

#include "characters.hpp"

#include <boost/rational.hpp>

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zc {

using Rational = boost::rational<long long>;

struct SeifertParams {
    std::vector<long long> p;
    std::vector<long long> r;
};

inline void validate(const SeifertParams& params) {
    if (params.p.empty()) throw std::invalid_argument("params: need N >= 1");
    if (params.p.size() != params.r.size())
        throw std::invalid_argument("params: |p| != |r|");
    for (std::size_t i = 0; i < params.p.size(); ++i) {
        if (params.p[i] < 2)
            throw std::invalid_argument("params: p[" + std::to_string(i) +
                                        "] must be >= 2");
        if (params.r[i] == params.p[i])
            throw std::invalid_argument(
                "params: r[" + std::to_string(i) + "] = p[" +
                std::to_string(i) +
                "] is the degenerate boundary case and is excluded; "
                "use 1 <= r < p");
        if (params.r[i] < 1 || params.r[i] > params.p[i] - 1)
            throw std::invalid_argument("params: need 1 <= r[" +
                                        std::to_string(i) + "] < p[" +
                                        std::to_string(i) + "]");
        for (std::size_t j = i + 1; j < params.p.size(); ++j)
            if (std::gcd(params.p[i], params.p[j]) != 1)
                throw std::invalid_argument(
                    "params: p[" + std::to_string(i) + "] and p[" +
                    std::to_string(j) + "] are not coprime");
    }
}

inline long long big_p(const SeifertParams& params) {
    long long prod = 1;
    for (long long v : params.p) prod *= v;
    return prod;
}

// Fock weight (p1...pN/2)(-d + sum lambda_i r_i / p_i)^2.
inline Rational delta_weight(const SeifertParams& params, const BitWord& lambda,
                             long d) {
    validate(params);
    if (lambda.size() != params.p.size())
        throw std::invalid_argument("delta_weight: |lambda| != N");
    Rational arg(-d);
    for (std::size_t i = 0; i < params.p.size(); ++i) {
        Rational part(params.r[i], params.p[i]);
        arg += (lambda[i] == Bit::Plus) ? part : -part;
    }
    return Rational(big_p(params), 2) * arg * arg;
}

struct QSeries {
    std::map<Rational, long long> coeffs;
    Rational order{0};
};

inline void qs_add(QSeries& s, const Rational& e, long long c) {
    if (c == 0 || e > s.order) return;
    auto it = s.coeffs.find(e);
    if (it == s.coeffs.end()) {
        s.coeffs.emplace(e, c);
    } else if ((it->second += c) == 0) {
        s.coeffs.erase(it);
    }
}

inline bool qs_equal(const QSeries& a, const QSeries& b) {
    return a.coeffs == b.coeffs;
}

// Truncation-correct product.  Callers must supply factors complete up to
// order minus the other factor's least exponent; with the series built here
// (least exponents >= -1/24) passing factors complete to order + 1 is enough.
inline QSeries qs_mul(const QSeries& a, const QSeries& b, const Rational& order) {
    QSeries out;
    out.order = order;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) qs_add(out, ea + eb, ca * cb);
    return out;
}

// Denominator discipline: every exponent's reduced denominator divides d.
inline bool qs_denominators_divide(const QSeries& s, long long d) {
    for (const auto& [e, c] : s.coeffs)
        if (d % e.denominator() != 0) return false;
    return true;
}

// eta = q^{1/24} prod_{n>=1} (1 - q^n), expanded exactly to the order.
inline QSeries eta_series(const Rational& order) {
    long long top = boost::rational_cast<long long>(order) + 1;
    std::vector<long long> poly(std::size_t(std::max<long long>(top, 0)) + 1, 0);
    poly[0] = 1;
    for (long long n = 1; n <= top; ++n)
        for (long long k = top; k >= n; --k) poly[k] -= poly[k - n];
    QSeries out;
    out.order = order;
    for (long long k = 0; k <= top; ++k)
        qs_add(out, Rational(k) + Rational(1, 24), poly[k]);
    return out;
}

// 1/eta = q^{-1/24} sum_{k>=0} partition(k) q^k.
inline QSeries inv_eta_series(const Rational& order) {
    long long top = boost::rational_cast<long long>(order) + 1;
    std::vector<long long> part(std::size_t(std::max<long long>(top, 0)) + 1, 0);
    part[0] = 1;
    for (long long n = 1; n <= top; ++n)
        for (long long k = n; k <= top; ++k) part[k] += part[k - n];
    QSeries out;
    out.order = order;
    for (long long k = 0; k <= top; ++k)
        qs_add(out, Rational(k) - Rational(1, 24), part[k]);
    return out;
}

enum class EtaMode { Strip, Expand };

namespace detail {

// The closed singlet display with an extra vertical shift v: terms
// (-1)^{|nu|_-} C(n+N-1, N-1) q^{(P/2) A^2} with
// A = -2n - N - |nu|_- + |bar lambda1|_- - v + (lambda1*nu1) r1/p1
//     - sum_{i>=2} nu_i r_i / p_i.
// Coded without the descriptor machinery so the pipeline path has an
// independent counterpart.
template <class Emit>
void singlet_display(const SeifertParams& params, Bit lambda1, long v,
                     const Rational& order, Emit&& emit) {
    validate(params);
    std::size_t n_slots = params.p.size();
    long long p_all = big_p(params);
    long bar_l1 = (lambda1 == Bit::Plus) ? 1 : 0;
    for (long n = 0;; ++n) {
        long floor_arg = 2 * n + v - 1;
        if (floor_arg > 0 &&
            Rational(p_all, 2) * floor_arg * floor_arg > order)
            break;
        long long mult = binomial(n + long(n_slots) - 1, long(n_slots) - 1);
        for (const BitWord& nu : all_words(n_slots)) {
            Rational arg(-2 * n - long(n_slots) - long(minus_count(nu)) +
                         bar_l1 - v);
            Bit first = star(BitWord({lambda1}), BitWord({nu[0]}))[0];
            Rational lead(params.r[0], params.p[0]);
            arg += (first == Bit::Plus) ? lead : -lead;
            for (std::size_t i = 1; i < n_slots; ++i) {
                Rational part(params.r[i], params.p[i]);
                arg -= (nu[i] == Bit::Plus) ? part : -part;
            }
            long long sign = (minus_count(nu) % 2 == 0) ? 1 : -1;
            emit(Rational(p_all, 2) * arg * arg, sign * mult);
        }
    }
}

}  // namespace detail

// Singlet-type series: eta-stripped by default (the pure signed sum),
// optionally multiplied by 1/eta.
inline QSeries singlet_series(const SeifertParams& params, Bit lambda1,
                              const Rational& order,
                              EtaMode eta = EtaMode::Strip) {
    if (eta == EtaMode::Expand) {
        QSeries stripped = singlet_series(params, lambda1, order + 1,
                                          EtaMode::Strip);
        return qs_mul(stripped, inv_eta_series(order + 1), order);
    }
    QSeries out;
    out.order = order;
    detail::singlet_display(params, lambda1, 0, order,
                            [&](const Rational& e, long long c) {
                                qs_add(out, e, c);
                            });
    return out;
}

// The same series assembled from the fragment descriptors: each term of the
// closed-form signed sum contributes sign * multiplicity at its Fock weight.
inline QSeries singlet_via_pipeline(const SeifertParams& params, Bit lambda1,
                                    const Rational& order) {
    validate(params);
    std::size_t n_slots = params.p.size();
    long long p_all = big_p(params);
    long n_max = 0;
    while (true) {
        long floor_arg = 2 * n_max - 1;
        if (floor_arg > 0 &&
            Rational(p_all, 2) * floor_arg * floor_arg > order)
            break;
        ++n_max;
    }
    QSeries out;
    out.order = order;
    SignedFragmentSum s = bosonic_sum(n_slots, lambda1, n_max);
    for (const SignedTerm& t : s.terms)
        qs_add(out, delta_weight(params, t.word, t.shift),
               t.sign * t.multiplicity);
    return out;
}

// Triplet-type series: columns h = h0 mod 2 inside the window
// [h0 - h_cutoff, h0 + h_cutoff], each contributing the singlet sum shifted
// vertically by |h| - h0.  Window 0 is exactly the singlet series.
inline QSeries triplet_series(const SeifertParams& params, Bit lambda1,
                              const Rational& order, long h_cutoff) {
    validate(params);
    if (h_cutoff < 0)
        throw std::invalid_argument("triplet_series: need h_cutoff >= 0");
    long h0 = (lambda1 == Bit::Minus) ? 1 : 0;
    QSeries out;
    out.order = order;
    for (long h = h0 - h_cutoff; h <= h0 + h_cutoff; ++h) {
        if ((h - h0) % 2 != 0) continue;
        detail::singlet_display(params, lambda1, std::labs(h) - h0, order,
                                [&](const Rational& e, long long c) {
                                    qs_add(out, e, c);
                                });
    }
    return out;
}

}  // namespace zc
