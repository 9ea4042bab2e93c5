#pragma once

// The series transforms this library exists for:
//
//   * the alternating binomial transform b_n = sum_k C(n,k) (-1)^k a_k
//     (a self-inverse involution),
//   * the Euler transform (1/(1-lambda t)) f(mu t / (1-lambda t)) together
//     with its coefficient form sum_k C(n,k) mu^k lambda^{n-k} a_k,
//   * the Hermite-weighted pair: sum a_n H_n(x) t^n/n! rewritten as
//     e^{2xt-t^2} sum (-1)^n H_n(x-t) (t^n/n!) b_n,
//   * its derivative-form generalization
//     sum a_n g_n t^n = sum (-1)^n (t^n g^{(n)}(t)/n!) b_n,
//   * the Stirling and r-Stirling transforms moving a polynomial factor f(n)
//     between a coefficient stream and t^k g^{(k)}(t) combinations.
//
// Coefficient streams are MPoly-valued so the same machinery covers rational
// weights and symbolic ones (e.g. binomials in the free symbol p).

#include "hps/mpoly.hpp"
#include "hps/sequences.hpp"
#include "hps/special_polynomials.hpp"
#include "hps/tseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hps {

// A coefficient stream a_0, a_1, ... with polynomial values.
struct CoeffSeq {
    std::function<MPoly(int)> at;

    static CoeffSeq constant(const MPoly& c) {
        return CoeffSeq{[c](int) { return c; }};
    }
    static CoeffSeq from_values(std::vector<MPoly> v) {
        return CoeffSeq{[v = std::move(v)](int n) {
            return n >= 0 && n < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(n)]
                                                            : MPoly();
        }};
    }
    static CoeffSeq from_rationals(std::vector<Rational> v) {
        return CoeffSeq{[v = std::move(v)](int n) {
            return n >= 0 && n < static_cast<int>(v.size()) ? MPoly(v[static_cast<std::size_t>(n)])
                                                            : MPoly();
        }};
    }
};

// b_n = sum_k C(n,k) (-1)^k a_k.
inline MPoly binomial_transform_term(const CoeffSeq& a, int n) {
    MPoly acc;
    for (int k = 0; k <= n; ++k) {
        MPoly t = a.at(k) * Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
        acc += (k % 2 == 0) ? t : -t;
    }
    return acc;
}

inline CoeffSeq binomial_transform(const CoeffSeq& a) {
    return CoeffSeq{[a](int n) { return binomial_transform_term(a, n); }};
}

// Rational-vector form used by the CLI: transforms the whole prefix.
inline std::vector<Rational> binomial_transform_values(const std::vector<Rational>& a) {
    CoeffSeq seq = CoeffSeq::from_rationals(a);
    std::vector<Rational> b;
    b.reserve(a.size());
    for (int n = 0; n < static_cast<int>(a.size()); ++n)
        b.push_back(binomial_transform_term(seq, n).as_constant());
    return b;
}

// The involution is its own inverse; the alias documents intent at call sites.
inline std::vector<Rational> inverse_binomial_transform_values(const std::vector<Rational>& b) {
    return binomial_transform_values(b);
}

// Series form of the Euler transform: (1/(1-lambda t)) f(mu t/(1-lambda t)).
inline TSeries euler_transform(const TSeries& f, const Rational& lambda, const Rational& mu) {
    int n = f.order();
    TSeries denom = TSeries::constant(n, MPoly(1)) - shift_mul_t(TSeries::constant(n, MPoly(lambda)), 1);
    TSeries dinv = series_inverse(denom);
    TSeries inner = shift_mul_t(dinv * mu, 1);
    return series_mul(dinv, series_compose(f, inner));
}

// Coefficient form: sum_k C(n,k) mu^k lambda^{n-k} a_k.
inline MPoly euler_transform_term(const CoeffSeq& a, const Rational& lambda, const Rational& mu, int n) {
    MPoly acc;
    for (int k = 0; k <= n; ++k)
        acc += a.at(k) *
               (Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
                mu.pow(static_cast<unsigned long>(k)) *
                lambda.pow(static_cast<unsigned long>(n - k)));
    return acc;
}

// --- Hermite-weighted pair ----------------------------------------------------

// sum_{n<=N} a_n H_n(x) t^n / n!.
inline TSeries hermite_weighted_lhs(const CoeffSeq& a, int order) {
    auto h = hermite_all(order);
    return TSeries::from_coeffs(order, [&](int n) {
        return a.at(n) * h[static_cast<std::size_t>(n)] /
               Rational(factorial(static_cast<unsigned long>(n)));
    });
}

// e^{2xt - t^2} sum_{n<=N} (-1)^n H_n(x-t) (t^n / n!) b_n, with the b_n
// supplied directly (identities plug in their closed forms here).
inline TSeries hermite_weighted_rhs(const CoeffSeq& b, int order) {
    const MPoly X = MPoly::variable(Symbol::x);
    TSeries arg = TSeries::constant(order, X) - series_t(order);  // x - t
    auto h = hermite_all_at_series(order, arg);
    TSeries acc(order);
    for (int n = 0; n <= order; ++n) {
        MPoly scale = b.at(n) * Rational(factorial(static_cast<unsigned long>(n))).inverse();
        if (n % 2 == 1) scale = -scale;
        if (scale.is_zero()) continue;
        acc = acc + shift_mul_t(h[static_cast<std::size_t>(n)] * scale, n);
    }
    TSeries expo = shift_mul_t(TSeries::constant(order, X * 2), 1) - series_pow(series_t(order), 2);
    return series_mul(series_exp(expo), acc);
}

// Full transform: compute the binomial transform of a and assemble the RHS.
inline TSeries hermite_transform_rhs(const CoeffSeq& a, int order) {
    return hermite_weighted_rhs(binomial_transform(a), order);
}

// --- derivative-form pair -----------------------------------------------------

// sum_{n<=N} a_n g_n t^n (termwise product against g's coefficients).
inline TSeries coefficient_weighted_lhs(const TSeries& g, const CoeffSeq& a) {
    return TSeries::from_coeffs(g.order(), [&](int n) { return a.at(n) * g.coeff(n); });
}

// sum_{n<=N} (-1)^n (t^n g^{(n)}(t) / n!) b_n. Multiplying the n-th
// derivative by t^n re-absorbs every unreliable top slot, so the result is
// reliable to g's own reliable order.
inline TSeries derivative_weighted_rhs(const TSeries& g, const CoeffSeq& b) {
    int order = g.order();
    TSeries acc(order);
    TSeries d = g;  // g^{(n)} as n advances
    for (int n = 0; n <= order; ++n) {
        if (n > 0) d = series_derivative(d);
        MPoly scale = b.at(n) * Rational(factorial(static_cast<unsigned long>(n))).inverse();
        if (n % 2 == 1) scale = -scale;
        if (!scale.is_zero()) acc = acc + shift_mul_t(d, n) * scale;
    }
    return acc;
}

inline TSeries derivative_transform_rhs(const TSeries& g, const CoeffSeq& a) {
    return derivative_weighted_rhs(g, binomial_transform(a));
}

// --- Stirling transforms --------------------------------------------------------

// LHS of the Stirling transform: sum_n f(n) g_n t^n for polynomial f.
inline TSeries stirling_lhs(const Poly1& f, const TSeries& g) {
    return TSeries::from_coeffs(g.order(),
                                [&](int n) { return g.coeff(n) * f.eval(Rational(n)); });
}

// RHS: sum_{n<=deg f} f_n sum_k {n,k} t^k g^{(k)}(t).
inline TSeries stirling_rhs(const Poly1& f, const TSeries& g, const Sequences& seqs) {
    int order = g.order();
    TSeries acc(order);
    std::vector<TSeries> derivs = {g};
    for (int k = 1; k <= f.degree(); ++k) derivs.push_back(series_derivative(derivs.back()));
    for (int n = 0; n <= f.degree(); ++n) {
        if (f.coeff(static_cast<std::size_t>(n)).is_zero()) continue;
        TSeries inner(order);
        for (int k = 0; k <= n; ++k) {
            Rational w(seqs.stirling2(n, k));
            if (w.is_zero()) continue;
            inner = inner + shift_mul_t(derivs[static_cast<std::size_t>(k)], k) * w;
        }
        acc = acc + inner * f.coeff(static_cast<std::size_t>(n));
    }
    return acc;
}

// r-Stirling version. The polynomial factor contributes through
// f_r(n) = sum_{j>=r} f_j n^{j-r} (monomials below degree r drop out), and
// the left side carries the falling factorial (n)_r:
//   sum_n (n)_r f_r(n) g_n t^n = sum_{n=r..deg f} f_n sum_k {n,k}_r t^k g^{(k)}.
inline TSeries r_stirling_lhs(const Poly1& f, const TSeries& g, int r) {
    return TSeries::from_coeffs(g.order(), [&](int n) {
        Rational fr;  // f_r(n)
        for (int j = r; j <= f.degree(); ++j)
            fr += f.coeff(static_cast<std::size_t>(j)) *
                  Rational(n).pow(static_cast<unsigned long>(j - r));
        return g.coeff(n) * (falling_factorial(Rational(n), static_cast<unsigned long>(r)) * fr);
    });
}

inline TSeries r_stirling_rhs(const Poly1& f, const TSeries& g, int r, const Sequences& seqs) {
    int order = g.order();
    TSeries acc(order);
    std::vector<TSeries> derivs = {g};
    for (int k = 1; k <= f.degree(); ++k) derivs.push_back(series_derivative(derivs.back()));
    for (int n = r; n <= f.degree(); ++n) {
        if (f.coeff(static_cast<std::size_t>(n)).is_zero()) continue;
        TSeries inner(order);
        for (int k = 0; k <= n; ++k) {
            Rational w(seqs.r_stirling2(n, k, r));
            if (w.is_zero()) continue;
            inner = inner + shift_mul_t(derivs[static_cast<std::size_t>(k)], k) * w;
        }
        acc = acc + inner * f.coeff(static_cast<std::size_t>(n));
    }
    return acc;
}

// --- comparison report ----------------------------------------------------------

struct TransformReport {
    TSeries lhs, rhs;
    int compared_order = -1;
    std::optional<SeriesMismatch> first_mismatch;
    bool pass() const { return !first_mismatch.has_value(); }
};

inline TransformReport make_report(TSeries lhs, TSeries rhs) {
    SeriesComparison cmp = compare_reliable(lhs, rhs);
    return TransformReport{std::move(lhs), std::move(rhs), cmp.compared_order, cmp.first_mismatch};
}

inline TransformReport stirling_transform(const Poly1& f, const TSeries& g, const Sequences& seqs) {
    return make_report(stirling_lhs(f, g), stirling_rhs(f, g, seqs));
}

inline TransformReport r_stirling_transform(const Poly1& f, const TSeries& g, int r,
                                            const Sequences& seqs) {
    if (r < 0) throw contract_error("r_stirling_transform: negative r");
    return make_report(r_stirling_lhs(f, g, r), r_stirling_rhs(f, g, r, seqs));
}

}  // namespace hps
