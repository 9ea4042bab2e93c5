#pragma once

// Special polynomial families: Hermite (physicists'), Laguerre, and the
// exponential/geometric polynomials together with their r-restricted
// versions. The r-restricted families come in two independently computed
// routes — a closed form read off the r-Stirling table and an operator-route
// extraction — which the tests and the identity catalog compare.

#include "hps/mpoly.hpp"
#include "hps/sequences.hpp"
#include "hps/tseries.hpp"

#include <vector>

namespace hps {

// H_0..H_nmax evaluated at an arbitrary polynomial argument, via the
// three-term recurrence H_{k+1} = 2a H_k - 2k H_{k-1}.
inline std::vector<MPoly> hermite_all_at(int nmax, const MPoly& arg) {
    std::vector<MPoly> h;
    h.reserve(static_cast<std::size_t>(nmax) + 1);
    if (nmax >= 0) h.push_back(MPoly(1));
    if (nmax >= 1) h.push_back(arg * 2);
    for (int k = 1; k < nmax; ++k)
        h.push_back(arg * 2 * h[static_cast<std::size_t>(k)] -
                    h[static_cast<std::size_t>(k) - 1] * Rational(2 * k));
    return h;
}

inline std::vector<MPoly> hermite_all(int nmax) {
    return hermite_all_at(nmax, MPoly::variable(Symbol::x));
}

inline MPoly hermite(int n) {
    if (n < 0) throw contract_error("hermite: negative degree");
    return hermite_all(n).back();
}

// Same recurrence with a truncated-series argument, e.g. H_n(x - t).
inline std::vector<TSeries> hermite_all_at_series(int nmax, const TSeries& arg) {
    std::vector<TSeries> h;
    h.reserve(static_cast<std::size_t>(nmax) + 1);
    int order = arg.order();
    if (nmax >= 0) h.push_back(TSeries::constant(order, MPoly(1)));
    if (nmax >= 1) h.push_back(arg * Rational(2));
    for (int k = 1; k < nmax; ++k)
        h.push_back(series_mul(arg, h[static_cast<std::size_t>(k)]) * Rational(2) -
                    h[static_cast<std::size_t>(k) - 1] * Rational(2 * k));
    return h;
}

// Laguerre polynomial L_n(z) = sum_k C(n,k) (-z)^k / k!.
inline MPoly laguerre(int n) {
    if (n < 0) throw contract_error("laguerre: negative degree");
    MPoly r;
    for (int k = 0; k <= n; ++k) {
        Rational c = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) /
                     Rational(factorial(static_cast<unsigned long>(k)));
        if (k % 2 == 1) c = -c;
        r += MPoly::term(c, Monomial::var(Symbol::z, static_cast<std::uint32_t>(k)));
    }
    return r;
}

// Exponential polynomial phi_n(t) = sum_k {n,k} t^k.
inline Poly1 exp_poly(int n, const Sequences& seqs) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Rational(seqs.stirling2(n, k));
    return Poly1(std::move(c));
}

// Geometric polynomial w_n(t) = sum_k {n,k} k! t^k.
inline Poly1 geom_poly(int n, const Sequences& seqs) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] =
            Rational(seqs.stirling2(n, k) * factorial(static_cast<unsigned long>(k)));
    return Poly1(std::move(c));
}

// r-restricted closed forms, read off the r-Stirling table.
inline Poly1 r_exp_poly(int n, int r, const Sequences& seqs) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Rational(seqs.r_stirling2(n, k, r));
    return Poly1(std::move(c));
}

inline Poly1 r_geom_poly(int n, int r, const Sequences& seqs) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] =
            Rational(seqs.r_stirling2(n, k, r) * factorial(static_cast<unsigned long>(k)));
    return Poly1(std::move(c));
}

namespace detail {

// Read a polynomial of expected degree <= deg out of a series whose
// remaining reliable coefficients must vanish; a nonzero tail means the
// extraction premise failed.
inline Poly1 extract_poly(const TSeries& s, int deg, const char* what) {
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(s.coeff(k).as_constant());
    for (int k = deg + 1; k <= s.reliable_order(); ++k)
        if (!s.coeff(k).is_zero())
            throw contract_error(std::string(what) + ": extraction left a nonzero tail");
    return Poly1(std::move(c));
}

}  // namespace detail

// Operator-route extraction of the r-exponential polynomial: compute
// (t d/dt)^{n-r} [t^r e^t] = P(t) e^t and strip the exponential. Uses only
// series primitives — no Stirling tables — so it is an independent
// characterization of the closed form above.
inline Poly1 r_exp_poly_extracted(int n, int r) {
    if (n < r || r < 0) throw contract_error("r_exp_poly_extracted: need 0 <= r <= n");
    int order = n + 3;  // a few extra slots so the zero tail is actually checked
    TSeries et = series_exp(series_t(order));
    TSeries s = euler_operator(shift_mul_t(et, r), n - r);
    TSeries p = series_mul(s, series_exp(series_neg(series_t(order))));  // times e^{-t}
    return detail::extract_poly(p, n, "r_exp_poly_extracted");
}

// Operator-route extraction of the r-geometric polynomial from
// r! (t d/dt)^{n-r} [t^r / (1-t)^{r+1}] = (1/(1-t)) w(t/(1-t)):
// multiply by (1-t) and substitute t -> u/(1+u) to recover w(u).
inline Poly1 r_geom_poly_extracted(int n, int r) {
    if (n < r || r < 0) throw contract_error("r_geom_poly_extracted: need 0 <= r <= n");
    int order = n + 3;
    TSeries geom = series_inverse(series_pow(one_minus_t(order), static_cast<unsigned>(r) + 1));
    TSeries s = euler_operator(shift_mul_t(geom, r), n - r) * Rational(factorial(static_cast<unsigned long>(r)));
    TSeries q = series_mul(one_minus_t(order), s);
    // u/(1+u)
    TSeries inner = shift_mul_t(series_inverse(TSeries::constant(order, MPoly(1)) + series_t(order)), 1);
    TSeries w = series_compose(q, inner);
    return detail::extract_poly(w, n, "r_geom_poly_extracted");
}

}  // namespace hps
