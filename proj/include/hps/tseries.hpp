#pragma once

// Truncated formal power series in t with MPoly coefficients, tracking a
// "reliable order": the largest index rho such that coefficients 0..rho equal
// those of the untruncated computation. Operations that lose information at
// the top (derivative, division by t^r) lower rho instead of silently
// presenting stale data; multiplying by t^r shifts the junk out again. All
// reliability rules below are conservative lower bounds, and every op returns
// a fresh value (a TSeries is immutable once constructed).
//
// Contracts:
//   * binary ops require equal order (no silent re-truncation) -> contract_error
//   * analytic preconditions (exp at nonzero constant term, log away from 1,
//     inverse of a non-unit, composition with nonzero inner constant,
//     division by t^r with nonzero low coefficients) -> std::domain_error

#include "hps/mpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hps {

class TSeries {
  public:
    // Zero series of the given order, fully reliable.
    explicit TSeries(int order) : TSeries(order, std::vector<MPoly>(order + 1), order) {}

    TSeries(int order, std::vector<MPoly> coeffs, int reliable)
        : order_(order), reliable_(reliable), c_(std::move(coeffs)) {
        if (order_ < 0) throw contract_error("TSeries: negative order");
        if (c_.size() != static_cast<std::size_t>(order_) + 1)
            throw contract_error("TSeries: coefficient count does not match order");
        if (reliable_ < -1 || reliable_ > order_)
            throw contract_error("TSeries: reliable order out of range");
    }

    static TSeries constant(int order, const MPoly& c) {
        TSeries s(order);
        s.c_[0] = c;
        return s;
    }

    // c * t^k.
    static TSeries monomial(int order, int k, const MPoly& c) {
        if (k < 0 || k > order) throw contract_error("TSeries::monomial: power out of range");
        TSeries s(order);
        s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    static TSeries from_coeffs(int order, const std::function<MPoly(int)>& fn) {
        TSeries s(order);
        for (int k = 0; k <= order; ++k) s.c_[static_cast<std::size_t>(k)] = fn(k);
        return s;
    }

    int order() const { return order_; }
    int reliable_order() const { return reliable_; }

    const MPoly& coeff(int k) const {
        if (k < 0 || k > order_) throw contract_error("TSeries::coeff: index out of range");
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<MPoly>& coeffs() const { return c_; }

    // Smallest reliable index with a nonzero coefficient; reliable_order()+1
    // when the whole reliable prefix vanishes. This is the valuation bound
    // used by the multiplication reliability rule.
    int reliable_valuation() const {
        for (int k = 0; k <= reliable_; ++k)
            if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
        return reliable_ + 1;
    }

    // Structural equality (order, reliable order, all stored coefficients).
    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.order_ == b.order_ && a.reliable_ == b.reliable_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "order " + std::to_string(order_) + ", reliable " + std::to_string(reliable_);
        for (int k = 0; k <= order_; ++k) {
            s += "\n  t^" + std::to_string(k) + ": " + c_[static_cast<std::size_t>(k)].to_string();
            if (k > reliable_) s += "   [unreliable]";
        }
        return s;
    }

  private:
    int order_;
    int reliable_;
    std::vector<MPoly> c_;
};

namespace detail {
inline void require_same_order(const TSeries& a, const TSeries& b, const char* op) {
    if (a.order() != b.order())
        throw contract_error(std::string("TSeries: mixed-order operands in ") + op);
}
inline int clamp_reliable(int r, int order) { return std::max(-1, std::min(r, order)); }
}  // namespace detail

inline TSeries series_add(const TSeries& a, const TSeries& b) {
    detail::require_same_order(a, b, "series_add");
    std::vector<MPoly> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return TSeries(a.order(), std::move(c), std::min(a.reliable_order(), b.reliable_order()));
}

inline TSeries series_sub(const TSeries& a, const TSeries& b) {
    detail::require_same_order(a, b, "series_sub");
    std::vector<MPoly> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return TSeries(a.order(), std::move(c), std::min(a.reliable_order(), b.reliable_order()));
}

inline TSeries series_neg(const TSeries& a) {
    std::vector<MPoly> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k)] = -a.coeff(k);
    return TSeries(a.order(), std::move(c), a.reliable_order());
}

// Reliability of a product: coefficient j of a*b is trustworthy when every
// contribution either has both factors inside their reliable prefixes or is
// reliably zero, which holds for j <= min(rho_a + val(b), rho_b + val(a)).
inline TSeries series_mul(const TSeries& a, const TSeries& b) {
    detail::require_same_order(a, b, "series_mul");
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    int rel = std::min(a.reliable_order() + b.reliable_valuation(),
                       b.reliable_order() + a.reliable_valuation());
    return TSeries(n, std::move(c), detail::clamp_reliable(rel, n));
}

inline TSeries operator+(const TSeries& a, const TSeries& b) { return series_add(a, b); }
inline TSeries operator-(const TSeries& a, const TSeries& b) { return series_sub(a, b); }
inline TSeries operator-(const TSeries& a) { return series_neg(a); }
inline TSeries operator*(const TSeries& a, const TSeries& b) { return series_mul(a, b); }

// Scalar (t-free) multiplication keeps reliability: a reliable coefficient
// scaled by an exact polynomial is still the true coefficient.
inline TSeries operator*(const TSeries& a, const MPoly& s) {
    std::vector<MPoly> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) * s;
    return TSeries(a.order(), std::move(c), a.reliable_order());
}
inline TSeries operator*(const MPoly& s, const TSeries& a) { return a * s; }
inline TSeries operator*(const TSeries& a, const Rational& s) { return a * MPoly(s); }
inline TSeries operator*(const Rational& s, const TSeries& a) { return a * MPoly(s); }
inline TSeries operator*(const TSeries& a, long s) { return a * MPoly(Rational(s)); }
inline TSeries operator*(long s, const TSeries& a) { return a * MPoly(Rational(s)); }

// Truncation to a lower order is always explicit.
inline TSeries truncate(const TSeries& a, int new_order) {
    if (new_order < 0 || new_order > a.order())
        throw contract_error("truncate: new order out of range");
    std::vector<MPoly> c(a.coeffs().begin(), a.coeffs().begin() + new_order + 1);
    return TSeries(new_order, std::move(c), std::min(a.reliable_order(), new_order));
}

inline MPoly coefficient(const TSeries& a, int k) { return a.coeff(k); }

// t^r * a: coefficients shift up, the top r fall away, and reliability rises
// by r (capped) because the low zeros and the shifted prefix are exact.
inline TSeries shift_mul_t(const TSeries& a, int r) {
    if (r < 0) throw contract_error("shift_mul_t: negative shift");
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = r; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k - r);
    int rel = r > n ? n : std::min(a.reliable_order() + r, n);
    return TSeries(n, std::move(c), detail::clamp_reliable(rel, n));
}

// a / t^r: requires the stored coefficients below t^r to vanish. The top r
// slots are re-padded with zeros and flagged unreliable via the reliable
// order, which drops by r.
inline TSeries shift_div_t(const TSeries& a, int r) {
    if (r < 0) throw contract_error("shift_div_t: negative shift");
    int n = a.order();
    for (int k = 0; k < r && k <= n; ++k)
        if (!a.coeff(k).is_zero())
            throw std::domain_error("shift_div_t: nonzero coefficient below t^" + std::to_string(r));
    if (r > n) throw std::domain_error("shift_div_t: shift exceeds order");
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k + r <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k + r);
    return TSeries(n, std::move(c), detail::clamp_reliable(a.reliable_order() - r, n));
}

// d/dt: the top coefficient is unknowable at this order; it is re-padded with
// zero and excluded from the reliable range.
inline TSeries series_derivative(const TSeries& a) {
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k + 1 <= n; ++k)
        c[static_cast<std::size_t>(k)] = a.coeff(k + 1) * Rational(k + 1);
    return TSeries(n, std::move(c), detail::clamp_reliable(a.reliable_order() - 1, n));
}

// (t d/dt)^n. The shift re-absorbs the derivative's unreliable top slot, so
// full reliability is preserved.
inline TSeries euler_operator(const TSeries& a, int n) {
    if (n < 0) throw contract_error("euler_operator: negative iteration count");
    TSeries r = a;
    for (int i = 0; i < n; ++i) r = shift_mul_t(series_derivative(r), 1);
    return r;
}

// 1/a. Requires an invertible scalar constant term (t-free and nonzero).
inline TSeries series_inverse(const TSeries& a) {
    const MPoly& a0 = a.coeff(0);
    if (!a0.is_constant() || a0.is_zero())
        throw std::domain_error("series_inverse: constant term must be a nonzero scalar");
    Rational inv0 = a0.constant_term().inverse();
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    c[0] = MPoly(inv0);
    for (int k = 1; k <= n; ++k) {
        MPoly acc;  // sum_{i=1..k} a_i * b_{k-i}
        for (int i = 1; i <= k; ++i) acc += a.coeff(i) * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = acc * -inv0;
    }
    return TSeries(n, std::move(c), a.reliable_order());
}

// exp(a) for a with zero constant term, via e' = a' e:
// k*e_k = sum_{i=1..k} i * a_i * e_{k-i}.
inline TSeries series_exp(const TSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must be zero");
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    c[0] = MPoly(1);
    for (int k = 1; k <= n; ++k) {
        MPoly acc;
        for (int i = 1; i <= k; ++i)
            acc += a.coeff(i) * c[static_cast<std::size_t>(k - i)] * Rational(i);
        c[static_cast<std::size_t>(k)] = acc * Rational(1, k);
    }
    return TSeries(n, std::move(c), a.reliable_order());
}

// log(a) for a with constant term 1, via a * l' = a':
// l_k = a_k - (1/k) * sum_{i=1..k-1} i * l_i * a_{k-i}.
inline TSeries series_log(const TSeries& a) {
    if (a.coeff(0) != MPoly(1))
        throw std::domain_error("series_log: constant term must be 1");
    int n = a.order();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        MPoly acc;
        for (int i = 1; i < k; ++i)
            acc += c[static_cast<std::size_t>(i)] * a.coeff(k - i) * Rational(i);
        c[static_cast<std::size_t>(k)] = a.coeff(k) - acc * Rational(1, k);
    }
    return TSeries(n, std::move(c), a.reliable_order());
}

// f(g) for g with zero constant term. Coefficient j depends on f_k for
// k <= j/val(g) and on g_1..g_j, giving the reliability bound below.
inline TSeries series_compose(const TSeries& f, const TSeries& g) {
    detail::require_same_order(f, g, "series_compose");
    if (!g.coeff(0).is_zero())
        throw std::domain_error("series_compose: inner constant term must be zero");
    int n = f.order();
    std::vector<MPoly> acc(static_cast<std::size_t>(n) + 1);
    std::vector<MPoly> gpow(static_cast<std::size_t>(n) + 1);  // g^k, raw coefficients
    gpow[0] = MPoly(1);
    acc[0] = f.coeff(0);
    for (int k = 1; k <= n; ++k) {
        // gpow <- gpow * g (in place, descending index walk not needed: fresh buffer)
        std::vector<MPoly> next(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            if (gpow[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 1; i + j <= n; ++j)
                next[static_cast<std::size_t>(i + j)] +=
                    gpow[static_cast<std::size_t>(i)] * g.coeff(j);
        }
        gpow = std::move(next);
        if (f.coeff(k).is_zero()) continue;
        for (int j = k; j <= n; ++j)
            acc[static_cast<std::size_t>(j)] += f.coeff(k) * gpow[static_cast<std::size_t>(j)];
    }
    int v = std::max(1, g.reliable_valuation());
    long f_bound = static_cast<long>(v) * (f.reliable_order() + 1) - 1;
    int rel = static_cast<int>(std::min<long>(f_bound, g.reliable_order()));
    return TSeries(n, std::move(acc), detail::clamp_reliable(rel, n));
}

inline TSeries series_pow(const TSeries& a, unsigned e) {
    TSeries r = TSeries::constant(a.order(), MPoly(1));
    TSeries base = a;
    while (e > 0) {
        if (e & 1u) r = series_mul(r, base);
        e >>= 1u;
        if (e > 0) base = series_mul(base, base);
    }
    return r;
}

// --- comparison -------------------------------------------------------------

struct SeriesMismatch {
    int power = 0;
    MPoly lhs, rhs;
};

struct SeriesComparison {
    int compared_order = -1;  // min of the two reliable orders
    std::optional<SeriesMismatch> first_mismatch;
    bool equal() const { return !first_mismatch.has_value(); }
};

// Compare two series of equal order over the shared reliable range.
inline SeriesComparison compare_reliable(const TSeries& a, const TSeries& b) {
    detail::require_same_order(a, b, "compare_reliable");
    SeriesComparison r;
    r.compared_order = std::min(a.reliable_order(), b.reliable_order());
    for (int k = 0; k <= r.compared_order; ++k) {
        if (a.coeff(k) != b.coeff(k)) {
            r.first_mismatch = SeriesMismatch{k, a.coeff(k), b.coeff(k)};
            break;
        }
    }
    return r;
}

// --- common constructions ---------------------------------------------------

// The series t (the zero series at order 0, where t truncates away).
inline TSeries series_t(int order) {
    return order == 0 ? TSeries(0) : TSeries::monomial(order, 1, MPoly(1));
}

// 1 - t (handy building block for the geometric-type series).
inline TSeries one_minus_t(int order) {
    return TSeries::constant(order, MPoly(1)) - series_t(order);
}

// Evaluate a univariate polynomial at a series argument (Horner).
inline TSeries poly1_at_series(const Poly1& f, const TSeries& s) {
    TSeries acc = TSeries::constant(s.order(), MPoly(f.coeff(static_cast<std::size_t>(
                                                   std::max(f.degree(), 0)))));
    for (int k = f.degree() - 1; k >= 0; --k)
        acc = series_mul(acc, s) + TSeries::constant(s.order(), MPoly(f.coeff(static_cast<std::size_t>(k))));
    return acc;
}

// Embed a univariate polynomial as the series f(t).
inline TSeries poly1_as_series(const Poly1& f, int order) {
    return TSeries::from_coeffs(order, [&](int k) { return MPoly(f.coeff(static_cast<std::size_t>(k))); });
}

}  // namespace hps
