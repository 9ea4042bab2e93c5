#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hps/identities.hpp"

namespace hps {

// Neumaier-compensated summation: the running compensation also absorbs the
// case where the incoming term dominates the running sum, which plain Kahan
// summation loses on the alternating Hermite series.
inline double neumaier_sum(const std::vector<double>& terms) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : terms) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

struct EvalResult {
    std::string id;
    EvalPoint point;
    double lhs = 0.0;
    double rhs = 0.0;
    double absdiff = 0.0;
};

struct AccelReport {
    std::string id;
    EvalPoint point;
    double tol = 0.0;
    int lhs_terms = 0;
    int rhs_terms = 0;
    bool lhs_converged = false;
    bool rhs_converged = false;
};

namespace detail {

inline void check_point(const EvalPoint& pt) {
    if (!(std::abs(pt.t) <= kEvalRadius))
        throw std::domain_error("evaluation point outside the safety radius |t| <= 0.25");
    if (pt.truncation < 0) throw std::domain_error("truncation must be nonnegative");
}

inline double side_value(const NumericSide& side, const EvalPoint& pt, int trunc) {
    return side.prefactor(pt) * neumaier_sum(side.terms(pt, trunc));
}

// Smallest prefix of the side's term list whose compensated partial sum is
// within tol of the truncation-30 reference value; second member reports
// whether any prefix up to the point's truncation got there.
inline std::pair<int, bool> terms_to_tol(const NumericSide& side, const EvalPoint& pt,
                                         double tol) {
    double ref = side_value(side, pt, 30);
    double pref = side.prefactor(pt);
    if (std::abs(ref) <= tol) return {0, true};
    auto terms = side.terms(pt, pt.truncation);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double v = terms[i];
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
        if (std::abs(pref * (sum + comp) - ref) <= tol)
            return {static_cast<int>(i) + 1, true};
    }
    return {static_cast<int>(terms.size()), false};
}

}  // namespace detail

inline EvalResult eval_identity(const Registry& reg, const std::string& id,
                                const EvalPoint& pt) {
    detail::check_point(pt);
    const IdentityRecord& rec = reg.lookup(id);
    if (!rec.numeric)
        throw std::invalid_argument("identity " + id + " has no numeric evaluator");
    EvalResult res;
    res.id = id;
    res.point = pt;
    res.lhs = detail::side_value(rec.numeric->lhs, pt, pt.truncation);
    res.rhs = detail::side_value(rec.numeric->rhs, pt, pt.truncation);
    res.absdiff = std::abs(res.lhs - res.rhs);
    return res;
}

inline AccelReport measure_acceleration(const Registry& reg, const std::string& id,
                                        const EvalPoint& pt, double tol) {
    detail::check_point(pt);
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    const IdentityRecord& rec = reg.lookup(id);
    if (!rec.numeric)
        throw std::invalid_argument("identity " + id + " has no numeric evaluator");
    AccelReport rep;
    rep.id = id;
    rep.point = pt;
    rep.tol = tol;
    auto l = detail::terms_to_tol(rec.numeric->lhs, pt, tol);
    auto r = detail::terms_to_tol(rec.numeric->rhs, pt, tol);
    rep.lhs_terms = l.first;
    rep.lhs_converged = l.second;
    rep.rhs_terms = r.first;
    rep.rhs_converged = r.second;
    return rep;
}

// {alpha, n} for real alpha > 0 through the alternating binomial sum, with
// the k = 0 term taken as its limit value 0.  (For integer alpha this matches
// the exact triangle wherever n <= alpha reaches it; the n = 0 value is 0
// under this convention rather than the combinatorial {0,0} = 1.)
inline double stirling2_real(double alpha, int n) {
    if (!(alpha > 0.0)) throw std::domain_error("stirling2_real requires alpha > 0");
    if (n < 0) throw std::domain_error("stirling2_real requires n >= 0");
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        double c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))
                       .get_d();
        double sgn = (n - k) % 2 == 0 ? 1.0 : -1.0;
        terms.push_back(sgn * c * std::exp(alpha * std::log(static_cast<double>(k))));
    }
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    return neumaier_sum(terms) / fact;
}

// Floating-point spot check of the real-exponent transform: the weighted
// series sum k^alpha H_k(x) t^k/k! against e^{2xt-t^2} sum {alpha,n}
// H_n(x-t) t^n with real-alpha Stirling values.
inline EvalResult eval_alpha_identity(double alpha, const EvalPoint& pt) {
    detail::check_point(pt);
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    int trunc = pt.truncation;
    EvalResult res;
    res.id = "EQ53";
    res.point = pt;
    {
        auto h = hermite_doubles(trunc, pt.x);
        std::vector<double> terms;
        double scale = 1.0;
        for (int k = 0; k <= trunc; ++k) {
            if (k > 0) scale *= pt.t / k;
            double ka = k == 0 ? 0.0 : std::exp(alpha * std::log(static_cast<double>(k)));
            terms.push_back(ka * h[static_cast<std::size_t>(k)] * scale);
        }
        res.lhs = neumaier_sum(terms);
    }
    {
        auto h = hermite_doubles(trunc, pt.x - pt.t);
        std::vector<double> terms;
        double tn = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            terms.push_back(stirling2_real(alpha, n) * h[static_cast<std::size_t>(n)] * tn);
            tn *= pt.t;
        }
        res.rhs = std::exp(2.0 * pt.x * pt.t - pt.t * pt.t) * neumaier_sum(terms);
    }
    res.absdiff = std::abs(res.lhs - res.rhs);
    return res;
}

}  // namespace hps
