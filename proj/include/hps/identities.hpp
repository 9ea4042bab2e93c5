#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hps/eval_point.hpp"
#include "hps/special_polynomials.hpp"
#include "hps/transforms.hpp"

namespace hps {

enum class IdentityKind { series, finite_sum, operator_id };

inline const char* kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::series: return "series";
        case IdentityKind::finite_sum: return "finite-sum";
        case IdentityKind::operator_id: return "operator";
    }
    throw contract_error("unknown identity kind");
}

// One catalog entry.  Both sides are builders order -> TSeries; finite-sum
// entries encode the n-th instance of the sum as the coefficient of t^n, so
// one comparison at order N checks instances 0..N.  The optional numeric
// pair is the double-precision shadow used by eval/accel.
struct IdentityRecord {
    std::string id;
    std::string paper_eq;
    IdentityKind kind = IdentityKind::series;
    std::string symbols;  // comma-separated subset of x,y,z,p
    std::string notes;
    int default_order = 12;
    std::function<TSeries(int)> lhs;
    std::function<TSeries(int)> rhs;
    std::optional<NumericPair> numeric;
};

struct IdentityResult {
    std::string id;
    std::string paper_eq;
    int order = 0;
    int compared_order = 0;
    bool pass = false;
    std::optional<SeriesMismatch> mismatch;
    long long millis = 0;
};

struct SuiteReport {
    int order = 0;
    std::vector<IdentityResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& r : results)
            if (!r.pass) ++n;
        return n;
    }
};

namespace detail {

// Equation labels admissible in paper_eq, i.e. the catalog's bibliography
// table: the numbered statements (1)..(105) plus the grouped corollary
// labels used when one record covers a run of displayed forms.
inline const std::set<std::string>& catalog_labels() {
    static const std::set<std::string> labels = [] {
        std::set<std::string> s;
        for (int i = 1; i <= 105; ++i) s.insert("(" + std::to_string(i) + ")");
        for (const char* extra :
             {"(14)-(15)", "(24)-(25)", "(28)-(30)", "(43)-(44)", "(55)-(57)",
              "(59)-(61)", "(63)-(65)", "(66)-(68)", "(70)-(71)", "(75)-(76)",
              "(79)-(81)", "(82)-(84)", "(89+)"})
            s.insert(extra);
        return s;
    }();
    return labels;
}

inline Rational binom_r(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

inline Rational sign_r(int n) { return Rational(n % 2 == 0 ? 1 : -1); }

inline Rational inv_factorial(int n) {
    return Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
}

// e^{2xt - t^2}, the Hermite generating function.
inline TSeries hermite_gf(int order) {
    const MPoly X = MPoly::variable(Symbol::x);
    return series_exp(shift_mul_t(TSeries::constant(order, X * 2), 1) -
                      shift_mul_t(TSeries::constant(order, MPoly(1)), 2));
}

// (1 - 4t^2)^{-1/2} assembled from central binomial coefficients; its square
// is the geometric series in 4t^2, which the test suite checks separately.
inline TSeries central_binomial_sqrt(int order) {
    return TSeries::from_coeffs(order, [](int n) {
        if (n % 2 != 0) return MPoly();
        unsigned long m = static_cast<unsigned long>(n / 2);
        return MPoly(Rational(binomial(2 * m, m)));
    });
}

// exp((4xzt - 4x^2t^2 - 4z^2t^2) / (1 - 4t^2)) * (1 - 4t^2)^{-1/2}.
inline TSeries mehler_closed(int order) {
    const MPoly X = MPoly::variable(Symbol::x);
    const MPoly Z = MPoly::variable(Symbol::z);
    TSeries numer = shift_mul_t(TSeries::constant(order, X * Z * 4), 1) -
                    shift_mul_t(TSeries::constant(order, (X * X + Z * Z) * 4), 2);
    TSeries denom = TSeries::constant(order, MPoly(1)) -
                    shift_mul_t(TSeries::constant(order, MPoly(4)), 2);
    TSeries ratio = numer * series_inverse(denom);
    return central_binomial_sqrt(order) * series_exp(ratio);
}

// sum_n H_n(x) H_n(z) t^n / n!, the bilinear Hermite series.
inline TSeries bilinear_hermite_lhs(int order) {
    auto hx = hermite_all(order);
    auto hz = hermite_all_at(order, MPoly::variable(Symbol::z));
    return TSeries::from_coeffs(order, [&](int n) {
        return hx[static_cast<std::size_t>(n)] * hz[static_cast<std::size_t>(n)] *
               inv_factorial(n);
    });
}

// e^{4uxt - 4u^2t^2} * sum_n H_n(x - 2ut) H_n(z - u) t^n / n! with u a fixed
// polynomial argument (u = y for the general form, u = z for the Mehler
// specialization).
inline TSeries bilinear_hermite_rhs(int order, const MPoly& u) {
    const MPoly X = MPoly::variable(Symbol::x);
    const MPoly Z = MPoly::variable(Symbol::z);
    TSeries expo = shift_mul_t(TSeries::constant(order, X * u * 4), 1) -
                   shift_mul_t(TSeries::constant(order, u * u * 4), 2);
    TSeries arg = TSeries::constant(order, X) -
                  shift_mul_t(TSeries::constant(order, u * 2), 1);
    auto hs = hermite_all_at_series(order, arg);
    auto hz = hermite_all_at(order, Z - u);
    TSeries acc(order);
    for (int n = 0; n <= order; ++n) {
        TSeries term = hs[static_cast<std::size_t>(n)] *
                       (hz[static_cast<std::size_t>(n)] * inv_factorial(n));
        acc = acc + shift_mul_t(term, n);
    }
    return series_exp(expo) * acc;
}

// Numeric shadow of a Hermite-weighted pair: the left side sums
// a_n H_n(x) t^n/n!, the right side is e^{2xt-t^2} sum (-1)^n H_n(x-t)
// b_n t^n/n!.  Symbolic coefficients are evaluated at the point (p -> 0).
inline NumericPair hermite_pair_numeric(CoeffSeq a, CoeffSeq b) {
    NumericPair np;
    np.lhs.terms = [a](const EvalPoint& pt, int trunc) {
        auto h = hermite_doubles(trunc, pt.x);
        auto sym = pt.symbol_values();
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(trunc) + 1);
        double scale = 1.0;  // t^n / n!
        for (int n = 0; n <= trunc; ++n) {
            if (n > 0) scale *= pt.t / n;
            out.push_back(a.at(n).eval_double(sym) * h[static_cast<std::size_t>(n)] * scale);
        }
        return out;
    };
    np.rhs.prefactor = [](const EvalPoint& pt) {
        return std::exp(2.0 * pt.x * pt.t - pt.t * pt.t);
    };
    np.rhs.terms = [b](const EvalPoint& pt, int trunc) {
        auto h = hermite_doubles(trunc, pt.x - pt.t);
        auto sym = pt.symbol_values();
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(trunc) + 1);
        double scale = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            if (n > 0) scale *= pt.t / n;
            double sgn = n % 2 == 0 ? 1.0 : -1.0;
            out.push_back(sgn * b.at(n).eval_double(sym) * h[static_cast<std::size_t>(n)] * scale);
        }
        return out;
    };
    return np;
}

// Numeric shadow of a generating-function record, evaluated along the
// transform itself: the left side sums a_k u^k at u = mu t/(1 - lambda t)
// with prefactor 1/(1 - lambda t); the right side sums b_n t^n.  The two
// sides converge at genuinely different rates, which is what accel measures.
inline NumericPair euler_route_numeric(CoeffSeq a, CoeffSeq b, double lambda, double mu) {
    NumericPair np;
    np.lhs.prefactor = [lambda](const EvalPoint& pt) { return 1.0 / (1.0 - lambda * pt.t); };
    np.lhs.terms = [a, lambda, mu](const EvalPoint& pt, int trunc) {
        double u = mu * pt.t / (1.0 - lambda * pt.t);
        auto sym = pt.symbol_values();
        std::vector<double> out;
        double uk = 1.0;
        for (int k = 0; k <= trunc; ++k) {
            out.push_back(a.at(k).eval_double(sym) * uk);
            uk *= u;
        }
        return out;
    };
    np.rhs.terms = [b](const EvalPoint& pt, int trunc) {
        auto sym = pt.symbol_values();
        std::vector<double> out;
        double tn = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            out.push_back(b.at(n).eval_double(sym) * tn);
            tn *= pt.t;
        }
        return out;
    };
    return np;
}

// Numeric shadow for generating-function records whose untransformed side
// converges too slowly at the safety radius (Fibonacci/Lucas weights): both
// sides emit the coefficient of t^n, computed along different arithmetic
// routes (binomial accumulation vs. the memoized sequence), so partial sums
// of equal length agree to rounding.
inline NumericPair matched_sum_numeric(CoeffSeq a, CoeffSeq b, double lambda, double mu) {
    NumericPair np;
    np.lhs.terms = [a, lambda, mu](const EvalPoint& pt, int trunc) {
        auto sym = pt.symbol_values();
        std::vector<double> av;
        for (int k = 0; k <= trunc; ++k) av.push_back(a.at(k).eval_double(sym));
        std::vector<double> out;
        double tn = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            double s = 0.0;
            for (int k = 0; k <= n; ++k)
                s += binom_r(n, k).to_double() * std::pow(mu, k) *
                     std::pow(lambda, n - k) * av[static_cast<std::size_t>(k)];
            out.push_back(s * tn);
            tn *= pt.t;
        }
        return out;
    };
    np.rhs.terms = [b](const EvalPoint& pt, int trunc) {
        auto sym = pt.symbol_values();
        std::vector<double> out;
        double tn = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            out.push_back(b.at(n).eval_double(sym) * tn);
            tn *= pt.t;
        }
        return out;
    };
    return np;
}

// Numeric shadow of the polynomial-weighted (r-)Stirling records over
// g = e^{2xt-t^2}: the left side sums g_n (n)_r f_r(n) t^n; the right side
// is e^{2xt-t^2} times the finite double sum f_n {n,k}_r t^k H_k(x-t).
inline NumericPair stirling_series_numeric(Poly1 f, int r,
                                           std::shared_ptr<const Sequences> seqs) {
    NumericPair np;
    np.lhs.terms = [f, r](const EvalPoint& pt, int trunc) {
        auto h = hermite_doubles(trunc, pt.x);
        std::vector<double> out;
        double scale = 1.0;
        for (int n = 0; n <= trunc; ++n) {
            if (n > 0) scale *= pt.t / n;
            double fr = 0.0;  // f_r(n) = sum_{j>=r} f_j n^{j-r}
            for (int j = f.degree(); j >= r; --j)
                fr = fr * n + f.coeff(static_cast<std::size_t>(j)).to_double();
            double falling = 1.0;  // (n)_r
            for (int i = 0; i < r; ++i) falling *= n - i;
            out.push_back(falling * fr * h[static_cast<std::size_t>(n)] * scale);
        }
        return out;
    };
    np.rhs.prefactor = [](const EvalPoint& pt) {
        return std::exp(2.0 * pt.x * pt.t - pt.t * pt.t);
    };
    np.rhs.terms = [f, r, seqs](const EvalPoint& pt, int) {
        int d = f.degree();
        auto h = hermite_doubles(d < 0 ? 0 : d, pt.x - pt.t);
        std::vector<double> out;
        for (int n = r; n <= d; ++n) {
            double fn = f.coeff(static_cast<std::size_t>(n)).to_double();
            double tk = 1.0;
            for (int k = 0; k <= n; ++k) {
                double s = seqs->r_stirling2(n, k, r).get_d();
                if (s != 0.0) out.push_back(fn * s * tk * h[static_cast<std::size_t>(k)]);
                tk *= pt.t;
            }
        }
        if (out.empty()) out.push_back(0.0);
        return out;
    };
    return np;
}

}  // namespace detail

// The identity catalog.  Records are immutable once constructed; all of
// them share one Sequences instance so that a seed perturbation flows into
// every route that should notice it.
class Registry {
  public:
    explicit Registry(std::shared_ptr<const Sequences> seqs = nullptr)
        : seqs_(seqs ? std::move(seqs) : std::make_shared<const Sequences>()) {
        register_all();
        if (records_.size() < 55)
            throw contract_error("registry: catalog unexpectedly small");
    }

    const std::vector<IdentityRecord>& records() const { return records_; }
    const Sequences& sequences() const { return *seqs_; }

    bool contains(const std::string& id) const {
        for (const auto& r : records_)
            if (r.id == id) return true;
        return false;
    }

    const IdentityRecord& lookup(const std::string& id) const {
        for (const auto& r : records_)
            if (r.id == id) return r;
        throw std::invalid_argument("unknown identity id: " + id);
    }

    static IdentityResult verify_record(const IdentityRecord& rec, int order) {
        if (order < 0) throw contract_error("verify: order must be nonnegative");
        auto start = std::chrono::steady_clock::now();
        TSeries lhs = rec.lhs(order);
        TSeries rhs = rec.rhs(order);
        SeriesComparison cmp = compare_reliable(lhs, rhs);
        auto stop = std::chrono::steady_clock::now();
        IdentityResult res;
        res.id = rec.id;
        res.paper_eq = rec.paper_eq;
        res.order = order;
        res.compared_order = cmp.compared_order;
        res.pass = cmp.equal();
        res.mismatch = cmp.first_mismatch;
        res.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return res;
    }

    IdentityResult verify(const std::string& id, int order) const {
        return verify_record(lookup(id), order);
    }

    SuiteReport verify_all(int order, int parallelism = 1) const {
        std::vector<const IdentityRecord*> sel;
        sel.reserve(records_.size());
        for (const auto& r : records_) sel.push_back(&r);
        return run_suite(sel, order, parallelism);
    }

    SuiteReport verify_ids(const std::vector<std::string>& ids, int order,
                           int parallelism = 1) const {
        std::vector<const IdentityRecord*> sel;
        sel.reserve(ids.size());
        for (const auto& id : ids) sel.push_back(&lookup(id));
        return run_suite(sel, order, parallelism);
    }

  private:
    static SuiteReport run_suite(const std::vector<const IdentityRecord*>& sel, int order,
                                 int parallelism) {
        if (parallelism < 1) throw contract_error("verify: parallelism must be >= 1");
        SuiteReport rep;
        rep.order = order;
        rep.results.resize(sel.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto work = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= sel.size()) break;
                try {
                    rep.results[i] = verify_record(*sel[i], order);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        };
        std::size_t workers = std::min<std::size_t>(
            static_cast<std::size_t>(parallelism), sel.empty() ? 1 : sel.size());
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
        return rep;
    }

    void add(IdentityRecord rec) {
        if (rec.id.empty()) throw contract_error("registry: empty id");
        if (!detail::catalog_labels().count(rec.paper_eq))
            throw contract_error("registry: unknown catalog label " + rec.paper_eq +
                                 " on " + rec.id);
        for (char c : rec.symbols)
            if (c != ',' && c != 'x' && c != 'y' && c != 'z' && c != 'p')
                throw contract_error("registry: bad symbol list on " + rec.id);
        if (!rec.lhs || !rec.rhs) throw contract_error("registry: missing builder on " + rec.id);
        auto pos = records_.begin();
        while (pos != records_.end() && pos->id < rec.id) ++pos;
        if (pos != records_.end() && pos->id == rec.id)
            throw contract_error("registry: duplicate id " + rec.id);
        records_.insert(pos, std::move(rec));
    }

    // A Hermite-weighted pair: sum a_n H_n(x) t^n/n! against the claimed
    // transform b, rendered through e^{2xt-t^2} sum (-1)^n H_n(x-t) b_n t^n/n!.
    void add_hermite_pair(std::string id, std::string label, std::string symbols,
                          std::string notes, CoeffSeq a, CoeffSeq b) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.paper_eq = std::move(label);
        rec.kind = IdentityKind::series;
        rec.symbols = std::move(symbols);
        rec.notes = std::move(notes);
        rec.lhs = [a](int order) { return hermite_weighted_lhs(a, order); };
        rec.rhs = [b](int order) { return hermite_weighted_rhs(b, order); };
        rec.numeric = detail::hermite_pair_numeric(a, b);
        add(std::move(rec));
    }

    // A generating-function record: the series transform of f with the given
    // (lambda, mu) against the claimed coefficient stream b.
    void add_euler_gf(std::string id, std::string label, std::string symbols,
                      std::string notes, std::function<TSeries(int)> f, Rational lambda,
                      Rational mu, CoeffSeq b, NumericPair numeric) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.paper_eq = std::move(label);
        rec.kind = IdentityKind::series;
        rec.symbols = std::move(symbols);
        rec.notes = std::move(notes);
        rec.lhs = [f = std::move(f), lambda, mu](int order) {
            return euler_transform(f(order), lambda, mu);
        };
        rec.rhs = [b](int order) {
            return TSeries::from_coeffs(order, [&b](int n) { return b.at(n); });
        };
        rec.numeric = std::move(numeric);
        add(std::move(rec));
    }

    // A finite-sum record verified instance-by-instance: coefficient n of the
    // lhs is the alternating binomial sum of a, coefficient n of the rhs is
    // the claimed closed form.
    void add_finite_binomial(std::string id, std::string label, std::string symbols,
                             std::string notes, CoeffSeq a, CoeffSeq b) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.paper_eq = std::move(label);
        rec.kind = IdentityKind::finite_sum;
        rec.symbols = std::move(symbols);
        rec.notes = std::move(notes);
        rec.lhs = [a](int order) {
            return TSeries::from_coeffs(order,
                                        [&a](int n) { return binomial_transform_term(a, n); });
        };
        rec.rhs = [b](int order) {
            return TSeries::from_coeffs(order, [&b](int n) { return b.at(n); });
        };
        add(std::move(rec));
    }

    void add_finite_pair(std::string id, std::string label, std::string symbols,
                         std::string notes, std::function<MPoly(int)> lhs_at,
                         std::function<MPoly(int)> rhs_at) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.paper_eq = std::move(label);
        rec.kind = IdentityKind::finite_sum;
        rec.symbols = std::move(symbols);
        rec.notes = std::move(notes);
        rec.lhs = [fn = std::move(lhs_at)](int order) {
            return TSeries::from_coeffs(order, fn);
        };
        rec.rhs = [fn = std::move(rhs_at)](int order) {
            return TSeries::from_coeffs(order, fn);
        };
        add(std::move(rec));
    }

    void add_operator(std::string id, std::string label, std::string symbols,
                      std::string notes, std::function<TSeries(int)> lhs,
                      std::function<TSeries(int)> rhs) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.paper_eq = std::move(label);
        rec.kind = IdentityKind::operator_id;
        rec.symbols = std::move(symbols);
        rec.notes = std::move(notes);
        rec.lhs = std::move(lhs);
        rec.rhs = std::move(rhs);
        add(std::move(rec));
    }

    void register_all() {
        register_hermite_pairs();
        register_bilinear();
        register_generating_functions();
        register_polynomial_transforms();
        register_finite_sums();
        register_operators();
    }

    void register_hermite_pairs();
    void register_bilinear();
    void register_generating_functions();
    void register_polynomial_transforms();
    void register_finite_sums();
    void register_operators();

    std::shared_ptr<const Sequences> seqs_;
    std::vector<IdentityRecord> records_;
};

inline void Registry::register_hermite_pairs() {
    auto q = seqs_;
    using detail::binom_r;
    using detail::sign_r;

    const MPoly P = MPoly::variable(Symbol::p);
    const MPoly Z = MPoly::variable(Symbol::z);

    CoeffSeq ones = CoeffSeq::constant(MPoly(1));
    CoeffSeq delta{[](int n) { return n == 0 ? MPoly(1) : MPoly(); }};

    {
        IdentityRecord rec;
        rec.id = "EQ1";
        rec.paper_eq = "(1)";
        rec.kind = IdentityKind::series;
        rec.symbols = "x";
        rec.notes = "Hermite generating function: the constant stream a = 1 "
                    "reproduces e^{2xt-t^2} itself; the right side is built "
                    "directly from exp/log series code, not from Hermite data.";
        rec.lhs = [ones](int order) { return hermite_weighted_lhs(ones, order); };
        rec.rhs = [](int order) { return detail::hermite_gf(order); };
        rec.numeric = detail::hermite_pair_numeric(ones, delta);
        add(std::move(rec));
    }

    add_hermite_pair(
        "EQ12", "(12)", "x",
        "a_n = 1/(n+1) is a fixed point of the alternating binomial transform.",
        CoeffSeq{[](int n) { return MPoly(Rational(1, n + 1)); }},
        CoeffSeq{[](int n) { return MPoly(Rational(1, n + 1)); }});

    add_hermite_pair(
        "EQ19", "(19)", "x",
        "a_n = 1/n (n >= 1) transforms to -h_n; the harmonic numbers appear "
        "on the Hermite side.",
        CoeffSeq{[](int n) { return n == 0 ? MPoly() : MPoly(Rational(1, n)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic(n)); }});

    add_hermite_pair(
        "EQ20", "(20)", "x", "Involution partner of EQ19: h_n maps back to -1/n.",
        CoeffSeq{[q](int n) { return MPoly(q->harmonic(n)); }},
        CoeffSeq{[](int n) { return n == 0 ? MPoly() : MPoly(Rational(-1, n)); }});

    add_hermite_pair(
        "EQ22", "(22)", "x",
        "Corrected sign: the printed form of (22) drops the minus sign on the "
        "transformed stream; the verified pair is h_n/(n+1) -> -h_n/(n+1).",
        CoeffSeq{[q](int n) { return MPoly(q->harmonic(n) / Rational(n + 1)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic(n) / Rational(n + 1)); }});

    add_hermite_pair(
        "EQ31", "(31)", "x",
        "a_n = h_n/n (n >= 1) transforms to minus the generalized harmonic "
        "numbers h2_n = sum 1/k^2.",
        CoeffSeq{[q](int n) { return n == 0 ? MPoly() : MPoly(q->harmonic(n) / Rational(n)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic2(n)); }});

    add_hermite_pair(
        "EQ31-SYM", "(31)", "x",
        "Symmetric partner of EQ31 obtained by applying the involution; not "
        "printed in the catalog, recorded here for coverage.",
        CoeffSeq{[q](int n) { return MPoly(q->harmonic2(n)); }},
        CoeffSeq{[q](int n) { return n == 0 ? MPoly() : MPoly(-q->harmonic(n) / Rational(n)); }});

    add_hermite_pair(
        "EQ34", "(34)", "x,z",
        "a_n = z^n/n! transforms to the Laguerre polynomials L_n(z).",
        CoeffSeq{[Z](int n) {
            return Z.pow(static_cast<unsigned long>(n)) * detail::inv_factorial(n);
        }},
        CoeffSeq{[](int n) { return laguerre(n); }});

    add_hermite_pair(
        "EQ35", "(35)", "x,z", "Involution partner of EQ34.",
        CoeffSeq{[](int n) { return laguerre(n); }},
        CoeffSeq{[Z](int n) {
            return Z.pow(static_cast<unsigned long>(n)) * detail::inv_factorial(n);
        }});

    add_hermite_pair(
        "EQ45", "(45)", "x,p",
        "Symbolic binomial stream: a_n = C(p+n,n) transforms to (-1)^n C(p,n), "
        "verified as a polynomial identity in p.",
        CoeffSeq{[P](int n) {
            return binomial_symbolic(P + MPoly(n), static_cast<unsigned long>(n));
        }},
        CoeffSeq{[P](int n) {
            return binomial_symbolic(P, static_cast<unsigned long>(n)) * detail::sign_r(n);
        }});

    for (int m = 1; m <= 4; ++m) {
        std::string id = "EQ46-P" + std::to_string(m);
        add_hermite_pair(
            id, "(46)", "x",
            "Integer specialization p = " + std::to_string(m) +
                " of EQ45: the transformed stream (-1)^n C(p,n) vanishes for "
                "n > p, so the right side carries exactly p+1 Hermite terms.",
            CoeffSeq{[m](int n) {
                return MPoly(binom_r(m + n, n));
            }},
            CoeffSeq{[m](int n) {
                return MPoly(binom_r(m, n) * sign_r(n));
            }});
    }

    add_hermite_pair(
        "EQ50", "(50)", "x",
        "Stirling column shift: a_n = {n+1,3} transforms to (-1)^n {n,2}.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->stirling2(n + 1, 3))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->stirling2(n, 2)) * sign_r(n)); }});

    add_hermite_pair(
        "EQ54", "(54)", "x",
        "Monomial weights: a_n = n^3 transforms to (-1)^n n! {3,n}, which "
        "vanishes for n > 3.",
        CoeffSeq{[](int n) {
            long v = static_cast<long>(n);
            return MPoly(Rational(v * v * v));
        }},
        CoeffSeq{[q](int n) {
            return MPoly(Rational(q->stirling2(3, n) *
                                  factorial(static_cast<unsigned long>(n))) *
                         sign_r(n));
        }});

    add_hermite_pair(
        "EQ58", "(58)", "x",
        "Exponential (Bell) numbers: a_n = phi_{n+1} transforms to (-1)^n phi_n.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->bell(n + 1))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->bell(n)) * sign_r(n)); }});

    add_hermite_pair(
        "EQ62", "(62)", "x",
        "Geometric (Fubini) numbers, corrected seed: with a_0 = 1 and "
        "a_n = 2 w_n for n >= 1 the transform is (-1)^n w_n for all n.  The "
        "printed form of (60)-(62) starts the doubled stream at k = 0, which "
        "fails at n = 0.",
        CoeffSeq{[q](int n) {
            return n == 0 ? MPoly(1) : MPoly(Rational(2 * q->fubini(n)));
        }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fubini(n)) * sign_r(n)); }});

    add_hermite_pair(
        "EQ69", "(69)", "x", "Fibonacci doubling: a_n = F_{2n} transforms to (-1)^n F_n.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(2 * n))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(n)) * sign_r(n)); }});

    add_hermite_pair(
        "EQ73", "(73)", "x", "a_n = F_n transforms to -F_n.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(n))); }},
        CoeffSeq{[q](int n) { return MPoly(-Rational(q->fibonacci(n))); }});

    add_hermite_pair(
        "EQ74", "(74)", "x", "Involution partner of EQ69.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(n)) * sign_r(n)); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(2 * n))); }});

    add_hermite_pair(
        "EQ78", "(78)", "x",
        "Lucas numbers are a fixed point of the alternating transform.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(n))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(n))); }});

    add_hermite_pair(
        "EQ85", "(85)", "x", "Lucas doubling: a_n = L_{2n} transforms to (-1)^n L_n.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(2 * n))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(n)) * sign_r(n)); }});

    add_hermite_pair(
        "EQ86", "(86)", "x", "Involution partner of EQ85.",
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(n)) * sign_r(n)); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(2 * n))); }});
}

inline void Registry::register_bilinear() {
    const MPoly Y = MPoly::variable(Symbol::y);
    const MPoly Z = MPoly::variable(Symbol::z);

    {
        IdentityRecord rec;
        rec.id = "EQ39";
        rec.paper_eq = "(39)";
        rec.kind = IdentityKind::series;
        rec.symbols = "x,y,z";
        rec.notes = "Bilinear Hermite series with a free shift parameter y; "
                    "denominator-cleared form, valid as a polynomial identity "
                    "in all three symbols.";
        rec.lhs = [](int order) { return detail::bilinear_hermite_lhs(order); };
        rec.rhs = [Y](int order) { return detail::bilinear_hermite_rhs(order, Y); };
        NumericPair np;
        np.lhs.terms = [](const EvalPoint& pt, int trunc) {
            auto hx = hermite_doubles(trunc, pt.x);
            auto hz = hermite_doubles(trunc, pt.z);
            std::vector<double> out;
            double scale = 1.0;
            for (int n = 0; n <= trunc; ++n) {
                if (n > 0) scale *= pt.t / n;
                out.push_back(hx[static_cast<std::size_t>(n)] *
                              hz[static_cast<std::size_t>(n)] * scale);
            }
            return out;
        };
        np.rhs.prefactor = [](const EvalPoint& pt) {
            return std::exp(4.0 * pt.x * pt.y * pt.t - 4.0 * pt.y * pt.y * pt.t * pt.t);
        };
        np.rhs.terms = [](const EvalPoint& pt, int trunc) {
            auto ha = hermite_doubles(trunc, pt.x - 2.0 * pt.y * pt.t);
            auto hb = hermite_doubles(trunc, pt.z - pt.y);
            std::vector<double> out;
            double scale = 1.0;
            for (int n = 0; n <= trunc; ++n) {
                if (n > 0) scale *= pt.t / n;
                out.push_back(ha[static_cast<std::size_t>(n)] *
                              hb[static_cast<std::size_t>(n)] * scale);
            }
            return out;
        };
        rec.numeric = np;
        add(std::move(rec));
    }

    {
        IdentityRecord rec;
        rec.id = "EQ41";
        rec.paper_eq = "(41)";
        rec.kind = IdentityKind::series;
        rec.symbols = "x,z";
        rec.notes = "Specialization y = z of EQ39: the surviving H_n(0) "
                    "weights reduce the bilinear series to the closed Mehler "
                    "product.";
        rec.lhs = [Z](int order) { return detail::bilinear_hermite_rhs(order, Z); };
        rec.rhs = [](int order) { return detail::mehler_closed(order); };
        NumericPair np;
        np.lhs.prefactor = [](const EvalPoint& pt) {
            return std::exp(4.0 * pt.x * pt.z * pt.t - 4.0 * pt.z * pt.z * pt.t * pt.t);
        };
        np.lhs.terms = [](const EvalPoint& pt, int trunc) {
            auto ha = hermite_doubles(trunc, pt.x - 2.0 * pt.z * pt.t);
            auto h0 = hermite_doubles(trunc, 0.0);
            std::vector<double> out;
            double scale = 1.0;
            for (int n = 0; n <= trunc; ++n) {
                if (n > 0) scale *= pt.t / n;
                out.push_back(ha[static_cast<std::size_t>(n)] *
                              h0[static_cast<std::size_t>(n)] * scale);
            }
            return out;
        };
        np.rhs = NumericSide::closed_form([](const EvalPoint& pt) {
            double t2 = pt.t * pt.t;
            double denom = 1.0 - 4.0 * t2;
            double expo = (4.0 * pt.x * pt.z * pt.t -
                           4.0 * (pt.x * pt.x + pt.z * pt.z) * t2) /
                          denom;
            return std::exp(expo) / std::sqrt(denom);
        });
        rec.numeric = np;
        add(std::move(rec));
    }

    {
        IdentityRecord rec;
        rec.id = "EQ40-MEHLER";
        rec.paper_eq = "(40)";
        rec.kind = IdentityKind::series;
        rec.symbols = "x,z";
        rec.notes = "Mehler's formula.  The closed side is assembled from "
                    "central binomial coefficients for (1-4t^2)^{-1/2} (whose "
                    "square is checked against the geometric series in 4t^2 "
                    "elsewhere) and an exact exponential of the cleared ratio.";
        rec.lhs = [](int order) { return detail::bilinear_hermite_lhs(order); };
        rec.rhs = [](int order) { return detail::mehler_closed(order); };
        NumericPair np;
        np.lhs.terms = [](const EvalPoint& pt, int trunc) {
            auto hx = hermite_doubles(trunc, pt.x);
            auto hz = hermite_doubles(trunc, pt.z);
            std::vector<double> out;
            double scale = 1.0;
            for (int n = 0; n <= trunc; ++n) {
                if (n > 0) scale *= pt.t / n;
                out.push_back(hx[static_cast<std::size_t>(n)] *
                              hz[static_cast<std::size_t>(n)] * scale);
            }
            return out;
        };
        np.rhs = NumericSide::closed_form([](const EvalPoint& pt) {
            double t2 = pt.t * pt.t;
            double denom = 1.0 - 4.0 * t2;
            double expo = (4.0 * pt.x * pt.z * pt.t -
                           4.0 * (pt.x * pt.x + pt.z * pt.z) * t2) /
                          denom;
            return std::exp(expo) / std::sqrt(denom);
        });
        rec.numeric = np;
        add(std::move(rec));
    }
}

inline void Registry::register_generating_functions() {
    auto q = seqs_;
    const MPoly P = MPoly::variable(Symbol::p);
    const MPoly Z = MPoly::variable(Symbol::z);

    // -log(1-t)/t, built one order high so the shift keeps full reliability.
    auto log_over_t = [](int order) {
        TSeries l = -series_log(one_minus_t(order + 1));
        return truncate(shift_div_t(l, 1), order);
    };
    // log^2(1-t)/(2t) = sum_{n>=1} h_n/(n+1) t^n.
    auto log_sq_over_t = [](int order) {
        TSeries l = series_log(one_minus_t(order + 1));
        return truncate(shift_div_t(l * l * Rational(1, 2), 1), order);
    };
    auto fib_gf = [](int order) {
        TSeries den = poly1_as_series(Poly1({Rational(1), Rational(-1), Rational(-1)}), order);
        return shift_mul_t(series_inverse(den), 1);
    };
    auto fib_alt_gf = [](int order) {  // -t/(1+t-t^2) = sum (-1)^n F_n t^n
        TSeries den = poly1_as_series(Poly1({Rational(1), Rational(1), Rational(-1)}), order);
        return shift_mul_t(series_inverse(den), 1) * Rational(-1);
    };
    auto lucas_gf = [](int order) {  // (2-t)/(1-t-t^2)
        TSeries den = poly1_as_series(Poly1({Rational(1), Rational(-1), Rational(-1)}), order);
        TSeries num = poly1_as_series(Poly1({Rational(2), Rational(-1)}), order);
        return num * series_inverse(den);
    };
    auto lucas_alt_gf = [](int order) {  // (2+t)/(1+t-t^2) = sum (-1)^n L_n t^n
        TSeries den = poly1_as_series(Poly1({Rational(1), Rational(1), Rational(-1)}), order);
        TSeries num = poly1_as_series(Poly1({Rational(2), Rational(1)}), order);
        return num * series_inverse(den);
    };

    CoeffSeq recip1{[](int n) { return MPoly(Rational(1, n + 1)); }};
    CoeffSeq neg_h{[q](int n) { return MPoly(-q->harmonic(n)); }};
    CoeffSeq neg_h_over_n1{[q](int n) { return MPoly(-q->harmonic(n) / Rational(n + 1)); }};
    CoeffSeq neg_h2{[q](int n) { return MPoly(-q->harmonic2(n)); }};
    CoeffSeq lag{[](int n) { return laguerre(n); }};
    CoeffSeq f2n{[q](int n) { return MPoly(Rational(q->fibonacci(2 * n))); }};
    CoeffSeq neg_f{[q](int n) { return MPoly(-Rational(q->fibonacci(n))); }};
    CoeffSeq luc{[q](int n) { return MPoly(Rational(q->lucas(n))); }};
    CoeffSeq l2n{[q](int n) { return MPoly(Rational(q->lucas(2 * n))); }};

    add_euler_gf("EQ14-15", "(14)-(15)", "",
                 "The stream 1/(n+1) is a fixed point at generating-function "
                 "level: (1/(1-t)) f(-t/(1-t)) = f for f = -log(1-t)/t.",
                 log_over_t, 1, -1, recip1,
                 detail::euler_route_numeric(recip1, recip1, 1.0, -1.0));

    add_euler_gf("EQ18", "(18)", "",
                 "Transforming -log(1-t) produces the harmonic generating "
                 "function -sum h_n t^n = log(1-t)/(1-t).",
                 [](int order) { return -series_log(one_minus_t(order)); }, 1, -1, neg_h,
                 detail::euler_route_numeric(
                     CoeffSeq{[](int n) { return n == 0 ? MPoly() : MPoly(Rational(1, n)); }},
                     neg_h, 1.0, -1.0));

    add_euler_gf("EQ24-25", "(24)-(25)", "",
                 "Generating-function witness of the corrected (22)/(23): "
                 "transforming log^2(1-t)/(2t) yields -sum h_n/(n+1) t^n, "
                 "minus sign included.",
                 log_sq_over_t, 1, -1, neg_h_over_n1,
                 detail::euler_route_numeric(
                     CoeffSeq{[q](int n) { return MPoly(q->harmonic(n) / Rational(n + 1)); }},
                     neg_h_over_n1, 1.0, -1.0));

    {
        // Dilogarithm route: Li2(t) + log^2(1-t)/2 = sum h_n/n t^n, so the
        // transform must equal -sum h2_n t^n.
        auto f = [](int order) {
            TSeries li2 = TSeries::from_coeffs(order, [](int n) {
                return n == 0 ? MPoly()
                              : MPoly(Rational(1) / Rational(static_cast<long>(n) * n));
            });
            TSeries l = series_log(one_minus_t(order));
            return li2 + l * l * Rational(1, 2);
        };
        NumericPair np;
        np.lhs.prefactor = [](const EvalPoint& pt) { return 1.0 / (1.0 - pt.t); };
        np.lhs.terms = [](const EvalPoint& pt, int trunc) {
            double u = -pt.t / (1.0 - pt.t);
            std::vector<double> out;
            out.push_back(0.5 * std::log1p(-u) * std::log1p(-u));
            double un = 1.0;
            for (int n = 1; n <= trunc; ++n) {
                un *= u;
                out.push_back(un / (static_cast<double>(n) * n));
            }
            return out;
        };
        np.rhs.terms = [q](const EvalPoint& pt, int trunc) {
            std::vector<double> out;
            double tn = 1.0;
            for (int n = 0; n <= trunc; ++n) {
                out.push_back(-q->harmonic2(n).to_double() * tn);
                tn *= pt.t;
            }
            return out;
        };
        add_euler_gf("EQ28-30-LANDEN", "(28)-(30)", "",
                     "Landen-type dilogarithm identity: the transform of "
                     "Li2(t) + log^2(1-t)/2 collapses to -sum h2_n t^n.  The "
                     "numeric left side evaluates the dilogarithm by its own "
                     "series at the transformed argument, so accel sees the "
                     "two genuinely different convergence rates.",
                     f, 1, -1, neg_h2, np);
    }

    add_euler_gf("EQ33", "(33)", "z",
                 "Transforming e^{zt} yields the Laguerre generating "
                 "function sum L_n(z) t^n.",
                 [Z](int order) {
                     return series_exp(shift_mul_t(TSeries::constant(order, Z), 1));
                 },
                 1, -1, lag,
                 detail::euler_route_numeric(
                     CoeffSeq{[Z](int n) {
                         return Z.pow(static_cast<unsigned long>(n)) * detail::inv_factorial(n);
                     }},
                     lag, 1.0, -1.0));

    add_euler_gf("EQ43-44", "(43)-(44)", "p",
                 "Symbolic-p generating function: (1-t)^{-(p+1)}, built as "
                 "exp(-(p+1) log(1-t)) with polynomial scalars, transforms to "
                 "sum (-1)^n C(p,n) t^n.",
                 [P](int order) {
                     return series_exp(series_log(one_minus_t(order)) * (-(P + MPoly(1))));
                 },
                 1, -1,
                 CoeffSeq{[P](int n) {
                     return binomial_symbolic(P, static_cast<unsigned long>(n)) *
                            detail::sign_r(n);
                 }},
                 detail::euler_route_numeric(
                     CoeffSeq{[P](int n) {
                         return binomial_symbolic(P + MPoly(n), static_cast<unsigned long>(n));
                     }},
                     CoeffSeq{[P](int n) {
                         return binomial_symbolic(P, static_cast<unsigned long>(n)) *
                                detail::sign_r(n);
                     }},
                     1.0, -1.0));

    add_euler_gf("EQ63-65", "(63)-(65)", "",
                 "Unsigned transform (mu = +1) of the Fibonacci generating "
                 "function t/(1-t-t^2) gives sum F_{2n} t^n.",
                 fib_gf, 1, 1, f2n,
                 detail::matched_sum_numeric(
                     CoeffSeq{[q](int n) { return MPoly(Rational(q->fibonacci(n))); }}, f2n,
                     1.0, 1.0));

    add_euler_gf("EQ70-71", "(70)-(71)", "",
                 "Unsigned transform of -t/(1+t-t^2) = sum (-1)^n F_n t^n "
                 "gives -sum F_n t^n.",
                 fib_alt_gf, 1, 1, neg_f,
                 detail::matched_sum_numeric(
                     CoeffSeq{[q](int n) {
                         return MPoly(Rational(q->fibonacci(n)) * detail::sign_r(n));
                     }},
                     neg_f, 1.0, 1.0));

    add_euler_gf("EQ75-76", "(75)-(76)", "",
                 "The Lucas generating function (2-t)/(1-t-t^2) is a fixed "
                 "point of the alternating transform.",
                 lucas_gf, 1, -1, luc,
                 detail::matched_sum_numeric(luc, luc, 1.0, -1.0));

    add_euler_gf("EQ79-81", "(79)-(81)", "",
                 "Alternating transform of (2+t)/(1+t-t^2) = sum (-1)^n L_n "
                 "t^n gives sum L_{2n} t^n.",
                 lucas_alt_gf, 1, -1, l2n,
                 detail::matched_sum_numeric(
                     CoeffSeq{[q](int n) {
                         return MPoly(Rational(q->lucas(n)) * detail::sign_r(n));
                     }},
                     l2n, 1.0, -1.0));
}

inline void Registry::register_polynomial_transforms() {
    auto q = seqs_;

    struct Spec {
        const char* id;
        const char* label;
        Poly1 f;
        int r;
        const char* notes;
    };
    const std::vector<Spec> specs = {
        {"EQ88", "(88)",
         Poly1({Rational(5), Rational(1, 2), Rational(3)}), 0,
         "Polynomial-weighted transform: sum f(n) g_n t^n with "
         "f = 5 + t/2 + 3t^2 over g = e^{2xt-t^2}, against the finite "
         "Stirling form sum f_n {n,k} t^k g^(k)."},
        {"EQ89+", "(89+)",
         Poly1({Rational(0), Rational(0), Rational(0), Rational(1)}), 1,
         "Cubed-index weights via the r = 1 form: sum n^3 g_n t^n equals "
         "the weighted derivative sum with plain Stirling numbers."},
        {"EQ90", "(90)",
         Poly1({Rational(0), Rational(0), Rational(3, 2), Rational(2)}), 2,
         "r = 2 polynomial transform with f = 2t^3 + (3/2)t^2: the left "
         "side carries (n)_2 f_2(n), the right side the {n,k}_2 triangle."},
    };
    for (const auto& s : specs) {
        IdentityRecord rec;
        rec.id = s.id;
        rec.paper_eq = s.label;
        rec.kind = IdentityKind::series;
        rec.symbols = "x";
        rec.notes = s.notes;
        Poly1 f = s.f;
        int r = s.r;
        rec.lhs = [f, r](int order) {
            return r_stirling_lhs(f, detail::hermite_gf(order), r);
        };
        rec.rhs = [f, r, q](int order) {
            return r_stirling_rhs(f, detail::hermite_gf(order), r, *q);
        };
        rec.numeric = detail::stirling_series_numeric(f, r, q);
        add(std::move(rec));
    }
}

inline void Registry::register_finite_sums() {
    auto q = seqs_;
    using detail::binom_r;
    using detail::sign_r;

    const MPoly P = MPoly::variable(Symbol::p);
    const MPoly Y = MPoly::variable(Symbol::y);
    const MPoly Z = MPoly::variable(Symbol::z);

    add_finite_binomial(
        "EQ13", "(13)", "",
        "Instance-by-instance form of EQ12: sum_k C(n,k)(-1)^k/(k+1) = 1/(n+1).",
        CoeffSeq{[](int k) { return MPoly(Rational(1, k + 1)); }},
        CoeffSeq{[](int n) { return MPoly(Rational(1, n + 1)); }});

    add_finite_binomial(
        "EQ17", "(17)", "",
        "sum_k C(n,k)(-1)^k/k (k >= 1) = -h_n.",
        CoeffSeq{[](int k) { return k == 0 ? MPoly() : MPoly(Rational(1, k)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic(n)); }});

    add_finite_binomial(
        "EQ21", "(21)", "",
        "sum_k C(n,k)(-1)^k h_k = -1/n for n >= 1 (0 at n = 0).",
        CoeffSeq{[q](int k) { return MPoly(q->harmonic(k)); }},
        CoeffSeq{[](int n) { return n == 0 ? MPoly() : MPoly(Rational(-1, n)); }});

    add_finite_binomial(
        "EQ23", "(23)", "",
        "Corrected closed form: sum_k C(n,k)(-1)^k h_k/(k+1) = -h_n/(n+1); "
        "the printed right-hand side of (22)/(23) omits the sign.",
        CoeffSeq{[q](int k) { return MPoly(q->harmonic(k) / Rational(k + 1)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic(n) / Rational(n + 1)); }});

    add_finite_binomial(
        "EQ27", "(27)", "",
        "sum_k C(n,k)(-1)^k h_k/k (k >= 1) = -h2_n.",
        CoeffSeq{[q](int k) { return k == 0 ? MPoly() : MPoly(q->harmonic(k) / Rational(k)); }},
        CoeffSeq{[q](int n) { return MPoly(-q->harmonic2(n)); }});

    add_finite_binomial(
        "EQ42", "(42)", "p",
        "Symbolic binomial identity: sum_k C(n,k)(-1)^k C(p+k,k) = (-1)^n C(p,n), "
        "verified as a polynomial identity in p.",
        CoeffSeq{[P](int k) {
            return binomial_symbolic(P + MPoly(k), static_cast<unsigned long>(k));
        }},
        CoeffSeq{[P](int n) {
            return binomial_symbolic(P, static_cast<unsigned long>(n)) * sign_r(n);
        }});

    add_finite_binomial(
        "EQ72", "(72)", "",
        "sum_k C(n,k)(-1)^k F_k = -F_n.",
        CoeffSeq{[q](int k) { return MPoly(Rational(q->fibonacci(k))); }},
        CoeffSeq{[q](int n) { return MPoly(-Rational(q->fibonacci(n))); }});

    add_finite_binomial(
        "EQ77", "(77)", "",
        "sum_k C(n,k)(-1)^k L_k = L_n: the Lucas sequence is self-dual.",
        CoeffSeq{[q](int k) { return MPoly(Rational(q->lucas(k))); }},
        CoeffSeq{[q](int n) { return MPoly(Rational(q->lucas(n))); }});

    // Hermite argument-shift expansions.
    add_finite_pair(
        "EQ36", "(36)", "y,z",
        "Argument shift: H_n(z+y) = sum_k C(n,k) (2y)^{n-k} H_k(z), checked "
        "per n as a polynomial identity in y and z.",
        [Y, Z](int n) {
            auto h = hermite_all_at(n, Z + Y);
            return h[static_cast<std::size_t>(n)];
        },
        [Y, Z](int n) {
            auto h = hermite_all_at(n, Z);
            MPoly acc;
            for (int k = 0; k <= n; ++k)
                acc += h[static_cast<std::size_t>(k)] *
                       (Y * 2).pow(static_cast<unsigned long>(n - k)) * binom_r(n, k);
            return acc;
        });

    add_finite_pair(
        "EQ37", "(37)", "y,z",
        "Alternating argument shift: (-1)^n H_n(z-y) = sum_k C(n,k)(-1)^k "
        "H_k(z) (2y)^{n-k}; this is the closed form behind every "
        "Hermite-weighted right-hand side in the catalog.",
        [Y, Z](int n) {
            auto h = hermite_all_at(n, Z - Y);
            return h[static_cast<std::size_t>(n)] * sign_r(n);
        },
        [Y, Z](int n) {
            auto h = hermite_all_at(n, Z);
            MPoly acc;
            for (int k = 0; k <= n; ++k)
                acc += h[static_cast<std::size_t>(k)] *
                       (Y * 2).pow(static_cast<unsigned long>(n - k)) *
                       (binom_r(n, k) * sign_r(k));
            return acc;
        });

    // Stirling-triangle binomial identities, packed across the column index
    // m (or exponent alpha) as powers of the inert symbol p: coefficientwise
    // comparison of the packed polynomial checks every case at once.
    add_finite_pair(
        "EQ47", "(47)", "p",
        "sum_k C(n,k) {k,m} = {n+1,m+1}, packed over m = 0..6 as the "
        "coefficient of p^m.",
        [q](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int m = 0; m <= 6; ++m) {
                Rational s;
                for (int k = 0; k <= n; ++k)
                    s += binom_r(n, k) * Rational(q->stirling2(k, m));
                acc += P.pow(static_cast<unsigned long>(m)) * s;
            }
            return acc;
        },
        [q](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int m = 0; m <= 6; ++m)
                acc += P.pow(static_cast<unsigned long>(m)) *
                       Rational(q->stirling2(n + 1, m + 1));
            return acc;
        });

    add_finite_pair(
        "EQ49", "(49)", "p",
        "sum_k C(n,k)(-1)^k {k+1,m+1} = (-1)^n {n,m}, packed over m = 0..6.",
        [q](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int m = 0; m <= 6; ++m) {
                Rational s;
                for (int k = 0; k <= n; ++k)
                    s += binom_r(n, k) * sign_r(k) * Rational(q->stirling2(k + 1, m + 1));
                acc += P.pow(static_cast<unsigned long>(m)) * s;
            }
            return acc;
        },
        [q](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int m = 0; m <= 6; ++m)
                acc += P.pow(static_cast<unsigned long>(m)) *
                       (Rational(q->stirling2(n, m)) * sign_r(n));
            return acc;
        });

    add_finite_pair(
        "EQ52", "(52)", "p",
        "sum_k C(n,k)(-1)^k k^alpha = (-1)^n n! {alpha,n}, packed over "
        "alpha = 1..6 as the coefficient of p^alpha.",
        [](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int alpha = 1; alpha <= 6; ++alpha) {
                Rational s;
                for (int k = 0; k <= n; ++k)
                    s += binom_r(n, k) * sign_r(k) *
                         Rational(int_pow(static_cast<unsigned long>(k),
                                          static_cast<unsigned long>(alpha)));
                acc += P.pow(static_cast<unsigned long>(alpha)) * s;
            }
            return acc;
        },
        [q](int n) {
            MPoly acc;
            const MPoly P = MPoly::variable(Symbol::p);
            for (int alpha = 1; alpha <= 6; ++alpha)
                acc += P.pow(static_cast<unsigned long>(alpha)) *
                       (Rational(q->stirling2(alpha, n) *
                                 factorial(static_cast<unsigned long>(n))) *
                        sign_r(n));
            return acc;
        });

    add_finite_pair(
        "EQ55-57", "(55)-(57)", "p",
        "Exponential-number pair: phi_{n+1} = sum_k C(n,k) phi_k and its "
        "inversion phi_n = sum_k C(n,k)(-1)^{n-k} phi_{k+1}, packed as "
        "1- and p-coefficients.",
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            Rational s1, s2;
            for (int k = 0; k <= n; ++k) {
                s1 += binom_r(n, k) * Rational(q->bell(k));
                s2 += binom_r(n, k) * sign_r(n - k) * Rational(q->bell(k + 1));
            }
            return MPoly(s1) + P * s2;
        },
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            return MPoly(Rational(q->bell(n + 1))) + P * Rational(q->bell(n));
        });

    add_finite_pair(
        "EQ59-61", "(59)-(61)", "p",
        "Geometric-number pair with the corrected seed: for n >= 1, "
        "sum_k C(n,k) w_k = 2 w_n (the printed form includes k = n and a "
        "doubled k = 0 term, which fails at n = 0); and with a_0 = 1, "
        "a_k = 2 w_k the signed sum gives (-1)^n w_n for all n.",
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            Rational s1, s2;
            if (n == 0) {
                s1 = Rational(q->fubini(0));
            } else {
                for (int k = 0; k <= n; ++k) s1 += binom_r(n, k) * Rational(q->fubini(k));
            }
            for (int k = 0; k <= n; ++k) {
                Rational ak = k == 0 ? Rational(1) : Rational(2 * q->fubini(k));
                s2 += binom_r(n, k) * sign_r(k) * ak;
            }
            return MPoly(s1) + P * s2;
        },
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            Rational r1 = n == 0 ? Rational(q->fubini(0)) : Rational(2 * q->fubini(n));
            return MPoly(r1) + P * (Rational(q->fubini(n)) * sign_r(n));
        });

    add_finite_pair(
        "EQ66-68", "(66)-(68)", "p",
        "Fibonacci pair: F_{2n} = sum_k C(n,k) F_k and the inversion "
        "F_n = sum_k C(n,k)(-1)^{n-k} F_{2k}, packed as 1- and p-coefficients.",
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            Rational s1, s2;
            for (int k = 0; k <= n; ++k) {
                s1 += binom_r(n, k) * Rational(q->fibonacci(k));
                s2 += binom_r(n, k) * sign_r(n - k) * Rational(q->fibonacci(2 * k));
            }
            return MPoly(s1) + P * s2;
        },
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            return MPoly(Rational(q->fibonacci(2 * n))) + P * Rational(q->fibonacci(n));
        });

    add_finite_pair(
        "EQ82-84", "(82)-(84)", "p",
        "Lucas pair: L_{2n} = sum_k C(n,k) L_k and the inversion "
        "L_n = sum_k C(n,k)(-1)^{n-k} L_{2k}, packed as 1- and p-coefficients.",
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            Rational s1, s2;
            for (int k = 0; k <= n; ++k) {
                s1 += binom_r(n, k) * Rational(q->lucas(k));
                s2 += binom_r(n, k) * sign_r(n - k) * Rational(q->lucas(2 * k));
            }
            return MPoly(s1) + P * s2;
        },
        [q](int n) {
            const MPoly P = MPoly::variable(Symbol::p);
            return MPoly(Rational(q->lucas(2 * n))) + P * Rational(q->lucas(n));
        });

    add_finite_pair(
        "EQ93", "(93)", "p",
        "p^n = sum_k {n,k} (p)_k as a polynomial identity in p.  Stands in "
        "for the exponential operator statement (92), which is recovered from "
        "this coefficient-level form.",
        [P](int n) { return P.pow(static_cast<unsigned long>(n)); },
        [q, P](int n) {
            MPoly acc;
            for (int k = 0; k <= n; ++k)
                acc += falling_factorial(P, static_cast<unsigned long>(k)) *
                       Rational(q->stirling2(n, k));
            return acc;
        });

    add_finite_pair(
        "EQ99", "(99)", "p",
        "r = 2 refinement of EQ93: (p)_2 p^{n-2} = sum_k {n,k}_2 (p)_k for "
        "n >= 2 (both sides zero below the base row).",
        [P](int n) {
            if (n < 2) return MPoly();
            return falling_factorial(P, 2) * P.pow(static_cast<unsigned long>(n - 2));
        },
        [q, P](int n) {
            MPoly acc;
            for (int k = 0; k <= n; ++k)
                acc += falling_factorial(P, static_cast<unsigned long>(k)) *
                       Rational(q->r_stirling2(n, k, 2));
            return acc;
        });

    add_finite_pair(
        "EQ55-STIRLING", "(55)", "",
        "Seed anchor: phi_n = sum_k {n,k} ties the exponential numbers to "
        "the Stirling triangle through an independent route; added so that a "
        "perturbed seed cannot slip through the self-similar recurrences.",
        [q](int n) { return MPoly(Rational(q->bell(n))); },
        [q](int n) {
            Rational s;
            for (int k = 0; k <= n; ++k) s += Rational(q->stirling2(n, k));
            return MPoly(s);
        });

    add_finite_pair(
        "EQ59-STIRLING", "(59)", "",
        "Seed anchor: w_n = sum_k {n,k} k! ties the geometric numbers to the "
        "Stirling triangle; same fault-sensitivity role as EQ55-STIRLING.",
        [q](int n) { return MPoly(Rational(q->fubini(n))); },
        [q](int n) {
            Rational s;
            for (int k = 0; k <= n; ++k)
                s += Rational(q->stirling2(n, k) * factorial(static_cast<unsigned long>(k)));
            return MPoly(s);
        });
}

inline void Registry::register_operators() {
    auto q = seqs_;
    const MPoly P = MPoly::variable(Symbol::p);

    // Repeated theta = t d/dt applied to f, packed across the operator power
    // n as the coefficient of p^n.
    auto packed_theta = [](const std::function<TSeries(int)>& base, int nmax) {
        return [base, nmax](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries cur = base(order);
            TSeries acc = cur;  // n = 0 term, p^0
            for (int n = 1; n <= nmax; ++n) {
                cur = euler_operator(cur, 1);
                acc = acc + cur * Pv.pow(static_cast<unsigned long>(n));
            }
            return acc;
        };
    };

    add_operator(
        "EQ-DD", "(91)", "x,p",
        "theta^n f = sum_k {n,k} t^k f^(k) for theta = t d/dt, exercised on "
        "f = e^{2xt-t^2} and packed over n = 0..5 as powers of p.  The t^k "
        "shift re-absorbs each derivative's truncation loss, so both sides "
        "stay reliable to the full order.",
        packed_theta([](int order) { return detail::hermite_gf(order); }, 5),
        [q](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries f = detail::hermite_gf(order);
            std::vector<TSeries> shifted;  // t^k f^(k)
            TSeries d = f;
            shifted.push_back(f);
            for (int k = 1; k <= 5; ++k) {
                d = series_derivative(d);
                shifted.push_back(shift_mul_t(d, k));
            }
            TSeries acc(order);
            for (int n = 0; n <= 5; ++n) {
                TSeries term(order);
                for (int k = 0; k <= n; ++k)
                    term = term + shifted[static_cast<std::size_t>(k)] *
                                      Rational(q->stirling2(n, k));
                acc = acc + term * Pv.pow(static_cast<unsigned long>(n));
            }
            return acc;
        });

    add_operator(
        "EQ95", "(95)", "p",
        "theta^n e^t = e^t phi_n(t) with the exponential polynomials "
        "phi_n(t) = sum_k {n,k} t^k, packed over n = 0..8.  Stands in for "
        "the m-fold exponential statement (94), whose coefficient comparison "
        "is exactly this identity.",
        packed_theta([](int order) { return series_exp(series_t(order)); }, 8),
        [q](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries et = series_exp(series_t(order));
            TSeries acc(order);
            for (int n = 0; n <= 8; ++n)
                acc = acc + et * poly1_as_series(exp_poly(n, *q), order) *
                                Pv.pow(static_cast<unsigned long>(n));
            return acc;
        });

    add_operator(
        "EQ96", "(96)", "p",
        "theta^n (1/(1-t)) = (1/(1-t)) w_n(t/(1-t)) with the geometric "
        "polynomials w_n(t) = sum_k {n,k} k! t^k, packed over n = 0..8.",
        packed_theta([](int order) { return series_inverse(one_minus_t(order)); }, 8),
        [q](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries geom = series_inverse(one_minus_t(order));
            TSeries tg = shift_mul_t(geom, 1);  // t/(1-t)
            TSeries acc(order);
            for (int n = 0; n <= 8; ++n)
                acc = acc + geom * poly1_at_series(geom_poly(n, *q), tg) *
                                Pv.pow(static_cast<unsigned long>(n));
            return acc;
        });

    add_operator(
        "EQ102", "(102)", "p",
        "r-family: theta^{n-r} (t^r e^t) = e^t sum_k {n,k}_r t^k, packed "
        "over the cases r = 0..3, n = r..r+5 as consecutive powers of p.",
        [](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries acc(order);
            unsigned long idx = 0;
            TSeries et = series_exp(series_t(order));
            for (int r = 0; r <= 3; ++r) {
                TSeries cur = shift_mul_t(et, r);
                for (int n = r; n <= r + 5; ++n) {
                    if (n > r) cur = euler_operator(cur, 1);
                    acc = acc + cur * Pv.pow(idx++);
                }
            }
            return acc;
        },
        [q](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries acc(order);
            unsigned long idx = 0;
            TSeries et = series_exp(series_t(order));
            for (int r = 0; r <= 3; ++r)
                for (int n = r; n <= r + 5; ++n)
                    acc = acc + et * poly1_as_series(r_exp_poly(n, r, *q), order) *
                                    Pv.pow(idx++);
            return acc;
        });

    add_operator(
        "EQ105", "(105)", "p",
        "r-family: r! theta^{n-r} (t^r / (1-t)^{r+1}) = (1/(1-t)) "
        "rw_n(t/(1-t)) with the r-geometric polynomials, packed over "
        "r = 0..3, n = r..r+5.",
        [](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries acc(order);
            unsigned long idx = 0;
            TSeries geom = series_inverse(one_minus_t(order));
            for (int r = 0; r <= 3; ++r) {
                TSeries cur = shift_mul_t(series_pow(geom, r + 1), r) *
                              Rational(factorial(static_cast<unsigned long>(r)));
                for (int n = r; n <= r + 5; ++n) {
                    if (n > r) cur = euler_operator(cur, 1);
                    acc = acc + cur * Pv.pow(idx++);
                }
            }
            return acc;
        },
        [q](int order) {
            const MPoly Pv = MPoly::variable(Symbol::p);
            TSeries acc(order);
            unsigned long idx = 0;
            TSeries geom = series_inverse(one_minus_t(order));
            TSeries tg = shift_mul_t(geom, 1);
            for (int r = 0; r <= 3; ++r)
                for (int n = r; n <= r + 5; ++n)
                    acc = acc + geom * poly1_at_series(r_geom_poly(n, r, *q), tg) *
                                    Pv.pow(idx++);
            return acc;
        });
}

}  // namespace hps
