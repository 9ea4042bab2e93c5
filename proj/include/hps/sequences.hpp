#pragma once

// Memoized integer/rational sequences and Stirling tables. A Sequences
// instance owns its memo state (growable, guarded by a mutex so one instance
// can serve parallel verification workers) and an optional deliberate fault:
// a single perturbed seed or recurrence weight, used by the fault-sensitivity
// self-tests to prove the identity suite actually depends on every input.

#include "hps/mpoly.hpp"
#include "hps/rational.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace hps {

enum class Perturbation {
    none,
    harmonic_seed,    // h_1 <- h_1 + 1
    harmonic2_seed,   // h2_1 <- h2_1 + 1
    fibonacci_seed,   // F_1 <- F_1 + 1
    lucas_seed,       // L_0 <- L_0 + 1
    bell_seed,        // phi_0 <- phi_0 + 1
    fubini_seed,      // w_0 <- w_0 + 1
    stirling_weight,  // {n,k} = (k+1){n-1,k} + {n-1,k-1}
    r_stirling_weight,
};

inline const std::vector<std::pair<std::string, Perturbation>>& perturbation_names() {
    static const std::vector<std::pair<std::string, Perturbation>> kNames = {
        {"none", Perturbation::none},
        {"harmonic-seed", Perturbation::harmonic_seed},
        {"harmonic2-seed", Perturbation::harmonic2_seed},
        {"fibonacci-seed", Perturbation::fibonacci_seed},
        {"lucas-seed", Perturbation::lucas_seed},
        {"bell-seed", Perturbation::bell_seed},
        {"fubini-seed", Perturbation::fubini_seed},
        {"stirling-weight", Perturbation::stirling_weight},
        {"r-stirling-weight", Perturbation::r_stirling_weight},
    };
    return kNames;
}

inline Perturbation perturbation_from_name(const std::string& name) {
    for (const auto& [n, p] : perturbation_names())
        if (n == name) return p;
    throw std::invalid_argument("unknown perturbation '" + name + "'");
}

class Sequences {
  public:
    explicit Sequences(Perturbation fault = Perturbation::none) : fault_(fault) {}

    Perturbation fault() const { return fault_; }

    // Harmonic numbers h_n = 1 + 1/2 + ... + 1/n, h_0 = 0.
    Rational harmonic(int n) const {
        return memo_at(harmonic_, n, [&](int k, const std::vector<Rational>& v) -> Rational {
            if (k == 0) return Rational(0);
            Rational h = v[static_cast<std::size_t>(k) - 1] + Rational(1, k);
            if (k == 1 && fault_ == Perturbation::harmonic_seed) h += 1;
            return h;
        });
    }

    // Square harmonic numbers h2_n = sum 1/k^2.
    Rational harmonic2(int n) const {
        return memo_at(harmonic2_, n, [&](int k, const std::vector<Rational>& v) -> Rational {
            if (k == 0) return Rational(0);
            Rational h = v[static_cast<std::size_t>(k) - 1] + Rational(1, static_cast<long>(k) * k);
            if (k == 1 && fault_ == Perturbation::harmonic2_seed) h += 1;
            return h;
        });
    }

    Int fibonacci(int n) const {
        return memo_at(fibonacci_, n, [&](int k, const std::vector<Int>& v) -> Int {
            if (k == 0) return 0;
            if (k == 1) return fault_ == Perturbation::fibonacci_seed ? 2 : 1;
            return v[static_cast<std::size_t>(k) - 1] + v[static_cast<std::size_t>(k) - 2];
        });
    }

    Int lucas(int n) const {
        return memo_at(lucas_, n, [&](int k, const std::vector<Int>& v) -> Int {
            if (k == 0) return fault_ == Perturbation::lucas_seed ? 3 : 2;
            if (k == 1) return 1;
            return v[static_cast<std::size_t>(k) - 1] + v[static_cast<std::size_t>(k) - 2];
        });
    }

    // Bell numbers via phi_{n+1} = sum_k C(n,k) phi_k.
    Int bell(int n) const {
        return memo_at(bell_, n, [&](int k, const std::vector<Int>& v) -> Int {
            if (k == 0) return fault_ == Perturbation::bell_seed ? 2 : 1;
            Int acc = 0;
            for (int j = 0; j < k; ++j)
                acc += binomial(static_cast<unsigned long>(k) - 1, static_cast<unsigned long>(j)) *
                       v[static_cast<std::size_t>(j)];
            return acc;
        });
    }

    // Fubini (ordered Bell) numbers via w_n = sum_{k<n} C(n,k) w_k for n >= 1.
    Int fubini(int n) const {
        return memo_at(fubini_, n, [&](int k, const std::vector<Int>& v) -> Int {
            if (k == 0) return fault_ == Perturbation::fubini_seed ? 2 : 1;
            Int acc = 0;
            for (int j = 0; j < k; ++j)
                acc += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) *
                       v[static_cast<std::size_t>(j)];
            return acc;
        });
    }

    // Stirling numbers of the second kind {n,k}.
    Int stirling2(int n, int k) const {
        if (n < 0 || k < 0 || k > n) return 0;
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(stirling_.size()) <= n) {
            int r = static_cast<int>(stirling_.size());
            std::vector<Int> row(static_cast<std::size_t>(r) + 1, 0);
            if (r == 0) {
                row[0] = 1;
            } else {
                const auto& prev = stirling_[static_cast<std::size_t>(r) - 1];
                for (int j = 1; j <= r; ++j) {
                    Int up = j < r ? prev[static_cast<std::size_t>(j)] : Int(0);
                    row[static_cast<std::size_t>(j)] =
                        stirling_recurrence_weight(j) * up + prev[static_cast<std::size_t>(j) - 1];
                }
            }
            stirling_.push_back(std::move(row));
        }
        return stirling_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    // r-Stirling numbers {n,k}_r: partitions of {1..n} into k nonempty blocks
    // with 1..r in distinct blocks. Base row {r,k}_r = [k == r]; same
    // recurrence as the plain table above it.
    Int r_stirling2(int n, int k, int r) const {
        if (r < 0) throw contract_error("r_stirling2: negative r");
        if (n < r || k < 0 || k > n) return 0;
        std::lock_guard<std::mutex> lock(mutex_);
        auto& rows = r_stirling_[r];  // rows[i] holds the row for n = r + i
        while (static_cast<int>(rows.size()) <= n - r) {
            int m = r + static_cast<int>(rows.size());  // n value of the new row
            std::vector<Int> row(static_cast<std::size_t>(m) + 1, 0);
            if (m == r) {
                row[static_cast<std::size_t>(r)] = 1;
            } else {
                const auto& prev = rows.back();
                for (int j = 1; j <= m; ++j) {
                    Int up = j < m ? prev[static_cast<std::size_t>(j)] : Int(0);
                    Int left = j - 1 < m ? prev[static_cast<std::size_t>(j) - 1] : Int(0);
                    row[static_cast<std::size_t>(j)] = r_stirling_recurrence_weight(j) * up + left;
                }
            }
            rows.push_back(std::move(row));
        }
        return rows[static_cast<std::size_t>(n - r)][static_cast<std::size_t>(k)];
    }

    // Named access for the CLI's sequence dump.
    static const std::vector<std::string>& sequence_names() {
        static const std::vector<std::string> kNames = {"harmonic", "harmonic2", "fibonacci",
                                                        "lucas",    "bell",      "fubini"};
        return kNames;
    }

    Rational value_by_name(const std::string& name, int n) const {
        if (name == "harmonic") return harmonic(n);
        if (name == "harmonic2") return harmonic2(n);
        if (name == "fibonacci") return Rational(fibonacci(n));
        if (name == "lucas") return Rational(lucas(n));
        if (name == "bell") return Rational(bell(n));
        if (name == "fubini") return Rational(fubini(n));
        throw std::invalid_argument("unknown sequence '" + name + "'");
    }

  private:
    Int stirling_recurrence_weight(int k) const {
        return fault_ == Perturbation::stirling_weight ? Int(k + 1) : Int(k);
    }
    Int r_stirling_recurrence_weight(int k) const {
        return fault_ == Perturbation::r_stirling_weight ? Int(k + 1) : Int(k);
    }

    // Grow a memo vector to index n under the lock using the given step rule
    // (which may read all previously computed values).
    template <class T, class Fn>
    T memo_at(std::vector<T>& memo, int n, const Fn& step) const {
        if (n < 0) throw contract_error("sequence index must be nonnegative");
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(memo.size()) <= n)
            memo.push_back(step(static_cast<int>(memo.size()), memo));
        return memo[static_cast<std::size_t>(n)];
    }

    Perturbation fault_;
    mutable std::mutex mutex_;
    mutable std::vector<Rational> harmonic_, harmonic2_;
    mutable std::vector<Int> fibonacci_, lucas_, bell_, fubini_;
    mutable std::vector<std::vector<Int>> stirling_;
    mutable std::map<int, std::vector<std::vector<Int>>> r_stirling_;
};

// Falling factorial of a polynomial: P(P-1)...(P-k+1).
inline MPoly falling_factorial(const MPoly& P, unsigned long k) {
    MPoly r(1);
    for (unsigned long i = 0; i < k; ++i) r *= P - MPoly(Rational(static_cast<long>(i)));
    return r;
}

// Symbolic binomial coefficient C(P, k) = (P)_k / k!.
inline MPoly binomial_symbolic(const MPoly& P, unsigned long k) {
    return falling_factorial(P, k) / Rational(factorial(k));
}

}  // namespace hps
