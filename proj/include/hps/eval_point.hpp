#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "hps/mpoly.hpp"

namespace hps {

// A numeric evaluation point for the symbols (x, y, z) and the series
// variable t.  Identities are compared numerically inside |t| <= kEvalRadius,
// where every closed form used by the catalog converges comfortably.
struct EvalPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
    int truncation = 30;

    std::array<double, kSymbolCount> symbol_values() const {
        return {x, y, z, 0.0};
    }
};

inline constexpr double kEvalRadius = 0.25;

// H_0..H_nmax at a real argument, by the three-term recurrence.
inline std::vector<double> hermite_doubles(int nmax, double a) {
    std::vector<double> h(static_cast<std::size_t>(nmax) + 1);
    h[0] = 1.0;
    if (nmax >= 1) h[1] = 2.0 * a;
    for (int k = 1; k < nmax; ++k)
        h[static_cast<std::size_t>(k) + 1] =
            2.0 * a * h[static_cast<std::size_t>(k)] - 2.0 * k * h[static_cast<std::size_t>(k) - 1];
    return h;
}

// One side of an identity, prepared for floating-point evaluation.  The value
// of the side is prefactor(pt) * sum(terms(pt, truncation)); terms are summed
// with compensation, so each side should emit the naturally sized pieces
// (e.g. one term per series order) rather than pre-summing.
struct NumericSide {
    std::function<std::vector<double>(const EvalPoint&, int)> terms;
    std::function<double(const EvalPoint&)> prefactor =
        [](const EvalPoint&) { return 1.0; };

    static NumericSide closed_form(std::function<double(const EvalPoint&)> value) {
        NumericSide side;
        side.terms = [](const EvalPoint&, int) { return std::vector<double>{1.0}; };
        side.prefactor = std::move(value);
        return side;
    }
};

struct NumericPair {
    NumericSide lhs;
    NumericSide rhs;
};

}  // namespace hps
