#include "hps/special_polynomials.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using hps::MPoly;
using hps::Poly1;
using hps::Rational;
using hps::Sequences;
using hps::Symbol;
using hps::TSeries;

namespace {
const MPoly X = MPoly::variable(Symbol::x);
const MPoly Y = MPoly::variable(Symbol::y);
const MPoly Z = MPoly::variable(Symbol::z);
}  // namespace

TEST_CASE("Hermite polynomials: frozen low-degree table") {
    CHECK(hps::hermite(0) == MPoly(1));
    CHECK(hps::hermite(1) == X * 2);
    CHECK(hps::hermite(2) == X.pow(2) * 4 - MPoly(2));
    CHECK(hps::hermite(3) == X.pow(3) * 8 - X * 12);
    CHECK(hps::hermite(4) == X.pow(4) * 16 - X.pow(2) * 48 + MPoly(12));
    CHECK(hps::hermite(4).to_string() == "16*x^4 - 48*x^2 + 12");
}

TEST_CASE("Hermite polynomials match the Rodrigues-route oracle") {
    auto oracle = oracles::hermite_rodrigues(12);
    auto ours = hps::hermite_all(12);
    for (int n = 0; n <= 12; ++n) CHECK(ours[static_cast<std::size_t>(n)] == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("Hermite polynomials match the generating-function route") {
    // n! [t^n] exp(2xt - t^2) = H_n(x).
    int n = 12;
    TSeries expo = shift_mul_t(TSeries::constant(n, X * 2), 1) -
                   hps::series_pow(hps::series_t(n), 2);
    TSeries gf = series_exp(expo);
    for (int k = 0; k <= n; ++k)
        CHECK(gf.coeff(k) * Rational(hps::factorial(static_cast<unsigned long>(k))) == hps::hermite(k));
}

TEST_CASE("Hermite parity") {
    for (int n = 0; n <= 10; ++n) {
        MPoly reflected = hps::hermite(n).substitute(Symbol::x, -X);
        CHECK(reflected == (n % 2 == 0 ? hps::hermite(n) : -hps::hermite(n)));
    }
}

TEST_CASE("Hermite at polynomial arguments equals substitution") {
    auto at = hps::hermite_all_at(8, Z - Y);
    for (int n = 0; n <= 8; ++n)
        CHECK(at[static_cast<std::size_t>(n)] == hps::hermite(n).substitute(Symbol::x, Z - Y));
}

TEST_CASE("Hermite at series arguments") {
    // H_n(x - t) as a series must match substituting the polynomial x - t
    // coefficient-by-coefficient: H_n(x-t) = sum_j [t^j] binomial expansion.
    int order = 8;
    TSeries arg = TSeries::constant(order, X) - hps::series_t(order);
    auto hs = hps::hermite_all_at_series(10, arg);
    for (int n = 0; n <= 10; ++n) {
        // Evaluate via substitution x -> x - y and then read y-powers as t-powers.
        MPoly sub = hps::hermite(n).substitute(Symbol::x, X - Y);
        for (int j = 0; j <= order; ++j) {
            MPoly expect;
            for (const auto& [m, c] : sub.terms()) {
                if (static_cast<int>(m[Symbol::y]) != j) continue;
                hps::Monomial rest = m;
                rest.e[1] = 0;
                expect += MPoly::term(c, rest);
            }
            CHECK(hs[static_cast<std::size_t>(n)].coeff(j) == expect);
        }
    }
    CHECK(hs[10].reliable_order() == order);
}

TEST_CASE("Laguerre polynomials") {
    CHECK(hps::laguerre(0) == MPoly(1));
    CHECK(hps::laguerre(1) == MPoly(1) - Z);
    CHECK(hps::laguerre(2) == MPoly(1) - Z * 2 + Z.pow(2) * Rational(1, 2));

    // Independent route: the classical recurrence
    // (n+1) L_{n+1} = (2n+1-z) L_n - n L_{n-1}.
    for (int n = 1; n <= 10; ++n) {
        MPoly lhs = hps::laguerre(n + 1) * Rational(n + 1);
        MPoly rhs = (MPoly(2 * n + 1) - Z) * hps::laguerre(n) - hps::laguerre(n - 1) * Rational(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exponential and geometric polynomials") {
    Sequences s;
    CHECK(hps::exp_poly(0, s) == Poly1({Rational(1)}));
    CHECK(hps::exp_poly(3, s).to_string() == "t^3 + 3*t^2 + t");
    CHECK(hps::geom_poly(2, s).to_string() == "2*t^2 + t");
    CHECK(hps::geom_poly(0, s) == Poly1({Rational(1)}));

    for (int n = 0; n <= 12; ++n) {
        CHECK(hps::exp_poly(n, s).eval(Rational(1)) == Rational(s.bell(n)));
        CHECK(hps::geom_poly(n, s).eval(Rational(1)) == Rational(s.fubini(n)));
    }
}

TEST_CASE("r-restricted families: closed form vs operator extraction") {
    Sequences s;
    for (int r = 0; r <= 3; ++r)
        for (int n = r; n <= r + 5; ++n) {
            CHECK(hps::r_exp_poly(n, r, s) == hps::r_exp_poly_extracted(n, r));
            CHECK(hps::r_geom_poly(n, r, s) == hps::r_geom_poly_extracted(n, r));
        }

    // r <= 1 collapses to the plain families.
    for (int n = 1; n <= 8; ++n) {
        CHECK(hps::r_exp_poly(n, 1, s) == hps::exp_poly(n, s));
        CHECK(hps::r_geom_poly(n, 1, s) == hps::geom_poly(n, s));
        CHECK(hps::r_exp_poly(n, 0, s) == hps::exp_poly(n, s));
    }

    CHECK(hps::r_exp_poly(3, 2, s).to_string() == "t^3 + 2*t^2");
    CHECK(hps::r_geom_poly(3, 2, s).to_string() == "6*t^3 + 4*t^2");
}
