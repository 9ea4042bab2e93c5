#include "hps/mpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using hps::Monomial;
using hps::MPoly;
using hps::Poly1;
using hps::Rational;
using hps::Symbol;

namespace {

MPoly var(Symbol s, std::uint32_t e = 1) { return MPoly::variable(s, e); }
const MPoly X = var(Symbol::x);
const MPoly Y = var(Symbol::y);
const MPoly Z = var(Symbol::z);
const MPoly P = var(Symbol::p);

std::mt19937_64 rng(987654321);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

MPoly random_poly(int max_terms = 6, std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
    MPoly r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (int s = 0; s < hps::kSymbolCount; ++s) m.e[static_cast<std::size_t>(s)] = ex(rng);
        r += MPoly::term(random_rational(), m);
    }
    return r;
}

}  // namespace

TEST_CASE("term order is pure lex with x > y > z > p") {
    MPoly q = Y * Y * Y + X * Y + Z + MPoly(5);
    // x*y has x-exponent 1 > 0, so it leads despite lower total degree.
    CHECK(q.to_string() == "x*y + y^3 + z + 5");
    CHECK((P + Z + Y + X).to_string() == "x + y + z + p");
}

TEST_CASE("canonical rendering") {
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly(3).to_string() == "3");
    CHECK(MPoly(Rational(-3, 2)).to_string() == "-3/2");
    CHECK((X * X * X * 8 - X * 12).to_string() == "8*x^3 - 12*x");
    CHECK((var(Symbol::x, 4) * 16 - var(Symbol::x, 2) * 48 + MPoly(12)).to_string() ==
          "16*x^4 - 48*x^2 + 12");
    CHECK((X * Y - MPoly(3)).to_string() == "x*y - 3");
    CHECK((-X + MPoly(1)).to_string() == "-x + 1");
    CHECK((X * Rational(1, 2) + Y * Rational(-2, 3)).to_string() == "1/2*x - 2/3*y");
    CHECK((X * Y * Z * P).to_string() == "x*y*z*p");
}

TEST_CASE("zero coefficients vanish structurally") {
    MPoly q = X + Y - X;
    CHECK(q == Y);
    CHECK(q.terms().size() == 1);
    CHECK((q - Y).is_zero());
    CHECK((X * 0).is_zero());
}

TEST_CASE("constant helpers") {
    CHECK(MPoly(7).is_constant());
    CHECK(MPoly().is_constant());
    CHECK_FALSE((X + MPoly(1)).is_constant());
    CHECK((X + MPoly(5)).constant_term() == Rational(5));
    CHECK(X.constant_term() == Rational(0));
    CHECK(MPoly(Rational(2, 3)).as_constant() == Rational(2, 3));
    CHECK_THROWS_AS(X.as_constant(), hps::contract_error);
}

TEST_CASE("degrees and symbol usage") {
    MPoly q = X * X * Y + Z;
    CHECK(q.degree() == 3);
    CHECK(q.degree_in(Symbol::x) == 2);
    CHECK(q.degree_in(Symbol::p) == 0);
    CHECK(q.uses(Symbol::z));
    CHECK_FALSE(q.uses(Symbol::p));
}

TEST_CASE("ring identities on random polynomials") {
    for (int i = 0; i < 50; ++i) {
        MPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        CHECK(a * (b * c) == (a * b) * c);
    }
}

TEST_CASE("pow") {
    CHECK((X + MPoly(1)).pow(2) == X * X + X * 2 + MPoly(1));
    CHECK((X + Y).pow(0) == MPoly(1));
    MPoly a = random_poly(4, 2);
    CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("substitute") {
    MPoly h2 = var(Symbol::x, 2) * 4 - MPoly(2);  // 4x^2 - 2
    MPoly shifted = h2.substitute(Symbol::x, Z - Y);
    CHECK(shifted == (Z - Y) * (Z - Y) * 4 - MPoly(2));
    // Substitution into an unused symbol is the identity.
    CHECK(h2.substitute(Symbol::y, Z) == h2);
    // Substitute a constant.
    CHECK(h2.substitute(Symbol::x, MPoly(3)) == MPoly(34));
}

TEST_CASE("evaluation") {
    MPoly q = X * X * Y * 3 - Z * Rational(1, 2) + MPoly(4);
    CHECK(q.eval_rational({Rational(2), Rational(3), Rational(8), Rational(0)}) ==
          Rational(36) - Rational(4) + Rational(4));
    CHECK(q.eval_double({1.0, 2.0, 4.0, 0.0}) == Catch::Approx(6.0 - 2.0 + 4.0));

    // Double evaluation agrees with exact evaluation at rational points.
    for (int i = 0; i < 20; ++i) {
        MPoly a = random_poly();
        std::array<Rational, 4> pt = {random_rational(), random_rational(), random_rational(),
                                      random_rational()};
        std::array<double, 4> ptd = {pt[0].to_double(), pt[1].to_double(), pt[2].to_double(),
                                     pt[3].to_double()};
        CHECK(a.eval_double(ptd) == Catch::Approx(a.eval_rational(pt).to_double()).margin(1e-9));
    }
}

TEST_CASE("text round-trip") {
    CHECK(MPoly::from_string("8*x^3 - 12*x") == X.pow(3) * 8 - X * 12);
    CHECK(MPoly::from_string("0") == MPoly());
    CHECK(MPoly::from_string("-x + 1") == MPoly(1) - X);
    CHECK(MPoly::from_string("1/2*x^2*y - 3") == X * X * Y * Rational(1, 2) - MPoly(3));
    CHECK(MPoly::from_string("x*x") == X * X);      // unnormalized input accepted
    CHECK(MPoly::from_string("y + x") == X + Y);    // any term order accepted
    CHECK(MPoly::from_string("2 - 2") == MPoly());  // cancellation

    CHECK_THROWS_AS(MPoly::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::from_string("q + 1"), std::invalid_argument);  // unknown symbol
    CHECK_THROWS_AS(MPoly::from_string("3 +"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::from_string("3 ** x"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::from_string("x^"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::from_string("1.5"), std::invalid_argument);

    for (int i = 0; i < 300; ++i) {
        MPoly a = random_poly();
        CHECK(MPoly::from_string(a.to_string()) == a);
    }
}

TEST_CASE("Poly1 basics") {
    Poly1 zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.to_string() == "0");

    Poly1 f({Rational(0), Rational(1), Rational(3), Rational(1)});  // t + 3t^2 + t^3
    CHECK(f.degree() == 3);
    CHECK(f.to_string() == "t^3 + 3*t^2 + t");
    CHECK(f.to_string("u") == "u^3 + 3*u^2 + u");
    CHECK(f.eval(Rational(1)) == Rational(5));
    CHECK(f.eval(Rational(-2)) == Rational(-8 + 12 - 2));
    CHECK(f.eval_double(0.5) == Catch::Approx(0.125 + 0.75 + 0.5));

    Poly1 g({Rational(5), Rational(0), Rational(-1, 2)});
    CHECK(g.to_string() == "-1/2*t^2 + 5");
    CHECK((f + g).coeff(0) == Rational(5));
    CHECK((f + g).coeff(2) == Rational(5, 2));
    CHECK((f * g).degree() == 5);
    CHECK((f * g).eval(Rational(2)) == f.eval(Rational(2)) * g.eval(Rational(2)));

    // Trailing zeros trimmed.
    Poly1 trimmed({Rational(1), Rational(0)});
    CHECK(trimmed.degree() == 0);
}
