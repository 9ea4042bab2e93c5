#include "hps/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "hps/special_polynomials.hpp"

using hps::AccelReport;
using hps::EvalPoint;
using hps::EvalResult;
using hps::IdentityResult;
using hps::json;
using hps::MPoly;
using hps::Rational;
using hps::Registry;
using hps::SeriesMismatch;
using hps::SuiteReport;
using hps::TSeries;

namespace {

bool same_series(const TSeries& a, const TSeries& b) {
    if (a.order() != b.order() || a.reliable_order() != b.reliable_order()) return false;
    for (int k = 0; k <= a.order(); ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

}  // namespace

TEST_CASE("shortest round-trip double formatting") {
    CHECK(hps::format_double(0.0) == "0");
    CHECK(hps::format_double(0.1) == "0.1");
    CHECK(hps::format_double(-2.5) == "-2.5");
    for (double v : {1.0 / 3.0, 6.02214076e23, -1.1e-300, 0.30000000000000004})
        CHECK(std::stod(hps::format_double(v)) == v);
}

TEST_CASE("polynomials round-trip through JSON bit-exactly") {
    std::vector<MPoly> samples = {
        MPoly(0),
        MPoly(Rational(-7, 3)),
        hps::hermite(7),
        hps::laguerre(6),
        MPoly::from_string("x^2*y - 3/7*z + p^3 - 1"),
        MPoly(Rational(hps::factorial(30), hps::Int(7))),
    };
    for (const auto& q : samples) {
        json j = hps::poly_json(q);
        CHECK(hps::poly_from_json(j) == q);
        // And through an actual serialize/parse cycle.
        CHECK(hps::poly_from_json(json::parse(j.dump())) == q);
    }
    // Coefficient strings are exact decimal integers, not floats.
    json j = hps::poly_json(MPoly(Rational(hps::factorial(25))));
    CHECK(j[0]["num"].get<std::string>() == hps::factorial(25).get_str());
    CHECK(j[0]["den"].get<std::string>() == "1");
}

TEST_CASE("series round-trip through JSON bit-exactly") {
    TSeries s = TSeries::from_coeffs(8, [](int k) {
        return hps::hermite(static_cast<unsigned>(k)) * MPoly(Rational(1, k + 1));
    });
    CHECK(same_series(hps::series_from_json(hps::series_json(s)), s));

    // Reduced reliability must survive the trip.
    TSeries d = hps::series_derivative(s);
    REQUIRE(d.reliable_order() == 7);
    CHECK(same_series(hps::series_from_json(json::parse(hps::series_json(d).dump())), d));
}

TEST_CASE("malformed JSON documents are rejected") {
    CHECK_THROWS_AS(hps::poly_from_json(json::object()), std::invalid_argument);
    // Wrong exponent arity.
    CHECK_THROWS_AS(
        hps::poly_from_json(json::parse(R"([{"e":[1,2],"num":"1","den":"1"}])")),
        std::invalid_argument);
    // Garbage integer text.
    CHECK_THROWS_AS(
        hps::poly_from_json(json::parse(R"([{"e":[0,0,0,0],"num":"1x","den":"1"}])")),
        std::invalid_argument);
    // Zero denominator.
    CHECK_THROWS_AS(
        hps::poly_from_json(json::parse(R"([{"e":[0,0,0,0],"num":"1","den":"0"}])")),
        std::domain_error);
    // Missing key.
    CHECK_THROWS(hps::poly_from_json(json::parse(R"([{"e":[0,0,0,0],"num":"1"}])")));
    // Coefficient list shorter than the order demands.
    CHECK_THROWS_AS(
        hps::series_from_json(json::parse(R"({"order":3,"reliable_order":3,"coeffs":[[]]})")),
        std::invalid_argument);
}

TEST_CASE("result JSON carries the pinned fields") {
    IdentityResult ok{"EQ1", "(1)", 12, 12, true, std::nullopt, 4};
    json j = hps::result_json(ok);
    CHECK(j["identity"] == "EQ1");
    CHECK(j["paper_eq"] == "(1)");
    CHECK(j["order"] == 12);
    CHECK(j["compared_order"] == 12);
    CHECK(j["status"] == "pass");
    CHECK(j["first_mismatch"].is_null());
    CHECK_FALSE(j.contains("millis"));
    CHECK(hps::result_json(ok, true)["millis"] == 4);

    IdentityResult bad{"EQ19", "(19)", 10, 10, false,
                       SeriesMismatch{5, MPoly(1), MPoly(2)}, 9};
    json f = hps::result_json(bad);
    CHECK(f["status"] == "fail");
    CHECK(f["first_mismatch"]["power"] == 5);
    CHECK(f["first_mismatch"]["lhs"] == "1");
    CHECK(f["first_mismatch"]["rhs"] == "2");
}

TEST_CASE("suite JSON is byte-identical across worker counts") {
    Registry reg;
    SuiteReport a = reg.verify_all(6, 1);
    SuiteReport b = reg.verify_all(6, 4);
    CHECK(hps::suite_json(a).dump(2) == hps::suite_json(b).dump(2));
    json j = hps::suite_json(a);
    CHECK(j["order"] == 6);
    CHECK(j["all_pass"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["results"].size() == reg.records().size());
}

TEST_CASE("suite text renderer") {
    Registry reg;
    SuiteReport rep = reg.verify_ids({"EQ1", "EQ40-MEHLER"}, 8);
    std::string text = hps::suite_text(rep);
    CHECK(text.find("EQ1") != std::string::npos);
    CHECK(text.find("EQ40-MEHLER") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("all 2 identities pass at order 8") != std::string::npos);
    CHECK(text.find(" ms") == std::string::npos);
    CHECK(hps::suite_text(rep, true).find(" ms") != std::string::npos);

    SuiteReport fail{10, {IdentityResult{"EQ19", "(19)", 10, 10, false,
                                         SeriesMismatch{3, MPoly(0), MPoly(1)}, 0}}};
    std::string ftext = hps::suite_text(fail);
    CHECK(ftext.find("FAIL") != std::string::npos);
    CHECK(ftext.find("first mismatch at t^3") != std::string::npos);
    CHECK(ftext.find("FAILED: 1 of 1 identities fail at order 10") != std::string::npos);
}

TEST_CASE("CSV renderers") {
    CHECK(hps::eval_csv_header() == "identity,x,y,z,t,truncation,lhs,rhs,absdiff");
    CHECK(hps::accel_csv_header() ==
          "identity,x,y,z,t,truncation,tol,lhs_terms,lhs_converged,rhs_terms,rhs_converged");

    EvalResult er{"EQ1", EvalPoint{0.25, 0.0, 0.5, 0.125, 30}, 1.5, 1.5, 0.0};
    CHECK(hps::eval_csv_row(er) == "EQ1,0.25,0,0.5,0.125,30,1.5,1.5,0");

    AccelReport ar{"EQ19", EvalPoint{0.5, 0.0, 0.0, 0.2, 30}, 1e-10, 17, 9, true, false};
    CHECK(hps::accel_csv_row(ar) == "EQ19,0.5,0,0,0.2,30,1e-10,17,true,9,false");
}
