#pragma once

// JSON round-tripping for the exact value types, JSON/text renderers for
// verification reports, and CSV renderers for numeric evaluation output.
//
// Exact types serialize bit-exactly: coefficients travel as decimal
// numerator/denominator strings, never as floats. Report JSON is rendered
// with sorted keys and no timing data unless explicitly requested, so two
// runs over the same records produce byte-identical documents regardless of
// scheduling.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "hps/identities.hpp"
#include "hps/numeric_eval.hpp"
#include "json.hpp"

namespace hps {

using json = nlohmann::json;

// Shortest decimal form that round-trips through a double.
inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw contract_error("format_double: to_chars failed");
    return std::string(buf, end);
}

// ---------------------------------------------------------------------------
// Exact values.

inline json poly_json(const MPoly& q) {
    json terms = json::array();
    for (const auto& [mono, coeff] : q.terms()) {
        json e = json::array();
        for (int i = 0; i < kSymbolCount; ++i)
            e.push_back(mono[static_cast<Symbol>(i)]);
        terms.push_back(json{{"e", std::move(e)},
                             {"num", coeff.numerator().get_str()},
                             {"den", coeff.denominator().get_str()}});
    }
    return terms;
}

inline MPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
    MPoly acc;
    for (const auto& term : j) {
        const json& e = term.at("e");
        if (!e.is_array() || e.size() != static_cast<std::size_t>(kSymbolCount))
            throw std::invalid_argument("poly_from_json: exponent vector must have " +
                                        std::to_string(kSymbolCount) + " entries");
        Monomial m;
        for (int i = 0; i < kSymbolCount; ++i)
            m.e[static_cast<std::size_t>(i)] = e.at(static_cast<std::size_t>(i)).get<std::uint32_t>();
        Rational c(Int(term.at("num").get<std::string>()),
                   Int(term.at("den").get<std::string>()));
        acc += MPoly::term(c, m);
    }
    return acc;
}

inline json series_json(const TSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(poly_json(s.coeff(k)));
    return json{{"order", s.order()},
                {"reliable_order", s.reliable_order()},
                {"coeffs", std::move(coeffs)}};
}

inline TSeries series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    int reliable = j.at("reliable_order").get<int>();
    const json& coeffs = j.at("coeffs");
    if (order < 0 || !coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order + 1))
        throw std::invalid_argument("series_from_json: coeffs must hold order+1 entries");
    std::vector<MPoly> c;
    c.reserve(coeffs.size());
    for (const auto& entry : coeffs) c.push_back(poly_from_json(entry));
    return TSeries(order, std::move(c), reliable);
}

// ---------------------------------------------------------------------------
// Verification reports.

inline json result_json(const IdentityResult& r, bool timing = false) {
    json j{{"identity", r.id},
           {"paper_eq", r.paper_eq},
           {"order", r.order},
           {"compared_order", r.compared_order},
           {"status", r.pass ? "pass" : "fail"}};
    if (r.mismatch) {
        j["first_mismatch"] = json{{"power", r.mismatch->power},
                                   {"lhs", r.mismatch->lhs.to_string()},
                                   {"rhs", r.mismatch->rhs.to_string()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (timing) j["millis"] = r.millis;
    return j;
}

inline json suite_json(const SuiteReport& rep, bool timing = false) {
    json results = json::array();
    for (const auto& r : rep.results) results.push_back(result_json(r, timing));
    return json{{"order", rep.order},
                {"all_pass", rep.all_pass()},
                {"failures", rep.failures()},
                {"results", std::move(results)}};
}

inline std::string suite_text(const SuiteReport& rep, bool timing = false) {
    std::ostringstream os;
    std::size_t idw = 8, eqw = 4;
    for (const auto& r : rep.results) {
        idw = std::max(idw, r.id.size());
        eqw = std::max(eqw, r.paper_eq.size());
    }
    for (const auto& r : rep.results) {
        os << r.id << std::string(idw + 2 - r.id.size(), ' ') << r.paper_eq
           << std::string(eqw + 2 - r.paper_eq.size(), ' ') << "order " << r.order
           << "  compared " << r.compared_order << "  " << (r.pass ? "PASS" : "FAIL");
        if (timing) os << "  " << r.millis << " ms";
        os << '\n';
        if (r.mismatch)
            os << "  first mismatch at t^" << r.mismatch->power << ": lhs = "
               << r.mismatch->lhs.to_string() << ", rhs = " << r.mismatch->rhs.to_string()
               << '\n';
    }
    os << (rep.all_pass() ? "all " : "FAILED: ")
       << (rep.all_pass() ? std::to_string(rep.results.size()) + " identities pass"
                          : std::to_string(rep.failures()) + " of " +
                                std::to_string(rep.results.size()) + " identities fail")
       << " at order " << rep.order << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Numeric CSV.

inline std::string eval_csv_header() { return "identity,x,y,z,t,truncation,lhs,rhs,absdiff"; }

inline std::string eval_csv_row(const EvalResult& r) {
    std::ostringstream os;
    os << r.id << ',' << format_double(r.point.x) << ',' << format_double(r.point.y) << ','
       << format_double(r.point.z) << ',' << format_double(r.point.t) << ','
       << r.point.truncation << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
       << ',' << format_double(r.absdiff);
    return os.str();
}

inline std::string accel_csv_header() {
    return "identity,x,y,z,t,truncation,tol,lhs_terms,lhs_converged,rhs_terms,rhs_converged";
}

inline std::string accel_csv_row(const AccelReport& r) {
    std::ostringstream os;
    os << r.id << ',' << format_double(r.point.x) << ',' << format_double(r.point.y) << ','
       << format_double(r.point.z) << ',' << format_double(r.point.t) << ','
       << r.point.truncation << ',' << format_double(r.tol) << ',' << r.lhs_terms << ','
       << (r.lhs_converged ? "true" : "false") << ',' << r.rhs_terms << ','
       << (r.rhs_converged ? "true" : "false");
    return os.str();
}

}  // namespace hps
