#pragma once

// Command-line front end. run_cli is a pure function of its argument vector
// and two output streams, so the whole surface is testable in-process; the
// real binary is a two-line wrapper.
//
// Exit codes: 0 success, 1 verification found a mismatch, 2 bad usage or
// unparseable input, 3 internal contract violation.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hps/json_io.hpp"
#include "hps/special_polynomials.hpp"

namespace hps {

namespace cli_detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// One rational per line; '#' starts a comment; blank lines are skipped.
inline std::vector<Rational> read_rational_lines(std::istream& in) {
    std::vector<Rational> vals;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        vals.push_back(Rational::from_string(line));
    }
    return vals;
}

inline std::vector<Rational> parse_rational_csv(const std::string& s) {
    std::vector<Rational> vals;
    for (const auto& piece : split(s, ',')) vals.push_back(Rational::from_string(trim(piece)));
    return vals;
}

inline double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

inline EvalPoint parse_point(const std::string& spec, int truncation) {
    auto pieces = split(spec, ',');
    if (pieces.size() != 4)
        throw std::invalid_argument("--point expects four comma-separated values x,y,z,t");
    EvalPoint pt{parse_double(trim(pieces[0])), parse_double(trim(pieces[1])),
                 parse_double(trim(pieces[2])), parse_double(trim(pieces[3])), truncation};
    return pt;
}

inline std::vector<std::string> resolve_ids(const Registry& reg, const std::string& ids) {
    std::vector<std::string> out;
    if (ids == "all") {
        for (const auto& rec : reg.records()) out.push_back(rec.id);
        return out;
    }
    for (const auto& piece : split(ids, ',')) {
        std::string id = trim(piece);
        if (id.empty()) throw std::invalid_argument("empty identity id in --ids");
        out.push_back(id);
    }
    return out;
}

inline TSeries hermite_generating_series(int order) {
    TSeries expo = TSeries::monomial(order, 1, MPoly::variable(Symbol::x) * 2L) -
                   TSeries::monomial(order, 2, MPoly(1));
    return series_exp(expo);
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    namespace cd = cli_detail;

    CLI::App app{"Exact engine for Hermite-weighted series transforms"};
    app.require_subcommand(1);
    bool selftest_throw = false;
    app.add_flag("--selftest-throw", selftest_throw)->group("");  // hidden

    // expand ------------------------------------------------------------
    auto* expand = app.add_subcommand(
        "expand", "Print one polynomial or series family member exactly");
    std::string ex_subject;
    int ex_n = 0, ex_r = -1;
    expand
        ->add_option("subject", ex_subject,
                     "one of: hermite, laguerre, exp-poly, geom-poly, r-exp-poly, "
                     "r-geom-poly, hermite-gf")
        ->required();
    expand->add_option("n", ex_n, "index / order")->required()->check(CLI::NonNegativeNumber);
    expand->add_option("r", ex_r, "restriction parameter (r- families only)")
        ->check(CLI::NonNegativeNumber);

    // seq ---------------------------------------------------------------
    auto* seq = app.add_subcommand("seq", "Print sequence prefixes or Stirling triangles");
    std::string sq_name;
    int sq_count = 0, sq_r = 0;
    seq->add_option("name", sq_name,
                    "one of: harmonic, harmonic2, fibonacci, lucas, bell, fubini, "
                    "stirling2, r-stirling2")
        ->required();
    seq->add_option("count", sq_count, "number of rows / values")
        ->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("r", sq_r, "restriction parameter (r-stirling2 only)")
        ->check(CLI::NonNegativeNumber);

    // transform ----------------------------------------------------------
    auto* transform =
        app.add_subcommand("transform", "Apply the alternating binomial transform");
    std::string tr_kind, tr_values, tr_input;
    transform->add_option("kind", tr_kind, "only 'binomial' is defined")->required();
    transform->add_option("values", tr_values, "comma-separated rationals");
    transform->add_option("--input", tr_input, "file with one rational per line, # comments");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Check registered identities exactly");
    std::string vf_ids = "all", vf_format = "text", vf_fault = "none";
    int vf_order = 12, vf_parallelism = 1;
    bool vf_timing = false;
    verify->add_option("--ids", vf_ids, "'all' or comma-separated identity ids");
    verify->add_option("--order,-n", vf_order, "truncation order")->check(CLI::PositiveNumber);
    verify->add_option("--format", vf_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--parallelism", vf_parallelism, "worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--timing", vf_timing, "include per-identity wall time");
    verify->add_option("--fault", vf_fault)->group("");  // hidden: inject a seed fault

    // eval ----------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "Evaluate both sides in floating point (CSV)");
    std::string ev_ids, ev_point = "0,0,0,0";
    int ev_trunc = 30;
    double ev_alpha = 1.5;
    eval->add_option("--ids", ev_ids, "comma-separated identity ids")->required();
    eval->add_option("--point", ev_point, "x,y,z,t with |t| <= 0.25");
    eval->add_option("--order,-n", ev_trunc, "series truncation")->check(CLI::NonNegativeNumber);
    eval->add_option("--alpha", ev_alpha, "real exponent for EQ53");

    // accel ----------------------------------------------------------------
    auto* accel = app.add_subcommand(
        "accel", "Measure how many terms each side needs to reach a tolerance (CSV)");
    std::string ac_ids, ac_point = "0,0,0,0";
    int ac_trunc = 30;
    double ac_tol = 1e-8;
    accel->add_option("--ids", ac_ids, "comma-separated identity ids")->required();
    accel->add_option("--point", ac_point, "x,y,z,t with |t| <= 0.25");
    accel->add_option("--order,-n", ac_trunc, "series truncation")->check(CLI::NonNegativeNumber);
    accel->add_option("--tol", ac_tol, "absolute tolerance")->check(CLI::PositiveNumber);

    // list ----------------------------------------------------------------
    app.add_subcommand("list", "List the identity catalog (TSV)");

    std::reverse(args.begin(), args.end());  // CLI11's vector parse convention
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (selftest_throw) throw contract_error("selftest");

        if (expand->parsed()) {
            Sequences seqs;
            auto need_r = [&](const char* what) {
                if (ex_r < 0)
                    throw std::invalid_argument(std::string(what) + " needs both n and r");
                if (ex_r > ex_n)
                    throw std::invalid_argument(std::string(what) + " needs r <= n");
            };
            if (ex_subject == "hermite") {
                out << hermite(ex_n).to_string() << '\n';
            } else if (ex_subject == "laguerre") {
                out << laguerre(ex_n).to_string() << '\n';
            } else if (ex_subject == "exp-poly") {
                out << exp_poly(ex_n, seqs).to_string() << '\n';
            } else if (ex_subject == "geom-poly") {
                out << geom_poly(ex_n, seqs).to_string() << '\n';
            } else if (ex_subject == "r-exp-poly") {
                need_r("r-exp-poly");
                out << r_exp_poly(ex_n, ex_r, seqs).to_string() << '\n';
            } else if (ex_subject == "r-geom-poly") {
                need_r("r-geom-poly");
                out << r_geom_poly(ex_n, ex_r, seqs).to_string() << '\n';
            } else if (ex_subject == "hermite-gf") {
                out << cd::hermite_generating_series(ex_n).to_string() << '\n';
            } else {
                throw std::invalid_argument("unknown expand subject '" + ex_subject + "'");
            }
            return 0;
        }

        if (seq->parsed()) {
            Sequences seqs;
            auto print_ints = [&](auto fn) {
                for (int n = 0; n < sq_count; ++n) out << fn(n).get_str() << '\n';
            };
            if (sq_name == "harmonic") {
                for (int n = 0; n < sq_count; ++n) out << seqs.harmonic(n).to_string() << '\n';
            } else if (sq_name == "harmonic2") {
                for (int n = 0; n < sq_count; ++n) out << seqs.harmonic2(n).to_string() << '\n';
            } else if (sq_name == "fibonacci") {
                print_ints([&](int n) { return seqs.fibonacci(n); });
            } else if (sq_name == "lucas") {
                print_ints([&](int n) { return seqs.lucas(n); });
            } else if (sq_name == "bell") {
                print_ints([&](int n) { return seqs.bell(n); });
            } else if (sq_name == "fubini") {
                print_ints([&](int n) { return seqs.fubini(n); });
            } else if (sq_name == "stirling2" || sq_name == "r-stirling2") {
                for (int n = 0; n < sq_count; ++n) {
                    for (int k = 0; k <= n; ++k) {
                        if (k) out << '\t';
                        out << (sq_name == "stirling2" ? seqs.stirling2(n, k)
                                                       : seqs.r_stirling2(n, k, sq_r))
                                   .get_str();
                    }
                    out << '\n';
                }
            } else {
                throw std::invalid_argument("unknown sequence '" + sq_name + "'");
            }
            return 0;
        }

        if (transform->parsed()) {
            if (tr_kind != "binomial")
                throw std::invalid_argument("unknown transform '" + tr_kind + "'");
            if (tr_values.empty() == tr_input.empty())
                throw std::invalid_argument(
                    "transform needs exactly one of: positional values, --input file");
            std::vector<Rational> a;
            if (!tr_input.empty()) {
                std::ifstream in(tr_input);
                if (!in) throw std::invalid_argument("cannot open input file '" + tr_input + "'");
                a = cd::read_rational_lines(in);
            } else {
                a = cd::parse_rational_csv(tr_values);
            }
            if (a.empty()) throw std::invalid_argument("transform input is empty");
            std::vector<Rational> b = binomial_transform_values(a);
            for (std::size_t i = 0; i < b.size(); ++i)
                out << (i ? "," : "") << b[i].to_string();
            out << '\n';
            return 0;
        }

        if (verify->parsed()) {
            auto seqs = std::make_shared<const Sequences>(perturbation_from_name(vf_fault));
            Registry reg(seqs);
            SuiteReport rep = reg.verify_ids(cd::resolve_ids(reg, vf_ids), vf_order,
                                             vf_parallelism);
            if (vf_format == "json")
                out << suite_json(rep, vf_timing).dump(2) << '\n';
            else
                out << suite_text(rep, vf_timing);
            return rep.all_pass() ? 0 : 1;
        }

        if (eval->parsed() || accel->parsed()) {
            Registry reg;
            bool do_eval = eval->parsed();
            EvalPoint pt = cd::parse_point(do_eval ? ev_point : ac_point,
                                           do_eval ? ev_trunc : ac_trunc);
            if (std::abs(pt.t) > kEvalRadius)
                throw std::domain_error("|t| exceeds the evaluation radius " +
                                        format_double(kEvalRadius));
            out << (do_eval ? eval_csv_header() : accel_csv_header()) << '\n';
            for (const auto& id : cd::resolve_ids(reg, do_eval ? ev_ids : ac_ids)) {
                if (do_eval) {
                    EvalResult res = id == "EQ53" ? eval_alpha_identity(ev_alpha, pt)
                                                  : eval_identity(reg, id, pt);
                    out << eval_csv_row(res) << '\n';
                } else {
                    out << accel_csv_row(measure_acceleration(reg, id, pt, ac_tol)) << '\n';
                }
            }
            return 0;
        }

        // list
        Registry reg;
        for (const auto& rec : reg.records()) {
            out << rec.id << '\t' << rec.paper_eq << '\t' << kind_name(rec.kind) << '\t'
                << (rec.symbols.empty() ? "-" : rec.symbols) << '\t'
                << (rec.notes.empty() ? "-" : rec.notes) << '\n';
        }
        return 0;
    } catch (const contract_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace hps
