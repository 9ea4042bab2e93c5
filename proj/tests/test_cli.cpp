#include "hps/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliRun {
    int rc;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = hps::run_cli(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, sep)) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("cli: expand prints exact closed forms") {
    CHECK(run({"expand", "hermite", "4"}).out == "16*x^4 - 48*x^2 + 12\n");
    CHECK(run({"expand", "exp-poly", "3"}).out == "t^3 + 3*t^2 + t\n");
    CHECK(run({"expand", "r-geom-poly", "3", "2"}).out == "6*t^3 + 4*t^2\n");
    CliRun gf = run({"expand", "hermite-gf", "3"});
    CHECK(gf.rc == 0);
    CHECK(gf.out.find("t^2: 2*x^2 - 1") != std::string::npos);
    CHECK(gf.out.find("t^3: 4/3*x^3 - 2*x") != std::string::npos);

    CHECK(run({"expand", "hermite", "-3"}).rc == 2);
    CHECK(run({"expand", "unknown-family", "3"}).rc == 2);
    // r-families refuse to run without a valid r.
    CHECK(run({"expand", "r-exp-poly", "3"}).rc == 2);
    CHECK(run({"expand", "r-exp-poly", "2", "5"}).rc == 2);
}

TEST_CASE("cli: seq prints prefixes and triangles") {
    CHECK(run({"seq", "fibonacci", "6"}).out == "0\n1\n1\n2\n3\n5\n");
    CHECK(run({"seq", "harmonic", "4"}).out == "0\n1\n3/2\n11/6\n");
    CHECK(run({"seq", "stirling2", "4"}).out == "1\n0\t1\n0\t1\t1\n0\t1\t3\t1\n");
    CHECK(run({"seq", "r-stirling2", "4", "2"}).out == "0\n0\t0\n0\t0\t1\n0\t0\t2\t1\n");
    CHECK(run({"seq", "bell", "5"}).out == "1\n1\n2\n5\n15\n");
    CHECK(run({"seq", "nope", "4"}).rc == 2);
    CHECK(run({"seq", "fibonacci", "0"}).rc == 2);
}

TEST_CASE("cli: binomial transform from positional values and from a file") {
    CHECK(run({"transform", "binomial", "1,1,1,1"}).out == "1,0,0,0\n");
    // 1/(k+1) is the transform's fixed point.
    CHECK(run({"transform", "binomial", "1, 1/2, 1/3, 1/4"}).out == "1,1/2,1/3,1/4\n");

    auto path = std::filesystem::temp_directory_path() / "hps_cli_transform_input.txt";
    {
        std::ofstream f(path);
        f << "# leading comment\n1\n1/2   # trailing comment\n\n1/3\n1/4\n";
    }
    CHECK(run({"transform", "binomial", "--input", path.string()}).out == "1,1/2,1/3,1/4\n");
    std::filesystem::remove(path);

    CHECK(run({"transform", "binomial"}).rc == 2);
    CHECK(run({"transform", "binomial", "1,2", "--input", "x.txt"}).rc == 2);
    CHECK(run({"transform", "binomial", "1,2x,3"}).rc == 2);
    CHECK(run({"transform", "binomial", "--input", "/nonexistent/file.txt"}).rc == 2);
    CHECK(run({"transform", "fourier", "1,2"}).rc == 2);
}

TEST_CASE("cli: verify pass/fail wiring") {
    CliRun ok = run({"verify", "--ids", "EQ1,EQ40-MEHLER", "--order", "8"});
    CHECK(ok.rc == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("all 2 identities pass at order 8") != std::string::npos);
    CHECK(ok.out.find(" ms") == std::string::npos);

    CliRun timed = run({"verify", "--ids", "EQ1", "--order", "6", "--timing"});
    CHECK(timed.out.find(" ms") != std::string::npos);

    CliRun js = run({"verify", "--ids", "EQ19", "--order", "8", "--format", "json"});
    CHECK(js.rc == 0);
    hps::json doc = hps::json::parse(js.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["results"][0]["identity"] == "EQ19");
    CHECK(doc["results"][0]["first_mismatch"].is_null());
    CHECK_FALSE(doc["results"][0].contains("millis"));

    CHECK(run({"verify", "--ids", "EQ404", "--order", "8"}).rc == 2);
    CHECK(run({"verify", "--ids", "EQ1", "--format", "yaml"}).rc == 2);
    CHECK(run({"verify", "--ids", "EQ1", "--order", "0"}).rc == 2);
}

TEST_CASE("cli: injected faults flip the exit code to 1") {
    CliRun bad = run({"verify", "--ids", "EQ55-STIRLING", "--order", "8", "--fault",
                      "bell-seed"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("first mismatch at t^0") != std::string::npos);

    CliRun jbad = run({"verify", "--ids", "EQ93", "--order", "8", "--fault",
                       "stirling-weight", "--format", "json"});
    CHECK(jbad.rc == 1);
    hps::json doc = hps::json::parse(jbad.out);
    CHECK(doc["results"][0]["status"] == "fail");
    CHECK(doc["results"][0]["first_mismatch"]["power"] == 2);

    CHECK(run({"verify", "--fault", "made-up", "--order", "8"}).rc == 2);
}

TEST_CASE("cli: verify output is deterministic across worker counts") {
    CliRun a = run({"verify", "--order", "8", "--format", "json", "--parallelism", "1"});
    CliRun b = run({"verify", "--order", "8", "--format", "json", "--parallelism", "3"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: eval emits the pinned CSV schema") {
    CliRun r = run({"eval", "--ids", "EQ1", "--point", "0.3,0,0,0.1", "--order", "30"});
    REQUIRE(r.rc == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "identity,x,y,z,t,truncation,lhs,rhs,absdiff");
    auto fs = fields(ls[1], ',');
    REQUIRE(fs.size() == 9);
    CHECK(fs[0] == "EQ1");
    CHECK(fs[5] == "30");
    CHECK(std::abs(std::stod(fs[6]) - std::exp(0.05)) < 1e-12);
    CHECK(std::stod(fs[8]) < 1e-12);

    // The real-exponent identity rides the same command with --alpha.
    CliRun a = run({"eval", "--ids", "EQ53", "--point", "0.2,0,0,0.05", "--alpha", "1.5"});
    REQUIRE(a.rc == 0);
    auto as = fields(lines(a.out)[1], ',');
    CHECK(as[0] == "EQ53");
    CHECK(std::stod(as[8]) < 1e-8);

    CliRun bad = run({"eval", "--ids", "EQ1", "--point", "0,0,0,0.3"});
    CHECK(bad.rc == 2);
    CHECK(bad.out.empty());  // nothing printed before the radius check
    CHECK(run({"eval", "--ids", "EQ404", "--point", "0,0,0,0.1"}).rc == 2);
    CHECK(run({"eval", "--ids", "EQ13", "--point", "0,0,0,0.1"}).rc == 2);
    CHECK(run({"eval", "--ids", "EQ1", "--point", "0,0,0.1"}).rc == 2);
    CHECK(run({"eval", "--ids", "EQ1", "--point", "0,0,0,zero"}).rc == 2);
}

TEST_CASE("cli: accel emits the pinned CSV schema") {
    CliRun r = run({"accel", "--ids", "EQ1", "--point", "0.4,0,0,0", "--tol", "1e-10"});
    REQUIRE(r.rc == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] ==
          "identity,x,y,z,t,truncation,tol,lhs_terms,lhs_converged,rhs_terms,rhs_converged");
    CHECK(ls[1] == "EQ1,0.4,0,0,0,30,1e-10,1,true,1,true");

    CliRun big = run({"accel", "--ids", "EQ1", "--point", "0.4,0,0,0.1", "--tol", "1000"});
    auto fs = fields(lines(big.out)[1], ',');
    CHECK(fs[7] == "0");
    CHECK(fs[9] == "0");

    CHECK(run({"accel", "--ids", "EQ1", "--tol", "-1"}).rc == 2);
}

TEST_CASE("cli: list prints one TSV row per record") {
    CliRun r = run({"list"});
    REQUIRE(r.rc == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() >= 55);
    bool saw_mehler = false;
    std::string prev;
    for (const auto& line : ls) {
        auto fs = fields(line, '\t');
        REQUIRE(fs.size() == 5);
        CHECK(prev < fs[0]);  // sorted, unique ids
        prev = fs[0];
        if (fs[0] == "EQ40-MEHLER") {
            saw_mehler = true;
            CHECK(fs[1] == "(40)");
            CHECK(fs[2] == "series");
        }
    }
    CHECK(saw_mehler);
}

TEST_CASE("cli: usage and internal-error exit codes") {
    CHECK(run({"--help"}).rc == 0);
    CHECK(run({"--help"}).out.find("Usage") != std::string::npos);
    CHECK(run({}).rc == 2);
    CHECK(run({"bogus"}).rc == 2);

    CliRun boom = run({"--selftest-throw", "verify", "--ids", "EQ1"});
    CHECK(boom.rc == 3);
    CHECK(boom.err.find("internal error") != std::string::npos);
}
