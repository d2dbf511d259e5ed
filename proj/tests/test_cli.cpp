#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqspace/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"seqspace"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.code = seqspace::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("transform command emits exact csv") {
    CliRun r = run({"transform", "--N", "4", "--x", "list:1;tail=zero", "--lambda", "n+1",
                    "--mode", "rational", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    std::vector<std::string> want{"n,y_n", "0,1", "1,1/2", "2,1/3", "3,1/4", "4,1/5"};
    CHECK(lines_of(r.out) == want);
}

TEST_CASE("inverse command undoes transform through a csv file on disk") {
    CliRun fwd = run({"transform", "--N", "7", "--x", "list:1,-2,3/7,0,5;tail=repeat",
                      "--lambda", "n+1", "--mode", "rational", "--format", "csv"});
    REQUIRE(fwd.code == 0);

    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "seqspace_cli_roundtrip.csv";
    {
        std::ofstream f(tmp);
        f << fwd.out;
    }
    CliRun back = run({"inverse", "--N", "7", "--y", "@" + tmp.string(), "--lambda", "n+1",
                       "--mode", "rational", "--format", "csv"});
    fs::remove(tmp);
    REQUIRE(back.code == 0);
    std::vector<std::string> want{"n,x_n", "0,1", "1,-2", "2,3/7", "3,0",
                                  "4,5", "5,5", "6,5", "7,5"};
    CHECK(lines_of(back.out) == want);
}

TEST_CASE("json output is byte identical across runs") {
    std::vector<std::string> args{"classify", "--target", "lq", "--A", "diag:2^-n",
                                  "--lambda", "n+1", "--p", "2", "--q", "2", "--N", "400"};
    CliRun a = run(args);
    CliRun b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    json doc = json::parse(a.out);
    CHECK(doc["target"] == "lq");
    CHECK(doc["combined"]["tag"] == "ConvergentNumeric");
    CHECK(doc["conditions"].size() == 4);
}

TEST_CASE("membership estimate is reproducible from the command line") {
    CliRun r = run({"member", "--space", "ell_lambda", "--x", "list:1;tail=zero",
                    "--lambda", "n+1", "--p", "2", "--N", "10000"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["space"] == "ell_lambda");
    CHECK(doc["verdict"]["tag"] == "ConvergentNumeric");
    CHECK(doc["estimate"].get<double>() ==
          doctest::Approx(1.2825108505763472).epsilon(1e-12));
    CHECK(doc["paranorm"]["M"].get<double>() == 2.0);
}

TEST_CASE("witness command reports both memberships") {
    CliRun r = run({"witness", "--N", "4000"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["declared_sup"].get<double>() == 2.0);
    CHECK(doc["c0_lambda"]["verdict"]["tag"] == "ConvergentNumeric");
    CHECK(doc["ell_lambda"]["verdict"]["tag"] == "DivergentNumeric");
}

TEST_CASE("table format renders flat key lines") {
    CliRun r = run({"dual", "--which", "beta", "--a", "1/(n+1)^3", "--lambda", "n+1",
                    "--p", "1", "--N", "500", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("combined.tag: ConvergentNumeric") != std::string::npos);
}

TEST_CASE("input failures exit with code 2 and a reason on stderr") {
    CliRun bad_lambda = run({"transform", "--N", "5", "--x", "1", "--lambda", "n"});
    CHECK(bad_lambda.code == 2);
    CHECK(bad_lambda.out.empty());
    CHECK(bad_lambda.err.find("input error") != std::string::npos);
    CHECK(bad_lambda.err.find("not positive") != std::string::npos);

    CliRun bad_id = run({"condition", "--id", "4.99", "--A", "identity", "--lambda", "n+1",
                         "--p", "1", "--q", "2", "--N", "50"});
    CHECK(bad_id.code == 2);
    CHECK(bad_id.err.find("unknown condition id") != std::string::npos);

    CliRun bad_expr = run({"transform", "--N", "5", "--x", "2*m", "--lambda", "n+1"});
    CHECK(bad_expr.code == 2);
    CHECK(bad_expr.err.find("input error") != std::string::npos);

    CliRun bad_flag = run({"transform", "--N", "5", "--x", "1", "--lambda", "n+1",
                           "--format", "xml"});
    CHECK(bad_flag.code == 2);

    CliRun missing = run({"member", "--N", "5", "--x", "1", "--lambda", "n+1", "--p", "2"});
    CHECK(missing.code == 2);
}

TEST_CASE("help exits cleanly") {
    CliRun top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("transform") != std::string::npos);
    CHECK(top.out.find("classify") != std::string::npos);

    CliRun sub = run({"paranorm", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--p") != std::string::npos);
}

TEST_CASE("exact mode refuses irrational specs instead of silently degrading") {
    CliRun r = run({"transform", "--N", "5", "--x", "n^0.5", "--lambda", "n+1",
                    "--mode", "rational"});
    CHECK(r.code == 2);
    CHECK(r.err.find("input error") != std::string::npos);
}
