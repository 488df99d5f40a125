#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "finfree/cli.hpp"
#include "finfree/json_io.hpp"

using namespace finfree;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    json::Json json() const { return json::parse(out); }
    json::Json error() const { return json::parse(err); }
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "finfree");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("finfree_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
        write("A.json", R"({"n":3,"entries":[["1","0","0"],["0","0","0"],["0","0","0"]]})");
        write("B.json", R"({"n":3,"entries":[["1","1","0"],["1","1","0"],["0","0","1"]]})");
        write("D.json", R"({"n":3,"entries":[["1","0","0"],["0","2","0"],["0","0","3"]]})");
        write("R.json", R"({"n":3,"entries":[["1","-1","0"],["-1","13","-3"],["0","-3","1"]]})");
        write("PB.json", R"({"n":3,"entries":[["1","2","3"],["6","1","-12"],["4","-1","1"]]})");
        write("N.json", R"({"n":2,"entries":[["1","2"],["0","1"]]})");
        write("I2.json", R"({"n":2,"entries":[["1","0"],["0","1"]]})");
        write("p.json", R"({"degree":3,"coeffs":["1","-1","0","0"]})");
        write("q.json", R"({"degree":3,"coeffs":["1","-3","2","0"]})");
        write("q2.json", R"({"degree":2,"coeffs":["1","0","-1"]})");
        write("nonmonic.json", R"({"degree":3,"coeffs":["2","-1","0","0"]})");
        write("broken.json", R"({"n":3,"entries":[["1","0"]})");
        write("badshape.json", R"({"n":2,"entries":[["1","0"],["0"]]})");
        write("badscalar.json", R"({"n":1,"entries":[["one"]]})");
        write("nokey.json", R"({"size":1})");
        write("big.json", big_identity(7));
    }
    ~Workspace() { fs::remove_all(dir_); }
    std::string operator()(const std::string& name) const { return (dir_ / name).string(); }

private:
    void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
    static std::string big_identity(std::size_t n) {
        json::Json rows = json::Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json::Json row = json::Json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? "1" : "0");
            rows.push_back(row);
        }
        return json::Json{{"n", n}, {"entries", rows}}.dump();
    }
    fs::path dir_;
};

const Workspace& ws() {
    static const Workspace w;
    return w;
}

}  // namespace

TEST_CASE("charpoly") {
    const Result r = invoke({"charpoly", ws()("B.json")});
    CHECK(r.code == 0);
    CHECK(r.json()["coeffs"] == json::Json({"1", "-3", "2", "0"}));
    CHECK(json::polynomial_from_json(r.json()) == Polynomial({1, -3, 2, 0}));
}

TEST_CASE("convolve") {
    const Result add = invoke({"convolve", "--kind", "additive", ws()("p.json"), ws()("q.json")});
    CHECK(add.code == 0);
    CHECK(add.json()["coeffs"] == json::Json({"1", "-4", "4", "-2/3"}));
    const Result mult = invoke({"convolve", "--kind", "multiplicative", ws()("p.json"), ws()("q.json")});
    CHECK(mult.json()["coeffs"] == json::Json({"1", "-1", "0", "0"}));
    const Result defaulted = invoke({"convolve", ws()("p.json"), ws()("q.json")});
    CHECK(defaulted.out == add.out);

    const Result mismatch = invoke({"convolve", ws()("p.json"), ws()("q2.json")});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.error()["error"] == "degree_mismatch");
    const Result nonmonic = invoke({"convolve", ws()("nonmonic.json"), ws()("q.json")});
    CHECK(nonmonic.code == 1);
    CHECK(nonmonic.error()["error"] == "not_monic");
}

TEST_CASE("check-ffp exit codes") {
    const Result mult = invoke({"check-ffp", "--kind", "multiplicative", ws()("A.json"), ws()("B.json")});
    CHECK(mult.code == 0);
    CHECK(mult.json()["verdict"] == true);
    const Result add = invoke({"check-ffp", "--kind", "additive", ws()("A.json"), ws()("B.json")});
    CHECK(add.code == 2);
    CHECK(add.json()["verdict"] == false);
    CHECK(add.json()["residuals"]["3"] == "-1/3");
    CHECK(add.err.empty());
    const Result pair = invoke({"check-ffp", ws()("D.json"), ws()("R.json")});
    CHECK(pair.code == 0);
    const Result mismatch = invoke({"check-ffp", ws()("D.json"), ws()("N.json")});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.error()["error"] == "dimension_mismatch");
}

TEST_CASE("check-balanced and cycle-sums") {
    const Result r = invoke({"check-balanced", ws()("PB.json")});
    CHECK(r.code == 0);
    CHECK(r.json()["principally_balanced"] == true);
    for (const auto& m : r.json()["minors"][2]) CHECK(m["value"] == "-11");
    const Result d = invoke({"check-balanced", ws()("D.json")});
    CHECK(d.json()["principally_balanced"] == false);

    const Result c = invoke({"cycle-sums", ws()("PB.json")});
    CHECK(c.code == 0);
    CHECK(c.json()["balanced"] == true);
}

TEST_CASE("expect") {
    const Result exact = invoke({"expect", ws()("D.json"), ws()("R.json")});
    CHECK(exact.code == 0);
    CHECK(exact.json()["expected"] == exact.json()["convolution"]);
    CHECK(exact.json()["identity_applies"] == true);
    CHECK_FALSE(exact.json().contains("warning"));

    const Result warn = invoke({"expect", ws()("N.json"), ws()("I2.json")});
    CHECK(warn.code == 0);
    CHECK(warn.json()["identity_applies"] == false);
    CHECK(warn.json().contains("warning"));

    const Result mc = invoke({"expect", "--mc", "--samples", "2000", "--seed", "5", ws()("D.json"), ws()("R.json")});
    CHECK(mc.code == 0);
    CHECK(mc.json()["samples"] == 2000);
    CHECK(mc.json()["coeffs"].size() == 4);
    CHECK(mc.json()["max_deviation"].is_number_float());
    const Result again = invoke({"expect", "--mc", "--samples", "2000", "--seed", "5", ws()("D.json"), ws()("R.json")});
    CHECK(again.out == mc.out);

    CHECK(invoke({"expect", "--mc", ws()("D.json"), ws()("R.json")}).code == 1);
    CHECK(invoke({"expect", "--seed", "3", ws()("D.json"), ws()("R.json")}).code == 1);
    const Result big = invoke({"expect", ws()("big.json"), ws()("big.json")});
    CHECK(big.code == 1);
    CHECK(big.error()["error"] == "size_guard");
}

TEST_CASE("verify-pair") {
    const std::vector<std::string> args{"verify-pair", "--families", "diag,pb", "--kind", "additive",
                                        "--trials", "20", "--n", "4", "--seed", "7"};
    const Result r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.json()["ok"] == true);
    CHECK(r.json()["trials"] == 20);
    CHECK(r.json()["failures"].empty());
    CHECK(invoke(args).out == r.out);

    const Result scalar = invoke({"verify-pair", "--families", "scalar,all", "--kind", "multiplicative", "--trials",
                                  "20", "--n", "4", "--seed", "1"});
    CHECK(scalar.json()["ok"] == true);

    CHECK(invoke({"verify-pair", "--families", "diag,pb", "--n", "3"}).code == 1);
    const Result unsupported = invoke({"verify-pair", "--families", "diag,ut", "--n", "3", "--seed", "1"});
    CHECK(unsupported.code == 1);
    CHECK(unsupported.error()["error"] == "unsupported_pair");
    const Result unknown = invoke({"verify-pair", "--families", "diag,toeplitz", "--n", "3", "--seed", "1"});
    CHECK(unknown.code == 1);
    CHECK(unknown.error()["error"] == "invalid_argument");
}

TEST_CASE("moments, cumulants and sum-moments") {
    const Result m = invoke({"moments", ws()("R.json"), "--k", "4"});
    CHECK(m.code == 0);
    CHECK(m.json()["moments"].size() == 4);
    CHECK(m.json()["moments"][1] == "191/3");
    CHECK(json::moments_from_json(m.json()).values.size() == 4);

    const Result c = invoke({"cumulants", ws()("B.json")});
    CHECK(c.code == 0);
    CHECK(c.json()["cumulants"][0] == "1");

    const Result s = invoke({"sum-moments", ws()("D.json"), ws()("R.json")});
    CHECK(s.code == 0);
    CHECK(s.json()["moments"][1] == "265/3");
}

TEST_CASE("rank-bound and witness-ekl") {
    const Result r = invoke({"rank-bound", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.json()["rank_upper_bound"] == "27");
    CHECK(invoke({"rank-bound", "--n", "2"}).json()["rank_upper_bound"] == "4");
    CHECK(invoke({"rank-bound", "--n", "0"}).code == 1);

    const Result w = invoke({"witness-ekl", ws()("B.json")});
    CHECK(w.code == 0);
    CHECK(w.json()["witness"]["k"] == 0);
    CHECK(w.json()["witness"]["l"] == 1);
    CHECK(w.json()["witness"]["report"]["residuals"]["2"] == "-1");
    CHECK(invoke({"witness-ekl", ws()("D.json")}).json()["witness"].is_null());
    const Result wm = invoke({"witness-ekl", "--kind", "multiplicative", ws()("B.json")});
    CHECK(wm.json()["witness"]["report"]["residuals"]["1"] == "-1");
}

TEST_CASE("input errors") {
    const Result missing = invoke({"charpoly", ws()("does_not_exist.json")});
    CHECK(missing.code == 1);
    CHECK(missing.error()["error"] == "io_error");
    CHECK(missing.out.empty());
    for (const char* name : {"broken.json", "badshape.json", "badscalar.json", "nokey.json"}) {
        CAPTURE(name);
        const Result r = invoke({"charpoly", ws()(name)});
        CHECK(r.code == 1);
        CHECK(r.error()["error"] == "malformed_json");
    }
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 1);
    const Result unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 1);
    CHECK(unknown.error()["error"] == "usage");
    CHECK(invoke({"charpoly", ws()("B.json"), "--bogus"}).code == 1);
    CHECK(invoke({"check-ffp", "--kind", "sideways", ws()("A.json"), ws()("B.json")}).code == 1);
    CHECK(invoke({"charpoly"}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("emitted json re-parses to equal values") {
    const std::vector<std::vector<std::string>> commands{
        {"charpoly", ws()("PB.json")},
        {"convolve", ws()("p.json"), ws()("q.json")},
        {"check-ffp", ws()("A.json"), ws()("B.json")},
        {"check-balanced", ws()("PB.json")},
        {"cycle-sums", ws()("PB.json")},
        {"expect", "--kind", "multiplicative", ws()("D.json"), ws()("R.json")},
        {"moments", ws()("PB.json"), "--k", "6"},
        {"cumulants", ws()("R.json")},
        {"sum-moments", ws()("D.json"), ws()("R.json")},
        {"witness-ekl", ws()("PB.json")},
        {"rank-bound", "--n", "5"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd.front());
        const Result r = invoke(cmd);
        REQUIRE(r.code != 1);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(invoke(cmd).out == r.out);
    }
    const Result check = invoke({"check-ffp", ws()("A.json"), ws()("B.json")});
    const FfpReport report = json::ffp_report_from_json(check.json());
    CHECK(json::to_json(report) == check.json());
    const Result cum = invoke({"cumulants", ws()("R.json")});
    CHECK(json::to_json(json::cumulants_from_json(cum.json())) == cum.json());
}

TEST_CASE("installed binary follows the exit-code contract") {
    const std::string bin = FINFREE_CLI_PATH;
    const std::string quiet = " > /dev/null 2>&1";
    auto status = [](const std::string& cmd) {
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(bin + " check-ffp --kind multiplicative " + ws()("A.json") + " " + ws()("B.json") + quiet) == 0);
    CHECK(status(bin + " check-ffp " + ws()("A.json") + " " + ws()("B.json") + quiet) == 2);
    CHECK(status(bin + " charpoly " + ws()("broken.json") + quiet) == 1);
    CHECK(status(bin + " rank-bound --n 3" + quiet) == 0);
}
