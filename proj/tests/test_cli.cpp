#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "oracle.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = mstd::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& body = "")
      : path(std::filesystem::temp_directory_path() / ("mstd_cli_test_" + name)) {
    if (!body.empty()) std::ofstream(path) << body;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

const char* kPairs = R"([
  {"L": [0,1,2,3,7,8,10,12,13,14,19], "R": [20,25,26,27,30,32,36,37,38,39]},
  {"L": [4,5,6,9,11,15,16,17,18], "R": [21,22,23,24,28,29,31,33,34,35]}
])";

bool all_mstd(const json& parts) {
  for (const auto& p : parts)
    if (!oracle::mstd(p["elements"].get<oracle::Values>())) return false;
  return true;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify prints the profile") {
    const auto r = run({"verify", "[0,2,3,4,7,11,12,14]"});
    CHECK(r.code == mstd::cli::kOk);
    CHECK(r.out.find("|A+A| = 26, |A-A| = 25") != std::string::npos);

    const auto g = run({"verify", "(2|1,2,4,1)"});
    CHECK(g.code == mstd::cli::kMismatch);

    const auto p = run({"verify", "[1,2,3,4,8,9,11,13,14,15,20,21,26,27,28,31,33,37,38,39,40]", "--n", "20"});
    CHECK(p.code == mstd::cli::kOk);
    CHECK(p.out.find("P_20: true") != std::string::npos);
    CHECK(p.out.find("missing differences: -21 21") != std::string::npos);
  }

  TEST_CASE("verify in JSON") {
    const auto r = run({"--json", "verify", "0..10:2", "--kernel", "convolution"});
    CHECK(r.code == mstd::cli::kMismatch);
    const auto j = json::parse(r.out);
    CHECK(j["size"] == 6);
    CHECK(j["sum_count"] == 11);
    CHECK(j["class"] == "balanced");
  }

  TEST_CASE("verify reads a set from a file") {
    TempFile f("set.json", "[0,2,3,4,7,11,12,14]\n");
    CHECK(run({"verify", f.str()}).code == mstd::cli::kOk);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run({}).code == mstd::cli::kInputError);
    CHECK(run({"verify", "[]"}).code == mstd::cli::kInputError);
    CHECK(run({"verify", "[1,2,3]", "--kernel", "fft"}).code == mstd::cli::kInputError);
    CHECK(run({"verify", "[1,2,3]", "--n", "7"}).code == mstd::cli::kInputError);
    CHECK(run({"frobnicate"}).code == mstd::cli::kInputError);
    CHECK(run({"reproduce", "nowhere"}).code == mstd::cli::kInputError);
    const auto k3 = run({"construct", "k-decomp", "--k", "3", "--r", "100"});
    CHECK(k3.code == mstd::cli::kInputError);
    CHECK(k3.err.find("--confirm-large") != std::string::npos);
    CHECK(run({"construct", "k-decomp", "--k", "2", "--r", "15"}).code == mstd::cli::kInputError);
    CHECK(run({"search", "min-card", "--span", "35"}).code == mstd::cli::kInputError);
    CHECK(run({"search", "fringe-pairs", "--n", "21"}).code == mstd::cli::kInputError);
  }

  TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == mstd::cli::kOk);
    CHECK(r.out.find("reproduce") != std::string::npos);
  }

  TEST_CASE("reproduce single targets") {
    for (const char* t : {"remark12", "fringe48", "baseexp"}) {
      const auto r = run({"reproduce", t});
      CHECK(r.code == mstd::cli::kOk);
      CHECK(r.out.find(std::string(t) + ": PASS") == 0);
      CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
    const auto j = json::parse(run({"--json", "reproduce", "remark12"}).out);
    CHECK(j["pass"] == true);
    CHECK(j["target"] == "remark12");
  }

  TEST_CASE("two-decomp with the reference pair") {
    const auto r = run({"--json", "construct", "two-decomp", "--k", "12", "--m", "30"});
    REQUIRE(r.code == mstd::cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["interval"] == json::array({1, 122}));
    CHECK(j["parts"][0]["sum_count"] == 243);
    CHECK(j["parts"][1]["diff_count"] == 225);
    CHECK(all_mstd(j["parts"]));
    CHECK(run({"construct", "two-decomp", "--m", "5"}).code == mstd::cli::kInputError);
  }

  TEST_CASE("fringe pairs written to a file feed two-decomp") {
    TempFile list("pairs.json");
    const auto r = run({"search", "fringe-pairs", "--n", "20", "--out", list.str()});
    REQUIRE(r.code == mstd::cli::kOk);
    CHECK(r.out.find("48 base pairs") == 0);
    json pairs;
    std::ifstream(list.path) >> pairs;
    REQUIRE(pairs.size() == 48);
    const auto non_p = std::find_if(pairs.begin(), pairs.end(), [](const json& b) { return !b["p_property"].get<bool>(); });
    REQUIRE(non_p != pairs.end());
    TempFile base("base.json", non_p->dump());
    CHECK(run({"construct", "two-decomp", "--base", base.str()}).code == mstd::cli::kInputError);
    const auto ok = run({"--json", "construct", "two-decomp", "--base", base.str(), "--conditions", "numbered"});
    REQUIRE(ok.code == mstd::cli::kOk);
    CHECK(all_mstd(json::parse(ok.out)["parts"]));
  }

  TEST_CASE("k-decomp") {
    const auto r = run({"--json", "construct", "k-decomp", "--k", "4", "--r", "200"});
    REQUIRE(r.code == mstd::cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["parts"].size() == 4);
    CHECK(all_mstd(j["parts"]));
    const auto t = run({"construct", "k-decomp", "--k", "5", "--r", "489"});
    CHECK(t.code == mstd::cli::kOk);
    CHECK(t.out.find("verified: yes") != std::string::npos);
  }

  TEST_CASE("families") {
    const auto s = run({"family", "spohn", "--variant", "A1", "--m", "1"});
    CHECK(s.code == mstd::cli::kOk);
    CHECK(s.out.find("(1|1,1,2,1,4,3,1,1,2)") != std::string::npos);
    const auto j = json::parse(run({"--json", "family", "spohn", "--variant", "A1", "--m", "119"}).out);
    CHECK(j["complement_step4"].size() == 122);
    CHECK(run({"family", "spohn", "--variant", "B", "--m", "3"}).code == mstd::cli::kInputError);

    const auto b = run({"--json", "family", "base-expand", "--set", "[0,2,3,4,7,11,12,14]", "--k", "2", "--m", "29"});
    CHECK(b.code == mstd::cli::kOk);
    const auto bj = json::parse(b.out);
    CHECK(bj["sum_count"] == 26 * 26);
    CHECK(bj["diff_count"] == 25 * 25);
    CHECK(run({"family", "base-expand", "--set", "[0,2,3]", "--k", "2", "--m", "3"}).code == mstd::cli::kInputError);
  }

  TEST_CASE("searches") {
    const auto m = run({"search", "min-card", "--span", "14"});
    CHECK(m.code == mstd::cli::kOk);
    CHECK(m.out.find("has 8 elements") != std::string::npos);
    const auto f = json::parse(run({"--json", "search", "feasibility", "--k", "2", "--r-min", "10", "--r-max", "12"}).out);
    CHECK(f["rows"].size() == 3);
  }

  TEST_CASE("probability commands") {
    TempFile pairs("prob_pairs.json", kPairs);
    const auto r = run({"prob", "report", "--pairs", pairs.str(), "--n", "20"});
    CHECK(r.code == mstd::cli::kOk);
    CHECK(r.out.find("sum f = 359/1024") != std::string::npos);
    CHECK(r.out.find("sufficient condition: pass") != std::string::npos);

    const auto a = json::parse(
        run({"--json", "prob", "montecarlo", "--pairs", pairs.str(), "--n", "20", "--m", "50", "--trials", "2000", "--seed", "3"}).out);
    const auto b = json::parse(run({"--json", "--threads", "2", "prob", "montecarlo", "--pairs", pairs.str(), "--n", "20", "--m",
                                    "50", "--trials", "2000", "--seed", "3"})
                                   .out);
    CHECK(a["successes"] == b["successes"]);
    CHECK(a["trials"] == 2000);

    TempFile bad("bad_pairs.json", "{\"L\": 1}");
    CHECK(run({"prob", "report", "--pairs", bad.str(), "--n", "20"}).code == mstd::cli::kInputError);
    CHECK(run({"prob", "report", "--pairs", "/nonexistent/file.json", "--n", "20"}).code == mstd::cli::kInputError);
  }

  TEST_CASE("bounds") {
    const auto r = run({"bounds", "--k", "5"});
    CHECK(r.code == mstd::cli::kOk);
    CHECK(r.out.find("40 <= R(5) <= 86") == 0);
    const auto j = json::parse(run({"--json", "bounds", "--k", "2"}).out);
    CHECK(j["lower"] == 16);
    CHECK(j["upper"] == 20);
    CHECK(run({"bounds", "--k", "1"}).code == mstd::cli::kInputError);
  }
}
