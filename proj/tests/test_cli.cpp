#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "e8kit/cli.hpp"

using namespace e8kit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "e8kit");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "e8kit_test_" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct over R, compact") {
    const auto r = run({"construct", "--q1", "-1,-1", "--q2", "-1,-1", "--q3", "-1,-1", "--q4", "-1,-1", "--c", "-1",
                        "--field", "R", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["signature"] == -248);
    CHECK(j["real_class"] == "compact");
    CHECK(j["kappa_i_level"] == 8);
  }

  TEST_CASE("construct with c = 1 is split") {
    const auto r = run({"construct", "--q1=-1,-1", "--q2=1,1", "--q3=-1,-1", "--q4=1,1", "--c=1", "--field=R", "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["real_class"] == "split");
  }

  TEST_CASE("text output") {
    const auto r = run({"construct", "--q1", "-1,-1", "--q2", "1,1", "--q3", "1,1", "--q4", "1,1", "--c", "-1", "--field", "R"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e8_minus24") != std::string::npos);
  }

  TEST_CASE("zero entry is a parse error") {
    const auto r = run({"construct", "--q1", "0,1", "--q2", "1,1", "--q3", "1,1", "--q4", "1,1", "--c", "1"});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("zero symbol entry") != std::string::npos);
  }

  TEST_CASE("missing and unknown arguments") {
    CHECK(run({"construct", "--q1", "1,1"}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({}).code == kExitParse);
    CHECK(run({"verify-paper", "--suite", "nope"}).code == kExitParse);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("batch mode keeps going past bad lines") {
    const std::string in = temp_path("batch.txt"), out = temp_path("batch.out");
    {
      std::ofstream f(in);
      f << "# two good records around a bad one\n";
      f << "q1=-1,-1 q2=1,1 q3=1,1 q4=1,1 c=-1 field=R\n";
      f << "q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=0 field=R\n";
      f << "q1=-1,-1 q2=-1,-1 q3=-1,-1 q4=-1,-1 c=-1 field=R\n";
    }
    const auto r = run({"construct", "--batch", in, "--out", out, "--json"});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::ifstream f(out);
    std::vector<nlohmann::json> records;
    std::string line;
    while (std::getline(f, line)) records.push_back(nlohmann::json::parse(line));
    REQUIRE(records.size() == 3);
    CHECK(records[0]["report"]["signature"] == -24);
    CHECK(records[1].contains("error"));
    CHECK(records[2]["report"]["signature"] == -248);
    std::remove(in.c_str());
    std::remove(out.c_str());
  }

  TEST_CASE("batch output is byte-stable") {
    const std::string in = temp_path("stable.txt");
    {
      std::ofstream f(in);
      for (int i = 1; i <= 6; ++i) f << "q1=-1," << i << " q2=2,3 q3=-1,-1 q4=5,7 c=" << (i % 2 ? -i : i) << "\n";
    }
    const auto a = run({"construct", "--batch", in, "--json"});
    const auto b = run({"construct", "--batch", in, "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::remove(in.c_str());
  }

  TEST_CASE("tits") {
    const auto r = run({"tits", "--gamma3=-1,-1,-1", "--phi3=-1,-1,-1", "--phi5=-1,-1,-1,-1,-1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kappa_i_level"] == 8);
    CHECK(j["rost15_zero"] == true);
    CHECK(run({"tits", "--gamma3=1,1,1", "--phi3=1,1,1", "--phi5=2,1,1,1,1"}).code == kExitParse);
  }

  TEST_CASE("descent, crux, roots, appendix") {
    CHECK(run({"descent", "--a", "5", "--c", "3"}).code == 0);
    CHECK(run({"descent", "--a", "4", "--c", "3"}).code == kExitParse);
    const auto crux = run({"crux", "--a", "2", "--b", "3"});
    CHECK(crux.code == 0);
    CHECK(crux.out.find("witt_index        4") != std::string::npos);
    CHECK(run({"roots", "--system", "E8"}).out.find("240 roots") != std::string::npos);
    CHECK(run({"roots", "--table", "A1C4_in_E8"}).code == 0);
    CHECK(run({"roots", "--centralizer"}).out.find("type D4") != std::string::npos);
    CHECK(run({"roots", "--system", "G2"}).code == kExitParse);
    const auto app = run({"appendix", "--s", "3", "--r", "2"});
    CHECK(app.code == 0);
    CHECK(app.out.find("solution (3,0)") != std::string::npos);
  }

  TEST_CASE("verify-paper suites") {
    const auto roots = run({"verify-paper", "--suite", "roots", "--json"});
    CHECK(roots.code == 0);
    const auto j = nlohmann::json::parse(roots.out);
    CHECK(j["summary"]["fail"] == 0);
    std::vector<std::string> ids;
    for (const auto& r : j["results"]) ids.push_back(r["id"]);
    for (const char* id : {"d8_in_e8_pairings", "centralizer_d4", "rost_mult_c4"})
      CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    const auto appendix = run({"verify-paper", "--suite", "appendix"});
    CHECK(appendix.code == 0);
    CHECK(appendix.out.find("appendix_s4_r_quarter") != std::string::npos);
    CHECK(run({"verify-paper", "--suite", "qform"}).code == 0);
    CHECK(run({"verify-paper", "--suite", "descent"}).code == 0);
  }
}
