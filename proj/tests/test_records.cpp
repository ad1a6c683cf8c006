#include <doctest.h>

#include <sstream>

#include "e8kit/records.hpp"

using namespace e8kit;

TEST_SUITE("records") {
  TEST_CASE("parse and format round trip") {
    const std::string line = "q1=-1,-1 q2=-1,-3 q3=2,5 q4=1,1 c=-1 field=Q";
    const auto in = parse_e8_record(line);
    CHECK(format_e8_record(in) == line);
    CHECK(format_e8_record(parse_e8_record(format_e8_record(in))) == line);
    const std::string tits = "gamma3=-1,-1,-1 phi3=-1,-1,-1 phi5=-1,-1,-1,-1,-1 field=R";
    CHECK(format_tits_record(parse_tits_record(tits)) == tits);
  }

  TEST_CASE("non-canonical input is reduced") {
    const auto in = parse_e8_record("c=12 q4=1,1 q3=1,1 q2=4,8 q1=-1,-1");
    CHECK(in.c == 3);
    CHECK(in.q[1].a() == 1);
    CHECK(in.q[1].b() == 2);
    CHECK(in.field == Field::Q);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_WITH(parse_e8_record("q1=0,1 q2=1,1 q3=1,1 q4=1,1 c=1"), doctest::Contains("zero symbol entry"));
    CHECK_THROWS_WITH(parse_e8_record("q1=1,1 q2=1,1 q3=1,1 c=1"), doctest::Contains("missing field q4"));
    CHECK_THROWS_WITH(parse_e8_record("q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=1 x=2"), doctest::Contains("unknown field"));
    CHECK_THROWS(parse_e8_record("q1=1 q2=1,1 q3=1,1 q4=1,1 c=1"));
    CHECK_THROWS(parse_e8_record("q1=a,1 q2=1,1 q3=1,1 q4=1,1 c=1"));
    CHECK_THROWS(parse_e8_record("q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=1 field=C"));
    CHECK_THROWS(parse_tits_record("gamma3=1,1,1 phi3=1,1,1 phi5=2,1,1,1,1"));
  }

  TEST_CASE("batch lines are independent and numbered") {
    std::istringstream in(
        "# header\n"
        "q1=-1,-1 q2=1,1 q3=1,1 q4=1,1 c=-1 field=R\n"
        "\n"
        "q1=0,1 q2=1,1 q3=1,1 q4=1,1 c=-1\n"
        "q1=-1,-1 q2=-1,-1 q3=-1,-1 q4=-1,-1 c=-1 field=R\n");
    const auto lines = read_e8_batch(in);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].line == 2);
    CHECK(std::holds_alternative<E8Input>(lines[0].value));
    CHECK(lines[1].line == 4);
    REQUIRE(std::holds_alternative<std::string>(lines[1].value));
    CHECK(std::get<std::string>(lines[1].value).find("line 4") == 0);
    CHECK(std::holds_alternative<E8Input>(lines[2].value));
  }

  TEST_CASE("JSON keys and stability") {
    const auto rep = killing_report(parse_e8_record("q1=-1,-1 q2=-1,-1 q3=-1,-1 q4=-1,-1 c=-1 field=R"));
    const auto j = to_json(rep);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"redkill", "kappa", "kappa_i_level", "rost_zero", "signature", "real_class",
                                           "index_hint"});
    CHECK(j["signature"] == -248);
    CHECK(j["real_class"] == "compact");
    CHECK(j.dump() == to_json(killing_report(parse_e8_record("q1=-1,-1 q2=-1,-1 q3=-1,-1 q4=-1,-1 c=-1 field=R"))).dump());
  }
}
