#include <string>
#include <vector>

#include "test_support.hpp"

using multimom::csv_field;
using multimom::parse_double;
using multimom::parse_int_list;
using multimom::parse_int64;
using multimom::parse_range;
using multimom::parse_rational;
using multimom::parse_scalar_list;
using multimom::split;

TEST_CASE("split") {
  CHECK(split("a,b,c", ',') == std::vector<std::string>{"a", "b", "c"});
  CHECK(split("a", ',') == std::vector<std::string>{"a"});
  CHECK(split("", ',') == std::vector<std::string>{""});
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("parse_int64") {
  CHECK(parse_int64("42") == 42);
  CHECK(parse_int64("-7") == -7);
  CHECK_THROWS_AS(parse_int64("4x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int64(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_int64("1.5"), std::invalid_argument);
}

TEST_CASE("parse_range") {
  CHECK(parse_range("5") == std::pair<std::int64_t, std::int64_t>(5, 5));
  CHECK(parse_range("1..6") == std::pair<std::int64_t, std::int64_t>(1, 6));
  CHECK_THROWS_AS(parse_range("1..x"), std::invalid_argument);
}

TEST_CASE("parse_rational round-trips the wire format") {
  CHECK(parse_rational("1/2") == Q(1, 2));
  CHECK(parse_rational("-3/9") == Q(-1, 3));  // reduced
  CHECK(parse_rational("7") == Q(7));
  CHECK(parse_rational("0") == Q(0));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  for (const auto& v : {Q(1, 2), Q(-22, 7), Q(0), Q(123456789, 987654321), Q(5)}) {
    CHECK(parse_rational(RT::str(v)) == v);
  }
}

TEST_CASE("rational str uses p/q in lowest terms") {
  CHECK(RT::str(Q(1, 2)) == "1/2");
  CHECK(RT::str(Q(2, 4)) == "1/2");
  CHECK(RT::str(Q(-1, 4)) == "-1/4");
  CHECK(RT::str(Q(6, 3)) == "2");
  CHECK(RT::str(Q(0)) == "0");
}

TEST_CASE("parse_double accepts decimals and fraction syntax") {
  CHECK(parse_double("0.5") == 0.5);
  CHECK(parse_double("1/2") == 0.5);
  CHECK(parse_double("1/5") == 0.2);
  CHECK(parse_double("-3") == -3.0);
  CHECK_THROWS_AS(parse_double("x"), std::invalid_argument);
}

TEST_CASE("double str is shortest round-trip form") {
  using DT = multimom::scalar_traits<double>;
  CHECK(DT::str(0.5) == "0.5");
  for (double v : {0.1, 1.0 / 3.0, 1e-20, 12345.678, -0.25}) {
    CHECK(parse_double(DT::str(v)) == v);
  }
}

TEST_CASE("parse_scalar_list in both modes") {
  const auto xs = parse_scalar_list<Rational>("1/2,1/4");
  REQUIRE(xs.size() == 2);
  CHECK(xs[0] == Q(1, 2));
  CHECK(xs[1] == Q(1, 4));

  const auto ds = parse_scalar_list<double>("1/2,0.25");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == 0.5);
  CHECK(ds[1] == 0.25);

  CHECK(parse_int_list("1,1,2,2") == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("csv_field quotes only when needed") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}
