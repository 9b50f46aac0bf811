#include <doctest.h>

#include <sstream>

#include "relrank/io.hpp"

using namespace relrank;

TEST_CASE("subset formatting and parsing round-trip") {
  GroundSet e({"a", "b", "c"});
  CHECK(format_subset(e, 0b101) == "{a,c}");
  CHECK(format_subset(e, 0) == "{}");
  CHECK(parse_subset(e, "{a,c}") == 0b101);
  CHECK(parse_subset(e, "{}") == 0);
  CHECK_THROWS_AS(parse_subset(e, "{z}"), UnknownLabelError);
  CHECK_THROWS_AS(parse_subset(e, "a,c"), ParseError);
  for (Mask m = 0; m <= e.full_mask(); ++m) {
    CHECK(parse_subset(e, format_subset(e, m)) == m);
  }
}

TEST_CASE("uniform matroid spec") {
  std::istringstream in(
      "name: u24\n"
      "elements: a b c d\n"
      "representation: uniform\n"
      "k: 2\n");
  MatroidSpec spec = parse_matroid_spec(in);
  CHECK(spec.name == "u24");
  REQUIRE(spec.ok());
  CHECK(spec.matroid().same_family(uniform(2, 4)));
  CHECK(spec.matroid().ground().label(0) == "a");
}

TEST_CASE("explicit matroid spec carries axiom failures") {
  std::istringstream in(
      "elements: a b\n"
      "representation: explicit\n"
      "independent: {} {a,b}\n");
  MatroidSpec spec = parse_matroid_spec(in);
  CHECK_FALSE(spec.ok());
  REQUIRE_FALSE(spec.check.report.violations.empty());
  CHECK(spec.check.report.violations.front().message ==
        "I2 violation: {a,b} in family but {a} absent");
  CHECK_THROWS_AS(spec.matroid(), PreconditionError);
}

TEST_CASE("graphic and linear_gf2 specs") {
  std::istringstream g(
      "elements: e0 e1 e2\n"
      "representation: graphic\n"
      "vertices: 3\n"
      "edges: 0-1 1-2 2-0\n");
  CHECK(parse_matroid_spec(g).matroid().same_family(uniform(2, 3)));

  std::istringstream l(
      "elements: c0 c1 c2\n"
      "representation: linear_gf2\n"
      "columns: 10 01 11\n");
  CHECK(parse_matroid_spec(l).matroid().same_family(uniform(2, 3)));
}

TEST_CASE("spec parse errors") {
  std::istringstream missing("elements: a\n");
  CHECK_THROWS_AS(parse_matroid_spec(missing), ParseError);
  std::istringstream bad_repr(
      "elements: a\n"
      "representation: magic\n");
  CHECK_THROWS_AS(parse_matroid_spec(bad_repr), ParseError);
  std::istringstream no_colon("elements a\n");
  CHECK_THROWS_AS(parse_matroid_spec(no_colon), ParseError);
}

TEST_CASE("table spec round-trips through write_table_spec") {
  RelRankTable t = table_from_matroid(uniform(1, 2));
  std::ostringstream out;
  write_table_spec(out, t);
  std::istringstream in(out.str());
  RelRankTable parsed = parse_table_spec(in);
  CHECK(parsed == t);
}

TEST_CASE("table spec validation") {
  std::istringstream incomplete(
      "elements: a\n"
      "entry: {a} {} 1\n");
  CHECK_THROWS_AS(parse_table_spec(incomplete), ParseError);

  std::istringstream not_nested(
      "elements: a\n"
      "entry: {} {a} 1\n"
      "entry: {a} {a} 0\n"
      "entry: {a} {} 1\n");
  CHECK_THROWS_AS(parse_table_spec(not_nested), ParseError);

  std::istringstream dup(
      "elements: a\n"
      "entry: {} {} 0\n"
      "entry: {} {} 0\n"
      "entry: {a} {a} 0\n"
      "entry: {a} {} 1\n");
  CHECK_THROWS_AS(parse_table_spec(dup), ParseError);

  std::istringstream inf_value(
      "elements: a\n"
      "entry: {} {} 0\n"
      "entry: {a} {a} 0\n"
      "entry: {a} {} inf\n");
  RelRankTable t = parse_table_spec(inf_value);
  CHECK(t.at(0b1, 0).is_infinite());
}

TEST_CASE("format_violation is stable") {
  RelRankTable t = table_from_matroid(uniform(1, 2));
  t.set(0b11, 0b00, ExtendedNat(2));
  RelRankReport rep = check_axioms(t);
  const RelRankViolation* w = rep.first(RankAxiom::R3);
  REQUIRE(w != nullptr);
  std::string line = format_violation(t.ground(), *w);
  CHECK(line.find("R3 violation:") == 0);
  CHECK(line.find("observed") != std::string::npos);
}
