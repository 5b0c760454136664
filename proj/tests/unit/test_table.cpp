#include <doctest.h>

#include <sstream>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

using namespace refclass;

TEST_CASE("delimiter detection and quoting") {
  std::istringstream tsv("\xEF\xBB\xBF" "a\tb\r\n1\t2\n\n3\t4\n");
  TableReader t(tsv, "tsv");
  CHECK(t.delimiter() == '\t');
  REQUIRE(t.next());
  CHECK(t.field(t.column("b")) == "2");
  REQUIRE(t.next());
  CHECK(t.field(0) == "3");
  CHECK_FALSE(t.next());

  std::istringstream csv("id,name\nx,\"a, \"\"b\"\"\"\n");
  TableReader c(csv, "csv");
  REQUIRE(c.next());
  CHECK(c.field(1) == "a, \"b\"");

  std::istringstream semi("id;v\n1;2\n");
  CHECK(TableReader(semi, "semi").delimiter() == ';');
}

TEST_CASE("malformed rows and missing columns") {
  std::istringstream in("a\tb\n1\n");
  TableReader t(in, "bad");
  CHECK_THROWS_AS(t.next(), Error);
  std::istringstream in2("a\tb\n");
  TableReader t2(in2, "x");
  CHECK_THROWS_AS(t2.column("c"), Error);
}

TEST_CASE("writer and number formatting") {
  std::ostringstream out;
  TableWriter w(out, {"a", "b", "c"});
  w.cell("x").cell(0.1).cell(3).end_row();
  CHECK(out.str() == "a\tb\tc\nx\t0.1\t3\n");
  CHECK_THROWS_AS(w.cell("tab\there"), Error);
  CHECK(parse_double(format_double(1.0 / 3), "v") == 1.0 / 3);
  CHECK(parse_integer(" 42 ", "v") == 42);
  CHECK_THROWS_AS(parse_double("1.5x", "v"), Error);
}
