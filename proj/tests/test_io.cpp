#include <sstream>

#include "doctest.h"
#include "tspread/error.hpp"
#include "tspread/io.hpp"

using namespace tspread;

TEST_SUITE("io") {

TEST_CASE("monomial syntax") {
  const Monomial u{2, 5, 9, 14};
  CHECK(io::parse_monomial("2,5,9,14") == u);
  CHECK(io::parse_monomial(" 2, 5, 9, 14 ") == u);
  CHECK(io::parse_monomial("x_2*x_5*x_9*x_14") == u);
  CHECK(io::parse_monomial("x_2x_5x_9x_14") == u);
  CHECK(io::parse_monomial("[2,5,9,14]") == u);
  CHECK(io::parse_monomial("()").is_one());
  CHECK_THROWS_AS(io::parse_monomial("2,,5"), Error);
  CHECK_THROWS_AS(io::parse_monomial("5,2"), Error);
  CHECK_THROWS_AS(io::parse_monomial("y_2"), Error);
  CHECK_THROWS_AS(io::parse_monomial("x_2*"), Error);
}

TEST_CASE("monomial output") {
  const Monomial u{2, 5, 9, 14};
  CHECK(io::format_monomial(u) == "2,5,9,14");
  CHECK(io::format_monomial_product(u) == "x_2x_5x_9x_14");
  CHECK(io::format_monomial(Monomial()) == "()");
  CHECK(io::format_monomial_product(Monomial()) == "1");
  CHECK(io::parse_monomial(io::format_monomial(Monomial())).is_one());
}

TEST_CASE("json") {
  const Monomial u{2, 5, 9, 14};
  CHECK(io::to_json(u).dump() == "[2,5,9,14]");
  CHECK(io::monomial_from_json(io::to_json(u)) == u);
  CHECK_THROWS_AS(io::monomial_from_json(nlohmann::json::parse("[\"a\"]")), Error);
  const std::vector<Monomial> l{u, Monomial()};
  CHECK(io::to_json(l).dump() == "[[2,5,9,14],[]]");
}

TEST_CASE("ideal files") {
  std::istringstream in("# comment\n1,3,5\n\n  x_2*x_4\n");
  auto gens = io::read_monomials(in);
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == Monomial{2, 4});
}

TEST_CASE("integer lists") {
  const std::vector<BigInt> f{1, 8, 21, 10, 0};
  CHECK(io::parse_integer_list("{1, 8, 21, 10, 0}") == f);
  CHECK(io::parse_integer_list("1,8,21,10,0") == f);
  CHECK(io::format_braced(f) == "{1, 8, 21, 10, 0}");
  CHECK_THROWS_AS(io::parse_integer_list("1,a"), Error);
}

}  // TEST_SUITE
