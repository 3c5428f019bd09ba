#include <doctest.h>

#include "braids/word.hpp"

using namespace braids;

TEST_CASE("word grammar: every token kind") {
  auto p = parse_word("n=5 s3 s3' x2 a(4,2) a'(4,2) b(4,2) e2 t t'");
  REQUIRE(p.n == 5);
  REQUIRE(p.tokens.size() == 9);
  CHECK(p.tokens[0] == Token{Gen::sigma, 3, 0, 1});
  CHECK(p.tokens[1] == Token{Gen::sigma, 3, 0, -1});
  CHECK(p.tokens[2] == Token{Gen::x, 2, 0, 1});
  CHECK(p.tokens[3] == Token{Gen::a, 4, 2, 1});
  CHECK(p.tokens[4] == Token{Gen::a, 4, 2, -1});
  CHECK(p.tokens[5] == Token{Gen::b, 4, 2, 1});
  CHECK(p.tokens[6] == Token{Gen::eps, 2, 0, 1});
  CHECK(p.tokens[7] == Token{Gen::tau, 0, 0, 1});
  CHECK(p.tokens[8] == Token{Gen::tau, 0, 0, -1});
  CHECK(format_tokens(p.tokens) == "s3 s3' x2 a(4,2) a'(4,2) b(4,2) e2 t t'");
}

TEST_CASE("word grammar: empty input and header only") {
  CHECK(parse_word("").tokens.empty());
  auto p = parse_word("  n=3  ");
  CHECK(p.n == 3);
  CHECK(p.tokens.empty());
}

TEST_CASE("word grammar: errors name the token and its column") {
  try {
    parse_word("s1 q7 s2");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.token() == "q7");
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_word("b'(2,1)"), ParseError);
  CHECK_THROWS_AS(parse_word("a(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_word("x2'"), ParseError);
  CHECK_THROWS_AS(parse_word("s0"), ParseError);
  CHECK_THROWS_AS(parse_word("s1 n=3"), ParseError);
  CHECK_THROWS_AS(parse_word("a(3,)"), ParseError);
}

TEST_CASE("min_strands covers every index") {
  CHECK(min_strands(parse_word("s3").tokens) == 4);
  CHECK(min_strands(parse_word("a(5,1) e2").tokens) == 5);
  CHECK(min_strands(parse_word("").tokens) == 1);
}
