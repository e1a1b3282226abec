#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace tstd;

namespace {

const char* kMinimal = R"(ring {
  field QQ
  tvars t
  xvars x y
}
order lex
ideal I {
  x - t
}
)";

}  // namespace

TEST_CASE("minimal session parses") {
  Session s = parse_session(kMinimal);
  CHECK(s.ctx->tvars == 1);
  CHECK(s.ctx->xvars == 2);
  CHECK(s.ctx->rank == 1);
  CHECK(s.ctx->denom == 1);
  REQUIRE(s.ideals.size() == 1);
  CHECK(s.ideal("I").size() == 1);
  CHECK(s.ideal("I")[0] == parse_poly(s.ctx, s.ord, "x - t"));
  CHECK_THROWS_AS(s.ideal("missing"), MathError);
}

TEST_CASE("session with prime field, rank and denom") {
  Session s = parse_session(R"(ring {
  field F 32003
  tvars t
  xvars x
  rank 2
  denom 3
}
order module(lex, c)
ideal J {
  [x, t]
  x*gen(2)
}
)");
  CHECK(s.ctx->field.characteristic == 32003);
  CHECK(s.ctx->rank == 2);
  CHECK(s.ctx->denom == 3);
  CHECK(s.ideal("J").size() == 2);
}

TEST_CASE("session errors carry positions") {
  SECTION("unknown key") {
    try {
      parse_session("ring {\n  field QQ\n  xvars x\n  frobnicate 3\n}\norder lex\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }
  SECTION("duplicate variable name") {
    CHECK_THROWS_AS(parse_session("ring {\n field QQ\n tvars t\n xvars t\n}\norder lex\n"),
                    ParseError);
  }
  SECTION("weight vector of wrong length") {
    CHECK_THROWS_AS(
        parse_session("ring {\n field QQ\n tvars t\n xvars x\n}\norder ws(-1) lex\n"),
        ParseError);
  }
  SECTION("non-t-local order") {
    CHECK_THROWS_AS(
        parse_session("ring {\n field QQ\n tvars t\n xvars x\n}\norder ws(1,1) lex\n"),
        ParseError);
  }
  SECTION("bad polynomial reports its line") {
    try {
      parse_session("ring {\n field QQ\n tvars t\n xvars x\n}\norder lex\nideal I {\n x + z\n}\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 8);
    }
  }
  SECTION("unknown subkeys and missing blocks") {
    CHECK_THROWS_AS(parse_session("order lex\n"), ParseError);
    CHECK_THROWS_AS(parse_session("ring {\n field QQ\n xvars x\n}\n"), ParseError);
    CHECK_THROWS_AS(parse_session("bogus\n"), ParseError);
  }
}

TEST_CASE("print then parse is the identity on session polys") {
  Session s = parse_session(kMinimal);
  for (const auto& [name, gens] : s.ideals)
    for (const auto& g : gens) CHECK(parse_poly(s.ctx, s.ord, print_poly(g)) == g);
}
