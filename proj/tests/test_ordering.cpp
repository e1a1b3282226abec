#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace tstd;
using tt::ctx_txy;

namespace {

Monomial mono(const CtxPtr& ctx, std::vector<int> t, std::vector<int> x, int comp = 1) {
  return Monomial{std::move(t), std::move(x), comp};
}

}  // namespace

TEST_CASE("t-local lex") {
  CtxPtr ctx = ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  // x*y > x, and t < 1
  CHECK(lex->cmp(mono(ctx, {0}, {1, 1}), mono(ctx, {0}, {1, 0})) > 0);
  CHECK(lex->cmp(mono(ctx, {1}, {0, 0}), mono(ctx, {0}, {0, 0})) < 0);
  // fewer t's win at equal x-part
  CHECK(lex->cmp(mono(ctx, {1}, {1, 0}), mono(ctx, {2}, {1, 0})) > 0);
  CHECK(lex->cmp(mono(ctx, {1}, {1, 0}), mono(ctx, {1}, {1, 0})) == 0);
  CHECK(lex->t_local());
}

TEST_CASE("weight ordering") {
  CtxPtr ctx = tt::ctx_tx();
  OrdPtr ws = compile("ws(-1,0) lex", ctx);
  // x > t*x^2 since 0 > -1
  CHECK(ws->cmp(mono(ctx, {0}, {1}), mono(ctx, {1}, {2})) > 0);
  SECTION("positive t-weight is rejected at compile") {
    CHECK_THROWS_AS(compile("ws(1,0) lex", ctx), OrderingError);
  }
  SECTION("wrong arity is rejected") {
    CHECK_THROWS_AS(compile("ws(-1,0,0,0) lex", ctx), OrderingError);
  }
  SECTION("bare ws without tiebreak is rejected") {
    CHECK_THROWS_AS(compile("ws(-1,0)", ctx), OrderingError);
  }
}

TEST_CASE("module extensions") {
  CtxPtr ctx = make_context(FieldSpec::rationals(), {"t"}, {"x", "y"}, 2);
  OrdPtr comp_first = compile("module(c, lex)", ctx);
  OrdPtr mono_first = compile("module(lex, c)", ctx);
  Monomial x_e1 = mono(ctx, {0}, {1, 0}, 1);
  Monomial x3_e2 = mono(ctx, {0}, {3, 0}, 2);
  // component priority: x*e_1 > x^3*e_2 because 1 < 2
  CHECK(comp_first->cmp(x_e1, x3_e2) > 0);
  CHECK(mono_first->cmp(x_e1, x3_e2) < 0);
  // ties inside one component reduce to the base ordering
  CHECK(mono_first->cmp(mono(ctx, {0}, {1, 0}, 1), mono(ctx, {0}, {1, 0}, 2)) > 0);
}

TEST_CASE("module weight vector of length m+n+s") {
  CtxPtr ctx = make_context(FieldSpec::rationals(), {"t"}, {"x"}, 2);
  OrdPtr ord = compile("ws(-1,0,0,-5) lex", ctx);
  // e_2 carries weight -5, so x*e_1 > x^3*e_2
  CHECK(ord->cmp(mono(ctx, {0}, {1}, 1), mono(ctx, {0}, {3}, 2)) > 0);
}

TEST_CASE("homogenized ordering") {
  CtxPtr ctx = tt::ctx_tx();
  OrdPtr lex = compile("lex", ctx);
  OrdPtr h = homogenized(lex);
  CtxPtr hctx = h->context();
  REQUIRE(hctx->xvars == 2);  // @h then x
  // x0*x vs x^2: degrees tie, base lex prefers x^2
  CHECK(h->cmp(mono(hctx, {0}, {1, 1}), mono(hctx, {0}, {0, 2})) < 0);
  // x0^2 vs x: degree decides
  CHECK(h->cmp(mono(hctx, {0}, {2, 0}), mono(hctx, {0}, {0, 1})) > 0);
  CHECK(h->cmp(mono(hctx, {0}, {1, 1}), mono(hctx, {0}, {1, 1})) == 0);
  CHECK(h->t_local());
}

TEST_CASE("schreyer ordering") {
  CtxPtr ctx = ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  // leads x*e_1 and y*e_1
  Monomial lead1 = mono(ctx, {0}, {1, 0});
  Monomial lead2 = mono(ctx, {0}, {0, 1});
  OrdPtr s = schreyer(lex, {lead1, lead2});
  CtxPtr sctx = s->context();
  REQUIRE(sctx->rank == 2);
  // eps_1 vs eps_2 compares x vs y
  CHECK(s->cmp(mono(sctx, {0}, {0, 0}, 1), mono(sctx, {0}, {0, 0}, 2)) > 0);
  // y*eps_1 vs x*eps_2: products x*y tie, index 1 wins
  CHECK(s->cmp(mono(sctx, {0}, {0, 1}, 1), mono(sctx, {0}, {1, 0}, 2)) > 0);
  // identical products, smaller index is larger
  OrdPtr s2 = schreyer(lex, {lead1, lead1, lead1, lead1, lead1});
  CtxPtr sctx2 = s2->context();
  CHECK(s2->cmp(mono(sctx2, {0}, {0, 0}, 2), mono(sctx2, {0}, {0, 0}, 5)) > 0);
  CHECK(s2->cmp(mono(sctx2, {0}, {1, 0}, 3), mono(sctx2, {0}, {1, 0}, 3)) == 0);
}

TEST_CASE("t-initial ordering") {
  CtxPtr ctx = tt::ctx_tx();
  SECTION("w = (-1,0): x beats t") {
    OrdPtr ord = compile("tw(-1,0 ; degrevlex)", ctx);
    CHECK(ord->cmp(mono(ctx, {0}, {1}), mono(ctx, {1}, {0})) > 0);
  }
  SECTION("w = (-1,-1): tie resolved by the global tiebreak") {
    CtxPtr c2 = ctx_txy();
    OrdPtr ord = compile("tw(-1,-1,-1 ; lex)", c2);
    // x^2 vs t*x: weights -2 = -2, lex says x^2 bigger
    CHECK(ord->cmp(mono(c2, {0}, {2, 0}), mono(c2, {1}, {1, 0})) > 0);
  }
  SECTION("denominator scales the t-weight") {
    CtxPtr c2 = make_context(FieldSpec::rationals(), {"t"}, {"x"}, 1, 2);
    OrdPtr ord = compile("tw(-1,0 ; lex)", c2);
    // alpha = 1 means t^(1/2): weight -1/2, so t^(1/2) > t at denom 2
    CHECK(ord->cmp(mono(c2, {1}, {0}), mono(c2, {2}, {0})) > 0);
  }
  SECTION("w_0 >= 0 is rejected") {
    CHECK_THROWS_AS(compile("tw(0,1 ; lex)", ctx), OrderingError);
  }
  SECTION("non-global tiebreak is rejected") {
    CHECK_THROWS_AS(compile("tw(-1,0 ; ws(0,-1) lex)", ctx), OrderingError);
  }
}

TEST_CASE("ordering properties on random monomials") {
  std::mt19937 rng(7);
  CtxPtr ctx = make_context(FieldSpec::rationals(), {"t", "u"}, {"x", "y"}, 2);
  std::vector<OrdPtr> ords = {
      compile("lex", ctx),
      compile("degrevlex", ctx),
      compile("ws(-1,-2,1,0) lex", ctx),
      compile("module(c, lex)", ctx),
      compile("block(x | lex)", ctx),
  };
  tt::RandomOpts o;
  auto rand_mono = [&] { return tt::random_monomial(rng, *ctx, o); };
  for (const auto& ord : ords) {
    for (int it = 0; it < 300; ++it) {
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      // antisymmetry and totality
      CHECK(ord->cmp(a, b) == -ord->cmp(b, a));
      CHECK((ord->cmp(a, b) == 0) == (a == b));
      // transitivity
      if (ord->cmp(a, b) >= 0 && ord->cmp(b, c) >= 0) CHECK(ord->cmp(a, c) >= 0);
      // semigroup compatibility
      Monomial u = rand_mono();
      u.comp = 1;
      Monomial ua = mono_mul(a, u), ub = mono_mul(b, u);
      CHECK(ord->cmp(a, b) == ord->cmp(ua, ub));
      // module compatibility: p > q iff p*e_i > q*e_i for every i
      Monomial a1 = a, b1 = b;
      a1.comp = b1.comp = 1;
      Monomial a2 = a, b2 = b;
      a2.comp = b2.comp = 2;
      CHECK(ord->cmp(a1, b1) == ord->cmp(a2, b2));
    }
  }
}

TEST_CASE("restriction stability of the t-initial ordering") {
  std::mt19937 rng(11);
  long n = 3, m = 2;
  CtxPtr cn = make_context(FieldSpec::rationals(), {"t"}, {"x", "y"}, 1, n);
  CtxPtr cnm = make_context(FieldSpec::rationals(), {"t"}, {"x", "y"}, 1, n * m);
  OrdPtr on = compile("tw(-2/3,1,-1 ; degrevlex)", cn);
  OrdPtr onm = compile("tw(-2/3,1,-1 ; degrevlex)", cnm);
  for (int it = 0; it < 500; ++it) {
    Monomial a = tt::random_monomial(rng, *cn, {});
    Monomial b = tt::random_monomial(rng, *cn, {});
    Monomial am = a, bm = b;
    am.t[0] *= m;
    bm.t[0] *= m;
    CHECK(on->cmp(a, b) == onm->cmp(am, bm));
  }
}

TEST_CASE("is_t_local vacuous for m = 0") {
  CtxPtr ctx = make_context(FieldSpec::rationals(), {}, {"x", "y"});
  CHECK(compile("lex", ctx)->t_local());
  CHECK(compile("degrevlex", ctx)->t_local());
}
