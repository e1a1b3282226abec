#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace tstd;
using tt::P;

namespace {

WeightVectorW W(std::vector<long> w) {
  std::vector<mpq_class> q;
  for (long v : w) q.emplace_back(v);
  return WeightVectorW(std::move(q));
}

bool same_x_ideal(const std::vector<PolyVector>& a, const std::vector<PolyVector>& b,
                  const CtxPtr& xctx, const OrdPtr& xord) {
  GeneratorSet ga = make_generator_set(a, xord);
  GeneratorSet gb = make_generator_set(b, xord);
  for (const auto& f : ga.gens)
    if (!membership(f, gb)) return false;
  for (const auto& f : gb.gens)
    if (!membership(f, ga)) return false;
  return true;
}

}  // namespace

TEST_CASE("w-degree, order and initial forms") {
  CtxPtr ctx = tt::ctx_tx();
  OrdPtr lex = compile("lex", ctx);
  PolyVector f = P(ctx, lex, "x^2 + t*x + t^3");
  SECTION("w = (-1,-1)") {
    WeightVectorW w = W({-1, -1});
    CHECK(ord_w(f, w) == mpq_class(-2));
    CHECK(in_w(f, w) == P(ctx, lex, "x^2 + t*x"));
  }
  SECTION("w = (-1,1)") {
    WeightVectorW w = W({-1, 1});
    CHECK(in_w(f, w) == P(ctx, lex, "x^2"));
  }
  SECTION("monomials are their own initial form") {
    WeightVectorW w = W({-1, 1});
    PolyVector m = P(ctx, lex, "t^2*x");
    CHECK(in_w(m, w) == m);
  }
  SECTION("zero is an error") {
    CHECK_THROWS_AS(ord_w(zero_poly(ctx, lex), W({-1, 0})), MathError);
  }
  SECTION("w_0 must be negative") { CHECK_THROWS_AS(W({0, 1}), MathError); }
}

TEST_CASE("t-initial forms") {
  CtxPtr ctx = tt::ctx_tx();
  OrdPtr lex = compile("lex", ctx);
  CHECK(print_poly(t_initial_form(P(ctx, lex, "x^2 + t*x + t^3"), W({-1, -1}))) == "x^2 + x");
  CtxPtr c2 = tt::ctx_txy();
  OrdPtr l2 = compile("lex", c2);
  CHECK(print_poly(t_initial_form(P(c2, l2, "x + y + t"), W({-1, 0, 0}))) == "x + y");
  CHECK(print_poly(t_initial_form(P(c2, l2, "x + y + t"), W({-1, -1, 0}))) == "y");
}

TEST_CASE("t-initial ideals") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  OrderingSpec drl = OrderingSpec::degrevlex();
  SECTION("single generator") {
    TInitialResult r = t_initial_ideal({P(ctx, lex, "x + y + t")}, W({-1, 0, 0}), drl, ctx);
    REQUIRE(r.gens.size() == 1);
    CHECK(print_poly(r.gens[0]) == "x + y");
  }
  SECTION("std fixture") {
    TInitialResult r =
        t_initial_ideal({P(ctx, lex, "x - t"), P(ctx, lex, "y - t")}, W({-1, 0, 0}), drl, ctx);
    CHECK(same_x_ideal(r.gens, {parse_poly(r.xctx, r.xord, "x"), parse_poly(r.xctx, r.xord, "y")},
                       r.xctx, r.xord));
  }
  SECTION("<t> gives the unit ideal") {
    CtxPtr c1 = tt::ctx_tx();
    OrdPtr l1 = compile("lex", c1);
    TInitialResult r = t_initial_ideal({P(c1, l1, "t")}, W({-1, 0}), drl, c1);
    REQUIRE(r.gens.size() == 1);
    CHECK(print_poly(r.gens[0]) == "1");
  }
}

TEST_CASE("multiplicativity of initial forms") {
  std::mt19937 rng(31415);
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  for (int it = 0; it < 200; ++it) {
    PolyVector f = tt::random_nonzero_poly(rng, ctx, lex);
    PolyVector g = tt::random_nonzero_poly(rng, ctx, lex);
    long w1 = -(1 + static_cast<long>(rng() % 3));
    long w2 = static_cast<long>(rng() % 5) - 2;
    long w3 = static_cast<long>(rng() % 5) - 2;
    WeightVectorW w = W({w1, w2, w3});
    CHECK(in_w(mul(f, g), w) == mul(in_w(f, w), in_w(g, w)));
    PolyVector tf = t_initial_form(f, w);
    PolyVector tg = t_initial_form(g, w);
    PolyVector tfg = t_initial_form(mul(f, g), w);
    CHECK(tfg == mul(tf.under(tfg.ordering()), tg.under(tfg.ordering())));
  }
}

TEST_CASE("units have initial form 1") {
  std::mt19937 rng(999);
  CtxPtr ctx = tt::ctx_txy();
  WeightVectorW w = W({-1, 1, 0});
  OrdPtr ord = tinitial_ordering(w.w, OrderingSpec::degrevlex(), ctx);
  for (int it = 0; it < 40; ++it) {
    PolyVector f = tt::random_nonzero_poly(rng, ctx, ord);
    std::vector<PolyVector> gens = {tt::random_nonzero_poly(rng, ctx, ord)};
    DivisionResult d = weak_division(f, gens, ord);
    PolyVector u_in = in_w(d.u, w);
    REQUIRE(u_in.term_count() == 1);
    CHECK(u_in.leading_coefficient().is_one());
    CHECK(u_in.leading_monomial() == mono_one(*ctx));
  }
}

TEST_CASE("initial forms of ideal members stay in the initial ideal") {
  std::mt19937 rng(777);
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  OrderingSpec drl = OrderingSpec::degrevlex();
  std::vector<PolyVector> gens = {P(ctx, lex, "x - t"), P(ctx, lex, "y - t*x")};
  WeightVectorW w = W({-1, 0, 0});
  TInitialResult tin = t_initial_ideal(gens, w, drl, ctx);
  GeneratorSet tin_set = make_generator_set(tin.gens, tin.xord);
  tt::RandomOpts o;
  o.max_deg_x = 2;
  o.max_deg_t = 1;
  o.max_terms = 2;
  for (int it = 0; it < 30; ++it) {
    PolyVector h = zero_poly(ctx, lex);
    for (const auto& g : gens) h = add(h, mul(tt::random_poly(rng, ctx, lex, o), g));
    if (h.is_zero()) continue;
    PolyVector tin_h = t_initial_form(h, w, tin.xctx, tin.xord);
    CHECK(membership(tin_h, tin_set));
  }
}

TEST_CASE("rescale") {
  CtxPtr ctx = tt::ctx_tx();
  OrdPtr lex = compile("lex", ctx);
  PolyVector f = P(ctx, lex, "t + x");
  PolyVector f2 = rescale(f, 2);
  CHECK(f2.context()->denom == 2);
  // t-exponent doubles, value unchanged as a Puiseux object
  CHECK(print_poly(f2) == "x + t^2");
  SECTION("t-initial forms are rescale-invariant") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 100; ++it) {
      PolyVector g = tt::random_nonzero_poly(rng, ctx, lex);
      WeightVectorW w = W({-2, 1});
      PolyVector a = t_initial_form(g, w);
      PolyVector b = t_initial_form(rescale(g, 3), w);
      CHECK(a == b.under(a.ordering()));
    }
  }
}

TEST_CASE("t-initial ideals are stable under rescaling") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  OrderingSpec drl = OrderingSpec::degrevlex();
  std::vector<std::vector<std::string>> fixtures = {
      {"x - t", "y - t"}, {"x + y + t"}, {"t*x - y"}, {"x^2 + t*y"}};
  WeightVectorW w = W({-1, -1, 0});
  for (const auto& fx : fixtures) {
    std::vector<PolyVector> gens, scaled;
    for (const auto& s : fx) {
      gens.push_back(P(ctx, lex, s));
      scaled.push_back(rescale(gens.back(), 2));
    }
    TInitialResult a = t_initial_ideal(gens, w, drl, ctx);
    TInitialResult b = t_initial_ideal(scaled, w, drl, scaled.front().context());
    CHECK(same_x_ideal(a.gens, b.gens, a.xctx, a.xord));
    // unit detection agrees across denominators
    GeneratorSet ga = make_generator_set(a.gens, a.xord);
    GeneratorSet gb = make_generator_set(b.gens, a.xord);
    PolyVector one = parse_poly(a.xctx, a.xord, "1");
    CHECK(membership(one, ga) == membership(one, gb));
  }
}

TEST_CASE("saturation bridge") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  OrderingSpec drl = OrderingSpec::degrevlex();
  OrderingSpec inner = OrderingSpec::lex();
  std::vector<std::vector<std::string>> fixtures = {
      {"t*x"}, {"t*x - t*y", "y^2"}, {"x + y + t"}, {"t^2*y"}};
  WeightVectorW w = W({-1, 0, 0});
  for (const auto& fx : fixtures) {
    std::vector<PolyVector> gens;
    for (const auto& s : fx) gens.push_back(P(ctx, lex, s));
    GeneratorSet sat = saturate(gens, P(ctx, lex, "t"), inner, ctx);
    TInitialResult a = t_initial_ideal(gens, w, drl, ctx);
    TInitialResult b = t_initial_ideal(sat.gens, w, drl, ctx);
    CHECK(same_x_ideal(a.gens, b.gens, a.xctx, a.xord));
  }
}
