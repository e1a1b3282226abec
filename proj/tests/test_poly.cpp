#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "testutil.hpp"

using namespace tstd;
using tt::P;

TEST_CASE("arithmetic basics") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  SECTION("cancellation") {
    CHECK(add(P(ctx, lex, "x + t"), P(ctx, lex, "-x")) == P(ctx, lex, "t"));
  }
  SECTION("hand-expanded product") {
    PolyVector lhs = sub(mul(P(ctx, lex, "y"), P(ctx, lex, "x - t")),
                         mul(P(ctx, lex, "x"), P(ctx, lex, "y - t")));
    CHECK(lhs == P(ctx, lex, "t*x - t*y"));
  }
  SECTION("additive identity") {
    PolyVector f = P(ctx, lex, "x^2 - 3/4*t*y + 1");
    CHECK(add(f, zero_poly(ctx, lex)) == f);
  }
  SECTION("context mismatch is an error") {
    CtxPtr other = tt::ctx_tx();
    OrdPtr olex = compile("lex", other);
    CHECK_THROWS_AS(add(P(ctx, lex, "x"), P(other, olex, "x")), MathError);
  }
}

TEST_CASE("leading data") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  SECTION("lex picks x^2") {
    PolyVector f = P(ctx, lex, "x^2 + t*y");
    auto ld = leading_data(f);
    REQUIRE(ld.lm.has_value());
    CHECK(ld.lm->x[0] == 2);
    CHECK(ld.tail == P(ctx, lex, "t*y"));
  }
  SECTION("t-local: t beats t^2") {
    PolyVector f = P(ctx, lex, "t + t^2");
    CHECK(f.leading_monomial().t[0] == 1);
  }
  SECTION("zero sentinel") {
    auto ld = leading_data(zero_poly(ctx, lex));
    CHECK(ld.lc.is_zero());
    CHECK_FALSE(ld.lm.has_value());
    CHECK_FALSE(ld.lt.has_value());
    CHECK(ld.tail.is_zero());
  }
}

TEST_CASE("x-degree and homogeneity") {
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  CHECK(deg_x(P(ctx, lex, "x^2 + t*x*y")) == 2);
  CHECK(is_x_homogeneous(P(ctx, lex, "x^2 + t*x*y")));
  CHECK(deg_x(P(ctx, lex, "x + t*x^2")) == 2);
  CHECK_FALSE(is_x_homogeneous(P(ctx, lex, "x + t*x^2")));
  CHECK(is_x_homogeneous(zero_poly(ctx, lex)));
  CHECK(deg_x(zero_poly(ctx, lex)) == -1);
}

TEST_CASE("leading data is multiplicative") {
  std::mt19937 rng(5);
  CtxPtr ctx = make_context(FieldSpec::prime_field(32003), {"t"}, {"x", "y"}, 2);
  for (const char* spec : {"lex", "degrevlex", "ws(-1,2,-1) lex"}) {
    OrdPtr ord = compile(spec, ctx);
    for (int it = 0; it < 200; ++it) {
      PolyVector f = tt::random_nonzero_poly(rng, ctx, ord);
      PolyVector g = tt::random_nonzero_poly(rng, ctx, ord);
      // force f scalar (component 1) so the product is defined
      std::vector<Term> ts;
      for (auto tm : f.terms()) {
        tm.m.comp = 1;
        ts.push_back(tm);
      }
      f = PolyVector::make(ctx, ord, ts);
      if (f.is_zero()) continue;
      PolyVector fg = mul(f, g);
      REQUIRE_FALSE(fg.is_zero());
      CHECK(fg.leading_monomial() == mono_mul(g.leading_monomial(), f.leading_monomial()));
      CHECK(fg.leading_coefficient() ==
            field_mul(ctx->field, f.leading_coefficient(), g.leading_coefficient()));
    }
  }
}

namespace {

// Dense map-based oracle for ring arithmetic over small exponent ranges.
using DenseKey = std::vector<int>;

std::map<DenseKey, Coeff> to_dense(const PolyVector& f) {
  std::map<DenseKey, Coeff> out;
  for (const auto& tm : f.terms()) {
    DenseKey k = tm.m.t;
    k.insert(k.end(), tm.m.x.begin(), tm.m.x.end());
    k.push_back(tm.m.comp);
    out[k] = tm.c;
  }
  return out;
}

std::map<DenseKey, Coeff> dense_add(const FieldSpec& fs, std::map<DenseKey, Coeff> a,
                                    const std::map<DenseKey, Coeff>& b) {
  for (const auto& [k, c] : b) {
    auto it = a.find(k);
    if (it == a.end())
      a[k] = c;
    else
      it->second = field_add(fs, it->second, c);
  }
  for (auto it = a.begin(); it != a.end();)
    it = it->second.is_zero() ? a.erase(it) : std::next(it);
  return a;
}

std::map<DenseKey, Coeff> dense_mul(const FieldSpec& fs, const std::map<DenseKey, Coeff>& a,
                                    const std::map<DenseKey, Coeff>& b) {
  std::map<DenseKey, Coeff> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      DenseKey k(ka.size());
      for (std::size_t i = 0; i + 1 < ka.size(); ++i) k[i] = ka[i] + kb[i];
      k.back() = kb.back();
      Coeff prod = field_mul(fs, ca, cb);
      auto it = out.find(k);
      if (it == out.end())
        out[k] = prod;
      else
        it->second = field_add(fs, it->second, prod);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("sparse arithmetic agrees with a dense oracle") {
  std::mt19937 rng(31);
  CtxPtr ctx = tt::ctx_txy();
  OrdPtr lex = compile("lex", ctx);
  tt::RandomOpts o;
  o.max_deg_x = 4;
  o.max_terms = 4;
  o.allow_zero = true;
  for (int it = 0; it < 300; ++it) {
    PolyVector f = tt::random_poly(rng, ctx, lex, o);
    PolyVector g = tt::random_poly(rng, ctx, lex, o);
    CHECK(to_dense(add(f, g)) == dense_add(ctx->field, to_dense(f), to_dense(g)));
    CHECK(to_dense(mul(f, g)) == dense_mul(ctx->field, to_dense(f), to_dense(g)));
    CHECK(to_dense(sub(f, g)) ==
          dense_add(ctx->field, to_dense(f), to_dense(scalar_mul(field_from_long(ctx->field, -1), g))));
  }
}

TEST_CASE("print-parse round trip") {
  std::mt19937 rng(13);
  for (int rank : {1, 2}) {
    CtxPtr ctx = make_context(FieldSpec::rationals(), {"t"}, {"x", "y"}, rank);
    OrdPtr lex = compile("lex", ctx);
    for (int it = 0; it < 200; ++it) {
      tt::RandomOpts o;
      o.allow_zero = true;
      PolyVector f = tt::random_poly(rng, ctx, lex, o);
      CHECK(parse_poly(ctx, lex, print_poly(f)) == f);
    }
  }
  CtxPtr fp = make_context(FieldSpec::prime_field(7), {"t"}, {"x"}, 1);
  OrdPtr lex = compile("lex", fp);
  for (int it = 0; it < 100; ++it) {
    PolyVector f = tt::random_poly(rng, fp, lex, {});
    CHECK(parse_poly(fp, lex, print_poly(f)) == f);
  }
}

TEST_CASE("parser details") {
  CtxPtr ctx = make_context(FieldSpec::rationals(), {"t"}, {"x", "y"}, 2);
  OrdPtr lex = compile("lex", ctx);
  CHECK(P(ctx, lex, "[x, y]") == add(P(ctx, lex, "x*gen(1)"), P(ctx, lex, "y*gen(2)")));
  CHECK(P(ctx, lex, " - 3/4 * t^2 * x * gen(2) ") == P(ctx, lex, "-3/4*t^2*x*gen(2)"));
  CHECK(P(ctx, lex, "x - x") == zero_poly(ctx, lex));
  CHECK_THROWS_AS(P(ctx, lex, "z + 1"), ParseError);
  CHECK_THROWS_AS(P(ctx, lex, "x +"), ParseError);
  CHECK_THROWS_AS(P(ctx, lex, "gen(3)"), ParseError);
  CHECK_THROWS_AS(P(ctx, lex, "[x, y, x]"), ParseError);
}
