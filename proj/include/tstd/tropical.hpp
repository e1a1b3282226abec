#ifndef TSTD_TROPICAL_HPP
#define TSTD_TROPICAL_HPP

#include <vector>

#include "tstd/idealops.hpp"

namespace tstd {

/// Weight vector (w_0, w_1, ..., w_n) with w_0 < 0; w_0 weighs the t-power
/// alpha/N, the rest weigh the x-block.
struct WeightVectorW {
  std::vector<mpq_class> w;

  explicit WeightVectorW(std::vector<mpq_class> weights) : w(std::move(weights)) {
    if (w.empty() || w[0] >= 0) throw MathError("t-initial weight w_0 must be negative");
  }
};

namespace detail {
inline void check_tin_ctx(const RingContext& ctx, const WeightVectorW& w) {
  if (ctx.tvars != 1) throw MathError("t-initial operations need exactly one t-variable");
  if (static_cast<int>(w.w.size()) != 1 + ctx.xvars)
    throw MathError("weight vector has wrong length");
}
}  // namespace detail

/// w-degree of a term: w . (alpha/N, beta), exact rational.
inline mpq_class w_degree(const Term& term, const WeightVectorW& w, const RingContext& ctx) {
  detail::check_tin_ctx(ctx, w);
  mpq_class s = 0;
  if (term.m.t[0] != 0) s += w.w[0] * term.m.t[0] / ctx.denom;
  for (std::size_t i = 0; i < term.m.x.size(); ++i)
    if (term.m.x[i] != 0) s += w.w[1 + i] * term.m.x[i];
  return s;
}

/// Maximal w-degree over the terms of f (f != 0).
inline mpq_class ord_w(const PolyVector& f, const WeightVectorW& w) {
  if (f.is_zero()) throw MathError("w-order of zero");
  mpq_class best;
  bool have = false;
  for (const auto& tm : f.terms()) {
    mpq_class d = w_degree(tm, w, *f.context());
    if (!have || d > best) {
      best = d;
      have = true;
    }
  }
  return best;
}

/// w-initial form: the terms of maximal w-degree, t-powers intact.
inline PolyVector in_w(const PolyVector& f, const WeightVectorW& w) {
  mpq_class top = ord_w(f, w);
  std::vector<Term> out;
  for (const auto& tm : f.terms())
    if (w_degree(tm, w, *f.context()) == top) out.push_back(tm);
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

/// Rank-1 context over the x-block only (the home of t-initial forms).
inline CtxPtr x_only_context(const RingContext& ctx) {
  std::vector<std::string> xnames(ctx.names.begin() + ctx.tvars, ctx.names.end());
  return make_context(ctx.field, {}, std::move(xnames), 1, 1);
}

/// t-initial form tin_w(f) = IN_w(f) at t = 1, an element of K[x]. Distinct
/// terms of IN_w(f) share no x-monomial (w_0 != 0 pins the t-power), so the
/// substitution never merges or cancels terms.
inline PolyVector t_initial_form(const PolyVector& f, const WeightVectorW& w, const CtxPtr& xctx,
                                 const OrdPtr& xord) {
  PolyVector top = in_w(f, w);
  std::vector<Term> out;
  for (const auto& tm : top.terms()) {
    Term t;
    t.c = tm.c;
    t.m = Monomial{{}, tm.m.x, 1};
    out.push_back(std::move(t));
  }
  return PolyVector::make(xctx, xord, std::move(out));
}

inline PolyVector t_initial_form(const PolyVector& f, const WeightVectorW& w) {
  CtxPtr xctx = x_only_context(*f.context());
  OrdPtr xord = compile(OrderingSpec::degrevlex(), xctx);
  return t_initial_form(f, w, xctx, xord);
}

/// Generators of the t-initial ideal of <gens>: a standard basis under >_w,
/// then tin_w of each element, monic, sorted descending.
struct TInitialResult {
  CtxPtr xctx;
  OrdPtr xord;
  std::vector<PolyVector> gens;
};

inline TInitialResult t_initial_ideal(const std::vector<PolyVector>& gens, const WeightVectorW& w,
                                      const OrderingSpec& global_x, const CtxPtr& ctx) {
  detail::check_tin_ctx(*ctx, w);
  if (ctx->rank != 1) throw MathError("t-initial ideals need rank 1");
  OrdPtr ord = tinitial_ordering(w.w, global_x, ctx);
  GeneratorSet g = standard_basis(make_generator_set(gens, ord));
  TInitialResult out;
  out.xctx = x_only_context(*ctx);
  out.xord = compile(global_x, out.xctx);
  for (const auto& f : g.gens)
    out.gens.push_back(monic(t_initial_form(f, w, out.xctx, out.xord)));
  std::sort(out.gens.begin(), out.gens.end(),
            [](const PolyVector& a, const PolyVector& b) { return compare_polys(a, b) > 0; });
  out.gens.erase(std::unique(out.gens.begin(), out.gens.end()), out.gens.end());
  return out;
}

/// Same Puiseux object over the denominator N*M: every t-exponent numerator
/// is multiplied by M.
inline PolyVector rescale(const PolyVector& f, long M) {
  if (M < 1) throw MathError("rescale factor must be >= 1");
  const auto& ctx = *f.context();
  std::vector<std::string> tnames(ctx.names.begin(), ctx.names.begin() + ctx.tvars);
  std::vector<std::string> xnames(ctx.names.begin() + ctx.tvars, ctx.names.end());
  CtxPtr ctx2 = make_context(ctx.field, tnames, xnames, ctx.rank, ctx.denom * M);
  std::vector<Term> out;
  for (const auto& tm : f.terms()) {
    Term t = tm;
    for (auto& e : t.m.t) e *= static_cast<int>(M);
    out.push_back(std::move(t));
  }
  // Rebuild the ordering on the rescaled context when the spec is known to
  // the caller; a plain lex placeholder keeps the value well-formed.
  OrdPtr ord2 = compile(OrderingSpec::lex(), ctx2);
  return PolyVector::make(ctx2, ord2, std::move(out));
}

}  // namespace tstd

#endif
