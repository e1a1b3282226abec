#ifndef TSTD_IDEALOPS_HPP
#define TSTD_IDEALOPS_HPP

#include <string>
#include <vector>

#include "tstd/stdbasis.hpp"

namespace tstd {

/// Variables of the x-block to eliminate; t-variables are never eliminable.
struct EliminationSpec {
  std::vector<std::string> drop_vars;
};

namespace detail {

inline void validate_drop_vars(const RingContext& ctx, const std::vector<std::string>& vars) {
  if (vars.empty()) throw MathError("no variables to eliminate");
  for (const auto& name : vars) {
    auto it = std::find(ctx.names.begin(), ctx.names.end(), name);
    if (it == ctx.names.end()) throw MathError("unknown variable: " + name);
    if (it - ctx.names.begin() < ctx.tvars) throw MathError("cannot eliminate local variables");
  }
}

inline bool mono_uses_vars(const Monomial& m, const RingContext& ctx,
                           const std::vector<std::string>& vars) {
  for (const auto& name : vars) {
    auto it = std::find(ctx.names.begin(), ctx.names.end(), name);
    int xi = static_cast<int>(it - ctx.names.begin()) - ctx.tvars;
    if (m.x[xi] > 0) return true;
  }
  return false;
}

}  // namespace detail

/// Standard basis of <F> intersected with the subring without drop_vars:
/// run std under the block ordering (global outer block on drop_vars, the
/// inner ordering on the rest) and keep generators whose lm avoids them.
inline GeneratorSet eliminate(const std::vector<PolyVector>& F, const EliminationSpec& spec,
                              const OrderingSpec& inner_ord, const CtxPtr& ctx) {
  detail::validate_drop_vars(*ctx, spec.drop_vars);
  OrdPtr block = compile(OrderingSpec::block(spec.drop_vars, inner_ord), ctx);
  GeneratorSet g = standard_basis(make_generator_set(F, block));
  GeneratorSet out;
  out.ord = compile(inner_ord, ctx);
  out.status = StdStatus::Verified;
  for (const auto& f : g.gens)
    if (!detail::mono_uses_vars(f.leading_monomial(), *ctx, spec.drop_vars))
      out.gens.push_back(f.under(out.ord));
  return out;
}

namespace detail {

// Context with the tag variable prepended to the x-block.
inline CtxPtr tag_context(const CtxPtr& ctx) {
  std::vector<std::string> tnames(ctx->names.begin(), ctx->names.begin() + ctx->tvars);
  std::vector<std::string> xnames;
  xnames.push_back("@tau");
  xnames.insert(xnames.end(), ctx->names.begin() + ctx->tvars, ctx->names.end());
  return make_context(ctx->field, std::move(tnames), std::move(xnames), ctx->rank, ctx->denom);
}

inline PolyVector lift_tagged(const PolyVector& f, int tau_exp, const CtxPtr& tctx,
                              const OrdPtr& tord) {
  std::vector<Term> out;
  for (const auto& tm : f.terms()) {
    Term t = tm;
    t.m.x.insert(t.m.x.begin(), tau_exp);
    out.push_back(std::move(t));
  }
  return PolyVector::make(tctx, tord, std::move(out));
}

inline PolyVector strip_tag(const PolyVector& f, const CtxPtr& ctx, const OrdPtr& ord) {
  std::vector<Term> out;
  for (const auto& tm : f.terms()) {
    Term t = tm;
    t.m.x.erase(t.m.x.begin());
    out.push_back(std::move(t));
  }
  return PolyVector::make(ctx, ord, std::move(out));
}

}  // namespace detail

/// Standard basis of the intersection of <F> and <G> via the tag
/// construction: generators
/// tau*f_i and (1-tau)*g_j with tau a dominant global variable, then
/// eliminate tau. The tag variable is stripped from the result.
inline GeneratorSet intersect(const std::vector<PolyVector>& F, const std::vector<PolyVector>& G,
                              const OrderingSpec& inner_ord, const CtxPtr& ctx) {
  if (ctx->rank != 1) throw MathError("intersection requires rank 1");
  CtxPtr tctx = detail::tag_context(ctx);
  OrderingSpec lifted = detail::spec_with_inserted_xvar(inner_ord, ctx->tvars, 0);
  OrdPtr tord = compile(OrderingSpec::block({"@tau"}, lifted), tctx);
  std::vector<PolyVector> gens;
  for (const auto& f : F)
    if (!f.is_zero()) gens.push_back(detail::lift_tagged(f, 1, tctx, tord));
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    gens.push_back(sub(detail::lift_tagged(g, 0, tctx, tord), detail::lift_tagged(g, 1, tctx, tord)));
  }
  GeneratorSet big = standard_basis(make_generator_set(gens, tord));
  GeneratorSet out;
  out.ord = compile(inner_ord, ctx);
  out.status = StdStatus::Verified;
  for (const auto& f : big.gens)
    if (f.leading_monomial().x[0] == 0) out.gens.push_back(detail::strip_tag(f, ctx, out.ord));
  return out;
}

/// Standard basis of <F> : <f>. Each intersection generator lies in <f>
/// over the localisation, so its weak division by (f) has remainder zero;
/// the quotient is the polynomial representative.
inline GeneratorSet ideal_quotient(const std::vector<PolyVector>& F, const PolyVector& f,
                                   const OrderingSpec& inner_ord, const CtxPtr& ctx) {
  if (ctx->rank != 1) throw MathError("quotient requires rank 1");
  if (f.is_zero()) throw MathError("quotient by zero");
  GeneratorSet inter = intersect(F, {f}, inner_ord, ctx);
  std::vector<PolyVector> quots;
  for (const auto& g : inter.gens) {
    DivisionResult d = weak_division(g, {f.under(inter.ord)}, inter.ord);
    if (!d.r.is_zero()) throw MathError("internal error: intersection generator not divisible");
    quots.push_back(d.q[0]);
  }
  return standard_basis(make_generator_set(quots, inter.ord));
}

/// Standard basis of the saturation <F> : <f>^infinity, reached as the fixed
/// point of iterated quotients.
inline GeneratorSet saturate(const std::vector<PolyVector>& F, const PolyVector& f,
                             const OrderingSpec& inner_ord, const CtxPtr& ctx,
                             int max_iter = 1000) {
  if (ctx->rank != 1) throw MathError("saturation requires rank 1");
  if (f.is_zero()) throw MathError("saturation by zero");
  GeneratorSet cur = standard_basis(make_generator_set(F, compile(inner_ord, ctx)));
  for (int iter = 0; iter < max_iter; ++iter) {
    GeneratorSet next = ideal_quotient(cur.gens, f, inner_ord, ctx);
    bool stable = true;
    for (const auto& g : next.gens)
      if (!membership(g, cur)) {
        stable = false;
        break;
      }
    if (stable) return cur;
    cur = std::move(next);
  }
  throw MathError("saturation did not stabilize within the iteration cap");
}

}  // namespace tstd

#endif
