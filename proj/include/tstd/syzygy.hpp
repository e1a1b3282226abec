#ifndef TSTD_SYZYGY_HPP
#define TSTD_SYZYGY_HPP

#include <vector>

#include "tstd/stdbasis.hpp"

namespace tstd {

/// Standard basis of syz(g_1,...,g_k) in the rank-k module over the same
/// ring, sorted under the Schreyer ordering built from the basis.
struct SyzygyBasis {
  CtxPtr ctx;
  OrdPtr ord;                      // Schreyer ordering w.r.t. base and leads
  GeneratorSet basis;              // the (possibly completed) generator list
  std::vector<PolyVector> vectors; // s_ij for i < j with lcm != 0, in (i,j) order
};

namespace detail {

inline PolyVector embed_component(const PolyVector& scalar, int comp, const CtxPtr& ctx_k,
                                  const OrdPtr& ord_k) {
  std::vector<Term> out;
  out.reserve(scalar.term_count());
  for (const auto& tm : scalar.terms()) {
    Term t = tm;
    t.m.comp = comp;
    out.push_back(std::move(t));
  }
  return PolyVector::make(ctx_k, ord_k, std::move(out));
}

}  // namespace detail

/// Schreyer construction: for each pair i < j with lcm(lm_i, lm_j) != 0 fix
/// the weak standard representation u*spoly(g_i,g_j) = sum q_nu g_nu and emit
///   s_ij = u*(m_ji/lc_i)*eps_i - u*(m_ij/lc_j)*eps_j - sum q_nu*eps_nu,
/// which pairs to zero against G exactly and has lm = m_ji*eps_i under the
/// Schreyer ordering.
inline SyzygyBasis schreyer_syzygies(const GeneratorSet& input, bool must_be_std = true) {
  if (input.status == StdStatus::Failed) throw MathError("generators failed verification");
  GeneratorSet g = input;
  if (must_be_std && g.status != StdStatus::Verified) g = standard_basis(g);
  const auto& gens = g.gens;
  const std::size_t k = gens.size();

  SyzygyBasis out;
  std::vector<Monomial> leads;
  for (const auto& f : gens) leads.push_back(f.leading_monomial());
  out.ord = k > 0 ? schreyer(g.ord, leads) : g.ord;
  out.ctx = k > 0 ? out.ord->context() : g.ord->context();
  out.basis = g;

  const auto& fs = out.ctx->field;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto lcm = monomial_lcm(leads[i], leads[j]);
      if (!lcm) continue;
      PolyVector sp = spoly(gens[i], gens[j]);
      DivisionResult d = weak_division(sp, gens, g.ord);
      if (!d.r.is_zero()) throw MathError("generators are not a standard basis");
      Term mi{field_inv(fs, gens[i].leading_coefficient()), mono_div(*lcm, leads[i])};
      Term mj{field_inv(fs, gens[j].leading_coefficient()), mono_div(*lcm, leads[j])};
      PolyVector s = sub(
          detail::embed_component(term_mul(mi, d.u), static_cast<int>(i) + 1, out.ctx, out.ord),
          detail::embed_component(term_mul(mj, d.u), static_cast<int>(j) + 1, out.ctx, out.ord));
      for (std::size_t nu = 0; nu < k; ++nu) {
        if (d.q[nu].is_zero()) continue;
        s = sub(s, detail::embed_component(d.q[nu], static_cast<int>(nu) + 1, out.ctx, out.ord));
      }
      out.vectors.push_back(std::move(s));
    }
  }
  return out;
}

/// Pairs a syzygy vector against the generators; zero for true syzygies.
inline PolyVector syzygy_pairing(const PolyVector& s, const GeneratorSet& g) {
  PolyVector acc = zero_poly(g.gens.front().context(), g.ord);
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    PolyVector qi = detail::component_poly(s, static_cast<int>(i) + 1);
    if (qi.is_zero()) continue;
    PolyVector scalar = detail::recontext_scalar(qi, g.gens[i].context(), g.ord);
    acc = add(acc, mul(scalar, g.gens[i]));
  }
  return acc;
}

}  // namespace tstd

#endif
