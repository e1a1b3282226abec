#ifndef TSTD_DIVISION_HPP
#define TSTD_DIVISION_HPP

#include <set>
#include <vector>

#include "tstd/poly.hpp"

namespace tstd {

/// Conditions a division u*f = q_1*g_1 + ... + q_k*g_k + r may satisfy.
enum class DivCondition { ID1, ID2, SID2, DD1, DD2, DDH };

/// Result of a division with remainder. The identity
///   u*f = sum q_i*g_i + r + residual
/// holds exactly; lt(u) = 1; residual is zero except for truncated
/// homogeneous divisions, where it collects the unprocessed t-adic tail.
struct DivisionResult {
  PolyVector u;
  std::vector<PolyVector> q;
  PolyVector r;
  PolyVector residual;
};

/// Homogeneity defect deg_x(f) - deg_x(lm(f)).
inline int ecart(const PolyVector& f) {
  if (f.is_zero()) throw MathError("ecart of zero");
  return deg_x(f) - deg_x(f.leading_monomial());
}

/// x-homogeneous image of f in the context extended by the homogenizing
/// variable, together with the x-degree it came from.
struct HomogenizedPoly {
  PolyVector base;
  int source_degree = 0;
};

namespace detail {

// Degree functional selecting between the x-block and the folded (t,x) block.
inline int block_deg(const Monomial& m, bool fold) { return fold ? deg_fold(m) : deg_x(m); }

inline int block_deg(const PolyVector& f, bool fold) {
  return fold ? deg_fold(f) : tstd::deg_x(f);
}

inline int block_ecart(const PolyVector& f, bool fold) {
  return block_deg(f, fold) - block_deg(f.leading_monomial(), fold);
}

// Lift into the homogenization context, padding the degree with the new
// variable so every term reaches block-degree d.
inline PolyVector lift_homogeneous(const PolyVector& f, const CtxPtr& hctx, const OrdPtr& hord,
                                   int d, bool fold) {
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& tm : f.terms()) {
    Term t = tm;
    Monomial m{t.m.t, std::vector<int>(), t.m.comp};
    m.x.reserve(t.m.x.size() + 1);
    m.x.push_back(d - block_deg(t.m, fold));
    m.x.insert(m.x.end(), t.m.x.begin(), t.m.x.end());
    t.m = std::move(m);
    out.push_back(std::move(t));
  }
  return PolyVector::make(hctx, hord, std::move(out));
}

// Substitute 1 for the homogenizing variable and land back in ctx.
inline PolyVector drop_homvar(const PolyVector& F, const CtxPtr& ctx, const OrdPtr& ord) {
  std::vector<Term> out;
  out.reserve(F.term_count());
  for (const auto& tm : F.terms()) {
    Term t = tm;
    t.m.x.erase(t.m.x.begin());
    out.push_back(std::move(t));
  }
  return PolyVector::make(ctx, ord, std::move(out));
}

struct HddwrCore {
  std::vector<PolyVector> q;
  PolyVector r;
  PolyVector residual;
};

// Determinate division loop. Per pass, terms of the current element are
// claimed left to right by the first divisor whose leading monomial divides
// them; unclaimed terms land in r, and the claimed quotients replay against
// the divisor tails. Inputs must be homogeneous in the caller's degree
// functional; trunc_prec >= 0 stops once the residual is in <t>^prec.
inline HddwrCore hddwr_core(const PolyVector& f, const std::vector<const PolyVector*>& gens,
                            const OrdPtr& ord, int trunc_prec) {
  const CtxPtr& ctx = f.context();
  HddwrCore out;
  out.q.assign(gens.size(), zero_poly(ctx, ord));
  out.r = zero_poly(ctx, ord);
  PolyVector cur = f.under(ord);
  while (!cur.is_zero()) {
    if (trunc_prec >= 0 && t_order(cur) >= trunc_prec) break;
    std::vector<Term> pool = cur.terms();
    PolyVector next = zero_poly(ctx, ord);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] == nullptr || gens[i]->is_zero()) continue;
      const Term& lt = gens[i]->leading_term();
      std::vector<Term> claimed;
      std::vector<Term> rest;
      for (auto& tm : pool) {
        if (monomial_divides(lt.m, tm.m))
          claimed.push_back(std::move(tm));
        else
          rest.push_back(std::move(tm));
      }
      pool = std::move(rest);
      if (claimed.empty()) continue;
      for (auto& tm : claimed) {
        tm.c = field_div(ctx->field, tm.c, lt.c);
        tm.m = mono_div(tm.m, lt.m);
      }
      PolyVector step = PolyVector::make(ctx, ord, std::move(claimed));
      out.q[i] = add(out.q[i], step);
      next = sub(next, mul(step, gens[i]->tail()));
    }
    out.r = add(out.r, PolyVector::make(ctx, ord, std::move(pool)));
    cur = std::move(next);
  }
  out.residual = std::move(cur);
  return out;
}

// Recursive weak-division engine. Works on the folded view of the ring: the
// t-variables count as polynomial variables for degree, ecart and
// homogenization, which makes every homogeneous division below terminate
// while computing the same reduction the series-side iteration would.
class DivEngine {
 public:
  DivEngine(CtxPtr ctx, OrdPtr ord)
      : ctx_(std::move(ctx)),
        ord_(std::move(ord)),
        hord_(homogenized_folded(ord_)),
        hctx_(hord_->context()) {}

  DivisionResult run(const PolyVector& f, const std::vector<PolyVector>& gens) {
    gens_.clear();
    for (const auto& g : gens) gens_.push_back(g.under(ord_));
    std::size_t k = gens.size();
    DivisionResult res = rec(f.under(ord_));
    res.q.resize(k, zero_poly(ctx_, ord_));  // drop slots of appended reducers
    res.residual = zero_poly(ctx_, ord_);
    return res;
  }

 private:
  PolyVector fold_homog(const PolyVector& f) const {
    return lift_homogeneous(f, hctx_, hord_, block_deg(f, true), true);
  }
  PolyVector dehom(const PolyVector& F) const { return drop_homvar(F, ctx_, ord_); }

  DivisionResult rec(const PolyVector& f) {
    const std::size_t k = gens_.size();
    DivisionResult res;
    res.u = one_poly(ctx_, ord_);
    res.q.assign(k, zero_poly(ctx_, ord_));
    res.r = f;
    if (f.is_zero()) return res;

    int best = -1;
    int best_ecart = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (gens_[i].is_zero()) continue;
      if (!monomial_divides(gens_[i].leading_monomial(), f.leading_monomial())) continue;
      int e = block_ecart(gens_[i], true);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    if (best < 0) return res;  // no divisor: (1, 0, ..., 0, f)

    int e = best_ecart - block_ecart(f, true);
    if (e > 0) {
      // Reduce x0^e * f^h against the leading terms of the g_i^h, then keep
      // dividing with f itself available as a reducer.
      PolyVector fh = fold_homog(f);
      Term shift{field_one(ctx_->field), mono_one(*hctx_)};
      shift.m.x[0] = e;
      PolyVector fh_shift = term_mul(shift, fh);
      std::vector<PolyVector> lead_terms;
      std::vector<const PolyVector*> divisors(k, nullptr);
      lead_terms.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (gens_[i].is_zero()) continue;
        lead_terms.push_back(term_poly(hctx_, hord_, fold_homog(gens_[i]).leading_term()));
        divisors[i] = &lead_terms.back();
      }
      // lead_terms must not reallocate after taking addresses
      HddwrCore split = hddwr_core(fh_shift, divisors, hord_, -1);
      PolyVector fprime = fh_shift;
      for (std::size_t i = 0; i < k; ++i)
        if (!split.q[i].is_zero()) fprime = sub(fprime, mul(split.q[i], fold_homog(gens_[i])));
      gens_.push_back(f);
      DivisionResult sub_res = rec(dehom(fprime));
      gens_.pop_back();
      res.r = std::move(sub_res.r);
      for (std::size_t i = 0; i < k; ++i)
        res.q[i] = add(sub_res.q[i], mul(sub_res.u, dehom(split.q[i])));
      res.u = sub(sub_res.u, sub_res.q[k]);
      return res;
    }

    // Ecart already small: one full homogeneous division, then recurse on
    // the dehomogenized remainder with the unchanged divisor list.
    std::vector<PolyVector> gh;
    std::vector<const PolyVector*> divisors(k, nullptr);
    gh.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (gens_[i].is_zero()) continue;
      gh.push_back(fold_homog(gens_[i]));
      divisors[i] = &gh.back();
    }
    HddwrCore hd = hddwr_core(fold_homog(f), divisors, hord_, -1);
    DivisionResult sub_res = rec(dehom(hd.r));
    res.u = std::move(sub_res.u);
    res.r = std::move(sub_res.r);
    for (std::size_t i = 0; i < k; ++i)
      res.q[i] = add(sub_res.q[i], mul(res.u, dehom(hd.q[i])));
    return res;
  }

  CtxPtr ctx_;
  OrdPtr ord_;
  OrdPtr hord_;
  CtxPtr hctx_;
  std::vector<PolyVector> gens_;
};

}  // namespace detail

/// Homogenisation x0^deg_x(f) * f(t, x/x0); zero maps to zero.
inline HomogenizedPoly homogenize(const PolyVector& f) {
  OrdPtr hord = homogenized(f.ordering());
  int d = std::max(deg_x(f), 0);
  return HomogenizedPoly{detail::lift_homogeneous(f, hord->context(), hord, d, false), d};
}

/// Substitutes 1 for the homogenizing variable; inverse of homogenize on
/// homogenized values. The element must be sorted under a homogenized
/// ordering, which knows the ordering to land back in.
inline PolyVector dehomogenize(const PolyVector& F) {
  auto h = std::dynamic_pointer_cast<const detail::HomogenizedOrd>(F.ordering());
  if (!h) throw MathError("not a homogenized element");
  return detail::drop_homvar(F, h->base()->context(), h->base());
}

inline PolyVector dehomogenize(const HomogenizedPoly& F) { return dehomogenize(F.base); }

struct HddwrMode {
  bool truncated = false;
  int prec = 0;

  static HddwrMode folded() { return HddwrMode{}; }
  static HddwrMode truncate(int prec) { return HddwrMode{true, prec}; }
};

/// Determinate division of homogeneous elements: f = sum q_i g_i + r with
/// DD1, DD2 and DDH, u = 1. Folded mode requires homogeneity over the whole
/// (t,x) block and terminates unconditionally; truncated mode requires
/// x-homogeneity only and stops once the unprocessed part lies in <t>^prec,
/// returning it as `residual`.
inline DivisionResult homogeneous_division(const PolyVector& f, const std::vector<PolyVector>& gens,
                                           const OrdPtr& ord, HddwrMode mode = HddwrMode::folded()) {
  for (const auto& g : gens) detail::require_compatible(f, g);
  auto homog = [&](const PolyVector& p) {
    return mode.truncated ? is_x_homogeneous(p) : detail::is_fold_homogeneous(p);
  };
  if (!homog(f)) throw MathError("non-homogeneous input");
  std::vector<const PolyVector*> divisors;
  std::vector<PolyVector> sorted;
  sorted.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw MathError("zero divisor");
    if (!homog(g)) throw MathError("non-homogeneous input");
    sorted.push_back(g.under(ord));
  }
  for (const auto& g : sorted) divisors.push_back(&g);
  detail::HddwrCore core =
      detail::hddwr_core(f, divisors, ord, mode.truncated ? mode.prec : -1);
  DivisionResult res;
  res.u = one_poly(f.context(), ord);
  res.q = std::move(core.q);
  res.r = std::move(core.r);
  res.residual = std::move(core.residual);
  return res;
}

/// Weak division with remainder: u*f = sum q_i g_i + r with lt(u) = 1, ID1
/// and ID2. Zero divisors are tolerated and receive zero quotients. When
/// lm(f) = 1 and some divisor is a unit the reduction proceeds as usual and
/// ends with remainder 0. Terminates for polynomial input.
inline DivisionResult weak_division(const PolyVector& f, const std::vector<PolyVector>& gens,
                                    const OrdPtr& ord) {
  if (!ord->t_local()) throw MathError("ordering not t-local");
  for (const auto& g : gens) detail::require_compatible(f, g);
  detail::DivEngine engine(f.context(), ord);
  return engine.run(f, gens);
}

namespace detail {

inline CtxPtr project_context(const CtxPtr& ctx, int rank) { return syzygy_context(ctx, rank); }

// Drop component j (1-based); components above j shift down.
inline PolyVector project_poly(const PolyVector& f, int j, const CtxPtr& pctx, const OrdPtr& pord) {
  std::vector<Term> out;
  for (const auto& tm : f.terms()) {
    if (tm.m.comp == j) continue;
    Term t = tm;
    if (t.m.comp > j) --t.m.comp;
    out.push_back(std::move(t));
  }
  return PolyVector::make(pctx, pord, std::move(out));
}

inline PolyVector unproject_poly(const PolyVector& f, int j, const CtxPtr& ctx, const OrdPtr& ord) {
  std::vector<Term> out;
  for (const auto& tm : f.terms()) {
    Term t = tm;
    if (t.m.comp >= j) ++t.m.comp;
    out.push_back(std::move(t));
  }
  return PolyVector::make(ctx, ord, std::move(out));
}

// Component j of r, kept as a rank-1 polynomial in the same context.
inline PolyVector component_poly(const PolyVector& r, int j) {
  std::vector<Term> out;
  for (const auto& tm : r.terms())
    if (tm.m.comp == j) {
      Term t = tm;
      t.m.comp = 1;
      out.push_back(std::move(t));
    }
  return PolyVector::make(r.context(), r.ordering(), std::move(out));
}

// Moves a rank-1 polynomial (all components 1) into a sibling context that
// differs only in rank.
inline PolyVector recontext_scalar(const PolyVector& f, const CtxPtr& ctx, const OrdPtr& ord) {
  for (const auto& tm : f.terms())
    if (tm.m.comp != 1) throw MathError("expected a rank-1 polynomial");
  return PolyVector::make(ctx, ord, f.terms());
}

}  // namespace detail

/// Weak division whose remainder additionally satisfies SID2: no lm(g_i)
/// divides lm(r_j e_j) for any component j with r_j != 0. Recurses over the
/// rank; the pivot component of the remainder is corrected by exactly the
/// terms the lower-rank division spends from it, which keeps the identity
/// exact without disturbing the component's leading monomial.
inline DivisionResult weak_division_strong(const PolyVector& f,
                                           const std::vector<PolyVector>& gens, const OrdPtr& ord) {
  const CtxPtr& ctx = f.context();
  const int s = ctx->rank;
  DivisionResult res = weak_division(f, gens, ord);
  if (s == 1 || res.r.is_zero()) return res;

  const int j = res.r.leading_monomial().comp;
  std::vector<int> in_l;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero() && gens[i].under(ord).leading_monomial().comp != j)
      in_l.push_back(static_cast<int>(i));

  CtxPtr pctx = detail::project_context(ctx, s - 1);
  std::vector<int> comp_map;
  for (int c = 1; c <= s - 1; ++c) comp_map.push_back(c < j ? c : c + 1);
  OrdPtr pord = detail::remap_components(pctx, ord, comp_map);

  std::vector<PolyVector> pgens;
  for (int i : in_l) pgens.push_back(detail::project_poly(gens[i].under(ord), j, pctx, pord));
  DivisionResult inner =
      weak_division_strong(detail::project_poly(res.r, j, pctx, pord), pgens, pord);

  // The unit and the quotients of the projected division are scalar data;
  // pull them back into the full-rank context before assembling.
  PolyVector uprime = detail::recontext_scalar(inner.u, ctx, ord);
  std::vector<PolyVector> qprime;
  for (const auto& q : inner.q) qprime.push_back(detail::recontext_scalar(q, ctx, ord));

  // r'' := lift(inner.r) + e_j * (u' * r_j - sum_{i in L} q'_i * g_{i,j})
  PolyVector rj = detail::component_poly(res.r, j);
  PolyVector pivot = mul(uprime, rj);
  for (std::size_t a = 0; a < in_l.size(); ++a) {
    PolyVector gij = detail::component_poly(gens[in_l[a]].under(ord), j);
    if (!gij.is_zero() && !qprime[a].is_zero()) pivot = sub(pivot, mul(qprime[a], gij));
  }
  std::vector<Term> pivot_terms;
  for (const auto& tm : pivot.terms()) {
    Term t = tm;
    t.m.comp = j;
    pivot_terms.push_back(std::move(t));
  }
  PolyVector new_r = add(detail::unproject_poly(inner.r, j, ctx, ord),
                         PolyVector::make(ctx, ord, std::move(pivot_terms)));

  DivisionResult out;
  out.u = mul(uprime, res.u);
  out.q.assign(gens.size(), zero_poly(ctx, ord));
  for (std::size_t i = 0; i < gens.size(); ++i) out.q[i] = mul(uprime, res.q[i]);
  for (std::size_t a = 0; a < in_l.size(); ++a)
    out.q[in_l[a]] = add(out.q[in_l[a]], qprime[a]);
  out.r = std::move(new_r);
  out.residual = zero_poly(ctx, ord);
  return out;
}

/// Returns exactly the satisfied conditions of a division identity; throws
/// when u*f != sum q_i g_i + r + residual.
inline std::set<DivCondition> check_conditions(const PolyVector& f,
                                               const std::vector<PolyVector>& gens,
                                               const DivisionResult& res, const OrdPtr& ord) {
  const CtxPtr& ctx = f.context();
  PolyVector lhs = mul(res.u.under(ord), f.under(ord));
  PolyVector rhs = add(res.r.under(ord), res.residual.under(ord));
  for (std::size_t i = 0; i < gens.size(); ++i)
    rhs = add(rhs, mul(res.q[i].under(ord), gens[i].under(ord)));
  if (!(lhs == rhs)) throw MathError("not a division");

  std::set<DivCondition> flags;
  std::vector<const PolyVector*> nz;
  std::vector<PolyVector> sorted;
  sorted.reserve(gens.size());
  for (const auto& g : gens) sorted.push_back(g.under(ord));

  // ID1
  bool id1 = true;
  if (!lhs.is_zero()) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (res.q[i].is_zero() || sorted[i].is_zero()) continue;
      PolyVector prod = mul(res.q[i].under(ord), sorted[i]);
      if (!prod.is_zero() && ord->cmp(prod.leading_monomial(), lhs.leading_monomial()) > 0)
        id1 = false;
    }
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!res.q[i].is_zero() && !sorted[i].is_zero() &&
          !mul(res.q[i].under(ord), sorted[i]).is_zero())
        id1 = false;
  }
  if (id1) flags.insert(DivCondition::ID1);

  PolyVector r = res.r.under(ord);

  // ID2
  bool id2 = true;
  if (!r.is_zero())
    for (const auto& g : sorted)
      if (!g.is_zero() && monomial_divides(g.leading_monomial(), r.leading_monomial())) id2 = false;
  if (id2) flags.insert(DivCondition::ID2);

  // SID2
  bool sid2 = true;
  for (int c = 1; c <= ctx->rank && sid2; ++c) {
    std::vector<Term> comp;
    for (const auto& tm : r.terms())
      if (tm.m.comp == c) comp.push_back(tm);
    if (comp.empty()) continue;
    PolyVector rc = PolyVector::make(ctx, ord, std::move(comp));
    for (const auto& g : sorted)
      if (!g.is_zero() && monomial_divides(g.leading_monomial(), rc.leading_monomial()))
        sid2 = false;
  }
  if (sid2) flags.insert(DivCondition::SID2);

  // DD1: for j < i, no term of q_i * lm(g_i) divisible by lm(g_j).
  bool dd1 = true;
  for (std::size_t i = 0; i < gens.size() && dd1; ++i) {
    if (res.q[i].is_zero() || sorted[i].is_zero()) continue;
    for (const auto& tm : res.q[i].terms()) {
      Monomial shifted = mono_mul(sorted[i].leading_monomial(), tm.m);
      for (std::size_t j = 0; j < i && dd1; ++j)
        if (!sorted[j].is_zero() && monomial_divides(sorted[j].leading_monomial(), shifted))
          dd1 = false;
      if (!dd1) break;
    }
  }
  if (dd1) flags.insert(DivCondition::DD1);

  // DD2: no term of r divisible by any lm(g_i).
  bool dd2 = true;
  for (const auto& tm : r.terms()) {
    for (const auto& g : sorted)
      if (!g.is_zero() && monomial_divides(g.leading_monomial(), tm.m)) dd2 = false;
    if (!dd2) break;
  }
  if (dd2) flags.insert(DivCondition::DD2);

  // DDH relative to the homogeneity structure the inputs actually have.
  bool x_mode = is_x_homogeneous(f);
  for (const auto& g : sorted) x_mode = x_mode && is_x_homogeneous(g);
  bool fold_mode = !x_mode && detail::is_fold_homogeneous(f);
  if (fold_mode)
    for (const auto& g : sorted) fold_mode = fold_mode && detail::is_fold_homogeneous(g);
  if (x_mode || fold_mode) {
    bool fold = fold_mode;
    auto hom = [&](const PolyVector& p) {
      if (p.is_zero()) return true;
      int d = detail::block_deg(p.terms().front().m, fold);
      for (const auto& tm : p.terms())
        if (detail::block_deg(tm.m, fold) != d) return false;
      return true;
    };
    bool ddh = hom(r) && (r.is_zero() || detail::block_deg(r, fold) == detail::block_deg(f, fold));
    for (std::size_t i = 0; i < gens.size() && ddh; ++i) {
      if (res.q[i].is_zero()) continue;
      if (!hom(res.q[i])) {
        ddh = false;
        break;
      }
      int expected =
          detail::block_deg(f, fold) - detail::block_deg(sorted[i].leading_monomial(), fold);
      if (detail::block_deg(res.q[i], fold) != expected) ddh = false;
    }
    if (f.is_zero()) ddh = r.is_zero();
    if (ddh) flags.insert(DivCondition::DDH);
  }
  return flags;
}

}  // namespace tstd

#endif
