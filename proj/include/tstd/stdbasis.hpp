#ifndef TSTD_STDBASIS_HPP
#define TSTD_STDBASIS_HPP

#include <deque>
#include <utility>
#include <vector>

#include "tstd/division.hpp"

namespace tstd {

enum class StdStatus { Unknown, Verified, Failed };

/// Ordered list of nonzero generators under a fixed ordering, with the
/// standard-basis verification state.
struct GeneratorSet {
  std::vector<PolyVector> gens;
  OrdPtr ord;
  StdStatus status = StdStatus::Unknown;
};

/// Drops zero generators and re-sorts the rest under ord.
inline GeneratorSet make_generator_set(const std::vector<PolyVector>& gens, const OrdPtr& ord) {
  GeneratorSet g;
  g.ord = ord;
  for (const auto& f : gens)
    if (!f.is_zero()) g.gens.push_back(f.under(ord));
  return g;
}

/// spoly(f,g) = (lcm/lt(f))*f - (lcm/lt(g))*g; zero when the lead components
/// differ (lcm = 0).
inline PolyVector spoly(const PolyVector& f, const PolyVector& gin) {
  if (f.is_zero() || gin.is_zero()) throw MathError("s-polynomial of zero");
  detail::require_compatible(f, gin);
  PolyVector g = gin.under(f.ordering());
  auto lcm = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  if (!lcm) return zero_poly(f.context(), f.ordering());
  const auto& fs = f.field();
  Term cf{field_inv(fs, f.leading_coefficient()), mono_div(*lcm, f.leading_monomial())};
  Term cg{field_inv(fs, g.leading_coefficient()), mono_div(*lcm, g.leading_monomial())};
  return sub(term_mul(cf, f), term_mul(cg, g));
}

/// Standard-basis completion: FIFO pair queue, weak division of each
/// s-polynomial, nonzero remainders join the basis. The output begins with
/// the input generators and is deterministic for a fixed input order.
inline GeneratorSet standard_basis(const GeneratorSet& input) {
  if (!input.ord->t_local()) throw MathError("ordering not t-local");
  if (input.status == StdStatus::Verified) return input;
  GeneratorSet out = input;
  out.status = StdStatus::Verified;
  auto& g = out.gens;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (!monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    PolyVector sp = spoly(g[i], g[j]);
    if (sp.is_zero()) continue;
    DivisionResult d = weak_division(sp, g, out.ord);
    if (d.r.is_zero()) continue;
    for (std::size_t l = 0; l < g.size(); ++l) pairs.emplace_back(l, g.size());
    g.push_back(d.r);
  }
  return out;
}

/// Buchberger test: every s-polynomial weakly reduces to zero.
inline bool is_standard_basis(const GeneratorSet& g) {
  for (std::size_t i = 0; i < g.gens.size(); ++i)
    for (std::size_t j = i + 1; j < g.gens.size(); ++j) {
      if (!monomial_lcm(g.gens[i].leading_monomial(), g.gens[j].leading_monomial())) continue;
      PolyVector sp = spoly(g.gens[i], g.gens[j]);
      if (sp.is_zero()) continue;
      if (!weak_division(sp, g.gens, g.ord).r.is_zero()) return false;
    }
  return true;
}

/// Minimal monomial generating set of <lm(g) | g in G>.
struct LeadingModule {
  std::vector<Monomial> gens;
};

inline LeadingModule leading_module(const GeneratorSet& g) {
  std::vector<Monomial> lms;
  for (const auto& f : g.gens) lms.push_back(f.leading_monomial());
  std::sort(lms.begin(), lms.end(),
            [&](const Monomial& a, const Monomial& b) { return g.ord->cmp(a, b) > 0; });
  lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
  LeadingModule out;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
      if (i != j && monomial_divides(lms[j], lms[i]) && !(lms[i] == lms[j])) redundant = true;
    if (!redundant) out.gens.push_back(lms[i]);
  }
  return out;
}

/// f in <F> over the localisation, decided by the weak remainder against a
/// standard basis of F.
inline bool membership(const PolyVector& f, const GeneratorSet& F) {
  if (f.is_zero()) return true;
  GeneratorSet g = F.status == StdStatus::Verified ? F : standard_basis(F);
  return weak_division(f, g.gens, g.ord).r.is_zero();
}

/// Optional cleanup pass: drops generators whose leading monomial another
/// generator's divides, and normalizes to monic. When the ordering is a
/// well-ordering (no t-variables and a global x-block) the tails are fully
/// reduced as well; for genuinely local orderings tail reduction need not
/// terminate and is skipped.
inline GeneratorSet interreduce(const GeneratorSet& input) {
  GeneratorSet out;
  out.ord = input.ord;
  out.status = input.status;
  std::vector<PolyVector> kept;
  for (std::size_t i = 0; i < input.gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < input.gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = input.gens[j].leading_monomial();
      const Monomial& b = input.gens[i].leading_monomial();
      if (monomial_divides(a, b) && !(a == b && j > i)) redundant = true;
    }
    if (!redundant) kept.push_back(input.gens[i]);
  }
  bool well_ordered = input.ord->context()->tvars == 0 && input.ord->global_x();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    PolyVector g = monic(kept[i]);
    if (well_ordered) {
      // full reduction of the tail; terminates because the ordering is a
      // well-ordering here
      PolyVector acc = term_poly(g.context(), input.ord, g.leading_term());
      PolyVector rest = g.tail();
      while (!rest.is_zero()) {
        bool reduced = false;
        for (std::size_t j = 0; j < kept.size() && !reduced; ++j) {
          if (j == i) continue;
          const PolyVector& h = kept[j];
          if (!monomial_divides(h.leading_monomial(), rest.leading_monomial())) continue;
          Term factor{field_div(g.field(), rest.leading_coefficient(), h.leading_coefficient()),
                      mono_div(rest.leading_monomial(), h.leading_monomial())};
          rest = sub(rest, term_mul(factor, h));
          reduced = true;
        }
        if (!reduced) {
          acc = add(acc, term_poly(g.context(), input.ord, rest.leading_term()));
          rest = rest.tail();
        }
      }
      g = acc;
    }
    out.gens.push_back(std::move(g));
  }
  return out;
}

}  // namespace tstd

#endif
