#ifndef TSTD_TESTS_ORACLE_HPP
#define TSTD_TESTS_ORACLE_HPP

// Textbook Buchberger oracle for m = 0 and a global ordering: plain repeated
// lead reduction, no ecart logic, no unit tracking. Used as the independent
// reference the engine's leading ideals are compared against.

#include <vector>

#include "tstd/tstd.hpp"

namespace oracle {

using namespace tstd;

inline PolyVector naive_reduce(PolyVector f, const std::vector<PolyVector>& gens,
                               const OrdPtr& ord) {
  bool progress = true;
  while (!f.is_zero() && progress) {
    progress = false;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!monomial_divides(g.leading_monomial(), f.leading_monomial())) continue;
      Term factor{field_div(f.context()->field, f.leading_coefficient(), g.leading_coefficient()),
                  mono_div(f.leading_monomial(), g.leading_monomial())};
      f = sub(f, term_mul(factor, g));
      progress = true;
      break;
    }
  }
  return f;
}

inline std::vector<PolyVector> naive_buchberger(std::vector<PolyVector> gens, const OrdPtr& ord) {
  std::vector<PolyVector> g;
  for (const auto& f : gens)
    if (!f.is_zero()) g.push_back(f.under(ord));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (!monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    PolyVector sp = spoly(g[i], g[j]);
    if (sp.is_zero()) continue;
    PolyVector r = naive_reduce(sp, g, ord);
    if (r.is_zero()) continue;
    for (std::size_t l = 0; l < g.size(); ++l) pairs.emplace_back(l, g.size());
    g.push_back(r);
  }
  return g;
}

// Minimal monomial generators of the leading ideal, sorted for set compare.
inline std::vector<Monomial> minimal_leads(const std::vector<PolyVector>& gens, const OrdPtr& ord) {
  std::vector<Monomial> lms;
  for (const auto& f : gens)
    if (!f.is_zero()) lms.push_back(f.under(ord).leading_monomial());
  std::sort(lms.begin(), lms.end(),
            [&](const Monomial& a, const Monomial& b) { return ord->cmp(a, b) > 0; });
  lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
      if (i != j && monomial_divides(lms[j], lms[i])) redundant = true;
    if (!redundant) out.push_back(lms[i]);
  }
  return out;
}

}  // namespace oracle

#endif
