#ifndef TSTD_RING_HPP
#define TSTD_RING_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tstd/field.hpp"

namespace tstd {

/// Ambient ring K[t_1..t_m][x_1..x_n]^s. Exponents of the t-block are stored
/// as integer multiples of 1/denom, so rings with fractional t-powers reuse
/// plain integer exponent arithmetic.
struct RingContext {
  int tvars = 0;
  int xvars = 0;
  int rank = 1;
  FieldSpec field;
  long denom = 1;
  std::vector<std::string> names;  // t-block then x-block

  bool operator==(const RingContext&) const = default;
};

using CtxPtr = std::shared_ptr<const RingContext>;

inline CtxPtr make_context(FieldSpec field, std::vector<std::string> tnames,
                           std::vector<std::string> xnames, int rank = 1, long denom = 1) {
  RingContext ctx;
  ctx.tvars = static_cast<int>(tnames.size());
  ctx.xvars = static_cast<int>(xnames.size());
  ctx.rank = rank;
  ctx.field = field;
  ctx.denom = denom;
  if (ctx.tvars + ctx.xvars < 1) throw std::invalid_argument("ring needs at least one variable");
  if (rank < 1) throw std::invalid_argument("module rank must be >= 1");
  if (denom < 1) throw std::invalid_argument("denominator must be >= 1");
  ctx.names = std::move(tnames);
  ctx.names.insert(ctx.names.end(), xnames.begin(), xnames.end());
  for (std::size_t i = 0; i < ctx.names.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.names.size(); ++j)
      if (ctx.names[i] == ctx.names[j])
        throw std::invalid_argument("duplicate variable name: " + ctx.names[i]);
  return std::make_shared<RingContext>(std::move(ctx));
}

inline bool same_context(const CtxPtr& a, const CtxPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Module monomial t^alpha * x^beta * e_comp; comp is 1-based.
struct Monomial {
  std::vector<int> t;
  std::vector<int> x;
  int comp = 1;

  bool operator==(const Monomial&) const = default;
};

inline Monomial mono_one(const RingContext& ctx, int comp = 1) {
  return Monomial{std::vector<int>(ctx.tvars, 0), std::vector<int>(ctx.xvars, 0), comp};
}

inline int deg_t(const Monomial& m) { return std::accumulate(m.t.begin(), m.t.end(), 0); }
inline int deg_x(const Monomial& m) { return std::accumulate(m.x.begin(), m.x.end(), 0); }
inline int deg_fold(const Monomial& m) { return deg_t(m) + deg_x(m); }

/// Product of a monomial with a scalar monomial; the scalar's component is
/// ignored, the result keeps m's component.
inline Monomial mono_mul(const Monomial& m, const Monomial& scalar) {
  Monomial r = m;
  for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] += scalar.t[i];
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += scalar.x[i];
  return r;
}

/// Divisibility needs equal components and componentwise <= exponents.
inline bool monomial_divides(const Monomial& p, const Monomial& q) {
  if (p.comp != q.comp) return false;
  for (std::size_t i = 0; i < p.t.size(); ++i)
    if (p.t[i] > q.t[i]) return false;
  for (std::size_t i = 0; i < p.x.size(); ++i)
    if (p.x[i] > q.x[i]) return false;
  return true;
}

/// q / p as a scalar monomial (component 1); requires p | q.
inline Monomial mono_div(const Monomial& q, const Monomial& p) {
  Monomial r = q;
  r.comp = 1;
  for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] -= p.t[i];
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] -= p.x[i];
  return r;
}

/// Componentwise max when components agree; the zero sentinel (nullopt)
/// when they differ.
inline std::optional<Monomial> monomial_lcm(const Monomial& p, const Monomial& q) {
  if (p.comp != q.comp) return std::nullopt;
  Monomial r = p;
  for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] = std::max(p.t[i], q.t[i]);
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = std::max(p.x[i], q.x[i]);
  return r;
}

/// Nonzero coefficient times a module monomial.
struct Term {
  Coeff c;
  Monomial m;

  bool operator==(const Term&) const = default;
};

}  // namespace tstd

#endif
