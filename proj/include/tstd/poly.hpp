#ifndef TSTD_POLY_HPP
#define TSTD_POLY_HPP

#include <algorithm>
#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "tstd/ordering.hpp"
#include "tstd/ring.hpp"

namespace tstd {

/// Element of K[t][x]^s as a canonical term sequence: no zero coefficients,
/// monomials pairwise distinct, strictly descending under the ordering the
/// value was normalized with. The zero element is the empty sequence.
class PolyVector {
 public:
  PolyVector() = default;
  PolyVector(CtxPtr ctx, OrdPtr ord) : ctx_(std::move(ctx)), ord_(std::move(ord)) {}

  static PolyVector make(CtxPtr ctx, OrdPtr ord, std::vector<Term> terms) {
    PolyVector f(std::move(ctx), std::move(ord));
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const CtxPtr& context() const { return ctx_; }
  const OrdPtr& ordering() const { return ord_; }
  const FieldSpec& field() const { return ctx_->field; }

  const Term& leading_term() const {
    if (is_zero()) throw MathError("leading term of zero");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Coeff& leading_coefficient() const { return leading_term().c; }

  PolyVector tail() const {
    PolyVector r(ctx_, ord_);
    if (!is_zero()) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  /// Same value viewed under another ordering; re-sorts when it differs.
  PolyVector under(const OrdPtr& ord) const {
    if (ord == ord_) return *this;
    PolyVector r(ctx_, ord);
    r.terms_ = terms_;
    r.normalize();
    return r;
  }

  bool operator==(const PolyVector& o) const {
    if (!same_context(ctx_, o.ctx_)) return false;
    if (ord_ == o.ord_) return terms_ == o.terms_;
    return terms_ == o.under(ord_).terms_;
  }

 private:
  void normalize() {
    const auto& fs = ctx_->field;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord_->cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& tm : terms_) {
      if (!out.empty() && out.back().m == tm.m)
        out.back().c = field_add(fs, out.back().c, tm.c);
      else
        out.push_back(std::move(tm));
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  CtxPtr ctx_;
  OrdPtr ord_;
  std::vector<Term> terms_;
};

namespace detail {
inline void require_compatible(const PolyVector& f, const PolyVector& g) {
  if (!same_context(f.context(), g.context())) throw MathError("ring context mismatch");
}
}  // namespace detail

inline PolyVector zero_poly(const CtxPtr& ctx, const OrdPtr& ord) { return PolyVector(ctx, ord); }

inline PolyVector one_poly(const CtxPtr& ctx, const OrdPtr& ord, int comp = 1) {
  return PolyVector::make(ctx, ord, {Term{field_one(ctx->field), mono_one(*ctx, comp)}});
}

inline PolyVector term_poly(const CtxPtr& ctx, const OrdPtr& ord, Term t) {
  return PolyVector::make(ctx, ord, {std::move(t)});
}

/// Merge-based addition; linear in the term counts.
inline PolyVector add(const PolyVector& f, const PolyVector& gin) {
  detail::require_compatible(f, gin);
  PolyVector g = gin.under(f.ordering());
  const auto& fs = f.field();
  const auto& ord = *f.ordering();
  std::vector<Term> out;
  out.reserve(f.term_count() + g.term_count());
  std::size_t i = 0, j = 0;
  while (i < f.term_count() && j < g.term_count()) {
    int c = ord.cmp(f.terms()[i].m, g.terms()[j].m);
    if (c > 0) {
      out.push_back(f.terms()[i++]);
    } else if (c < 0) {
      out.push_back(g.terms()[j++]);
    } else {
      Coeff s = field_add(fs, f.terms()[i].c, g.terms()[j].c);
      if (!s.is_zero()) out.push_back(Term{std::move(s), f.terms()[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < f.term_count(); ++i) out.push_back(f.terms()[i]);
  for (; j < g.term_count(); ++j) out.push_back(g.terms()[j]);
  PolyVector r(f.context(), f.ordering());
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

inline PolyVector negate(const PolyVector& f) {
  std::vector<Term> out = f.terms();
  for (auto& tm : out) tm.c = field_neg(f.field(), tm.c);
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

inline PolyVector sub(const PolyVector& f, const PolyVector& g) { return add(f, negate(g)); }

inline PolyVector scalar_mul(const Coeff& c, const PolyVector& f) {
  if (c.is_zero()) return zero_poly(f.context(), f.ordering());
  std::vector<Term> out = f.terms();
  for (auto& tm : out) tm.c = field_mul(f.field(), tm.c, c);
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

/// Multiplication by a scalar term (component ignored on the term).
inline PolyVector term_mul(const Term& t, const PolyVector& f) {
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& tm : f.terms())
    out.push_back(Term{field_mul(f.field(), tm.c, t.c), mono_mul(tm.m, t.m)});
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

/// Product of a rank-1 polynomial (all components 1) with a module element.
inline PolyVector mul(const PolyVector& p, const PolyVector& f) {
  detail::require_compatible(p, f);
  for (const auto& tm : p.terms())
    if (tm.m.comp != 1) throw MathError("multiplier must be a rank-1 polynomial");
  std::vector<Term> out;
  out.reserve(p.term_count() * f.term_count());
  const auto& fs = f.field();
  for (const auto& a : p.terms())
    for (const auto& b : f.terms())
      out.push_back(Term{field_mul(fs, a.c, b.c), mono_mul(b.m, a.m)});
  return PolyVector::make(f.context(), f.ordering(), std::move(out));
}

/// Leading data with the zero conventions lm(0) = lc(0) = lt(0) = 0.
struct LeadingData {
  Coeff lc;
  std::optional<Monomial> lm;
  std::optional<Term> lt;
  PolyVector tail;
};

inline LeadingData leading_data(const PolyVector& f) {
  if (f.is_zero())
    return LeadingData{field_zero(f.field()), std::nullopt, std::nullopt, f};
  return LeadingData{f.leading_coefficient(), f.leading_monomial(), f.leading_term(), f.tail()};
}

/// Max |beta| over the terms; -1 plays the role of the -infinity sentinel.
inline int deg_x(const PolyVector& f) {
  int d = -1;
  for (const auto& tm : f.terms()) d = std::max(d, deg_x(tm.m));
  return d;
}

/// True iff all terms share the same x-degree; 0 is homogeneous of every degree.
inline bool is_x_homogeneous(const PolyVector& f) {
  if (f.is_zero()) return true;
  int d = deg_x(f.terms().front().m);
  for (const auto& tm : f.terms())
    if (deg_x(tm.m) != d) return false;
  return true;
}

namespace detail {

inline int deg_fold(const PolyVector& f) {
  int d = -1;
  for (const auto& tm : f.terms()) d = std::max(d, tstd::deg_fold(tm.m));
  return d;
}

inline bool is_fold_homogeneous(const PolyVector& f) {
  if (f.is_zero()) return true;
  int d = tstd::deg_fold(f.terms().front().m);
  for (const auto& tm : f.terms())
    if (tstd::deg_fold(tm.m) != d) return false;
  return true;
}

}  // namespace detail

/// Minimal total t-degree over the terms (INT_MAX for 0); f is in <t>^k
/// exactly when t_order(f) >= k.
inline int t_order(const PolyVector& f) {
  int d = INT_MAX;
  for (const auto& tm : f.terms()) d = std::min(d, deg_t(tm.m));
  return d;
}

/// Normalizes the leading coefficient to 1.
inline PolyVector monic(const PolyVector& f) {
  if (f.is_zero() || f.leading_coefficient().is_one()) return f;
  return scalar_mul(field_inv(f.field(), f.leading_coefficient()), f);
}

/// Deterministic total order on values for sorting generator lists.
inline int compare_polys(const PolyVector& a, const PolyVector& bin) {
  PolyVector b = bin.under(a.ordering());
  const auto& ord = *a.ordering();
  std::size_t n = std::min(a.term_count(), b.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ord.cmp(a.terms()[i].m, b.terms()[i].m);
    if (c != 0) return c;
    if (!(a.terms()[i].c == b.terms()[i].c))
      return coeff_to_string(a.terms()[i].c) < coeff_to_string(b.terms()[i].c) ? -1 : 1;
  }
  if (a.term_count() != b.term_count()) return a.term_count() > b.term_count() ? 1 : -1;
  return 0;
}

}  // namespace tstd

#endif
