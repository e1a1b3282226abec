#ifndef TSTD_ORDERING_HPP
#define TSTD_ORDERING_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "tstd/ring.hpp"

namespace tstd {

class OrderingError : public MathError {
 public:
  using MathError::MathError;
};

/// Declarative description of a t-local (module) monomial ordering. Compiled
/// against a RingContext into a total comparator.
struct OrderingSpec {
  enum class Kind { Lex, Degrevlex, Weight, Block, Module, TInitial };

  Kind kind = Kind::Lex;
  std::vector<mpq_class> weights;       // Weight, TInitial
  std::vector<std::string> outer_vars;  // Block
  bool component_first = false;         // Module
  std::shared_ptr<const OrderingSpec> sub;  // Weight tiebreak / Block inner / Module base / TInitial global

  static OrderingSpec lex() { return OrderingSpec{}; }
  static OrderingSpec degrevlex() {
    OrderingSpec s;
    s.kind = Kind::Degrevlex;
    return s;
  }
  static OrderingSpec weight(std::vector<mpq_class> w, OrderingSpec then) {
    OrderingSpec s;
    s.kind = Kind::Weight;
    s.weights = std::move(w);
    s.sub = std::make_shared<OrderingSpec>(std::move(then));
    return s;
  }
  static OrderingSpec block(std::vector<std::string> outer, OrderingSpec inner) {
    OrderingSpec s;
    s.kind = Kind::Block;
    s.outer_vars = std::move(outer);
    s.sub = std::make_shared<OrderingSpec>(std::move(inner));
    return s;
  }
  static OrderingSpec module_ext(OrderingSpec base, bool comp_first) {
    OrderingSpec s;
    s.kind = Kind::Module;
    s.component_first = comp_first;
    s.sub = std::make_shared<OrderingSpec>(std::move(base));
    return s;
  }
  static OrderingSpec t_initial(std::vector<mpq_class> w, OrderingSpec global) {
    OrderingSpec s;
    s.kind = Kind::TInitial;
    s.weights = std::move(w);
    s.sub = std::make_shared<OrderingSpec>(std::move(global));
    return s;
  }
};

namespace detail {

// Comparator on the monomial part (t,x), components ignored.
class MonoOrd {
 public:
  virtual ~MonoOrd() = default;
  virtual int cmp(const Monomial& a, const Monomial& b) const = 0;
  // Structural t-locality: t_i < 1 for every t-variable.
  virtual bool t_local() const = 0;
  // Structural globality on the x-block: x_i > 1 for every x-variable.
  virtual bool global_x() const = 0;
};

using MonoPtr = std::shared_ptr<const MonoOrd>;

// x-block lex first; ties fall to the t-block where fewer t's win.
class LexMono final : public MonoOrd {
 public:
  int cmp(const Monomial& a, const Monomial& b) const override {
    for (std::size_t i = 0; i < a.x.size(); ++i)
      if (a.x[i] != b.x[i]) return a.x[i] > b.x[i] ? 1 : -1;
    for (std::size_t i = 0; i < a.t.size(); ++i)
      if (a.t[i] != b.t[i]) return a.t[i] < b.t[i] ? 1 : -1;
    return 0;
  }
  bool t_local() const override { return true; }
  bool global_x() const override { return true; }
};

// Degree-reverse-lex on the x-block, t-local lex on the t-block as tiebreak.
class DegrevlexMono final : public MonoOrd {
 public:
  int cmp(const Monomial& a, const Monomial& b) const override {
    int da = deg_x(a), db = deg_x(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.x.size(); i-- > 0;)
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i] ? 1 : -1;
    for (std::size_t i = 0; i < a.t.size(); ++i)
      if (a.t[i] != b.t[i]) return a.t[i] < b.t[i] ? 1 : -1;
    return 0;
  }
  bool t_local() const override { return true; }
  bool global_x() const override { return true; }
};

class WeightMono final : public MonoOrd {
 public:
  WeightMono(int tvars, std::vector<mpq_class> w, MonoPtr then)
      : tvars_(tvars), w_(std::move(w)), then_(std::move(then)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    mpq_class wa = dot(a), wb = dot(b);
    int c = ::cmp(wa, wb);
    if (c != 0) return c > 0 ? 1 : -1;
    return then_->cmp(a, b);
  }
  bool t_local() const override {
    for (int i = 0; i < tvars_; ++i)
      if (w_[i] > 0) return false;
    return then_->t_local();
  }
  bool global_x() const override {
    for (std::size_t i = tvars_; i < w_.size(); ++i)
      if (w_[i] < 0) return false;
    return then_->global_x();
  }

 private:
  mpq_class dot(const Monomial& m) const {
    mpq_class s = 0;
    for (std::size_t i = 0; i < m.t.size(); ++i)
      if (m.t[i] != 0) s += w_[i] * m.t[i];
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i] != 0) s += w_[m.t.size() + i] * m.x[i];
    return s;
  }

  int tvars_;
  std::vector<mpq_class> w_;
  MonoPtr then_;
};

// Elimination block: degrevlex on the selected x-variables first, then the
// inner ordering (outer exponents are equal at that point).
class BlockMono final : public MonoOrd {
 public:
  BlockMono(std::vector<int> outer_x, MonoPtr inner)
      : outer_(std::move(outer_x)), inner_(std::move(inner)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    int da = 0, db = 0;
    for (int i : outer_) {
      da += a.x[i];
      db += b.x[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = outer_.size(); k-- > 0;) {
      int i = outer_[k];
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i] ? 1 : -1;
    }
    return inner_->cmp(a, b);
  }
  bool t_local() const override { return inner_->t_local(); }
  bool global_x() const override { return inner_->global_x(); }

 private:
  std::vector<int> outer_;
  MonoPtr inner_;
};

// Weighted refinement of a fixed global ordering on Mon(x); the t-exponent
// enters the weight as alpha/denom. Requires exactly one t-variable.
class TInitialMono final : public MonoOrd {
 public:
  TInitialMono(std::vector<mpq_class> w, long denom, MonoPtr global)
      : w_(std::move(w)), denom_(denom), global_(std::move(global)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    mpq_class wa = dot(a), wb = dot(b);
    int c = ::cmp(wa, wb);
    if (c != 0) return c > 0 ? 1 : -1;
    return global_->cmp(a, b);
  }
  bool t_local() const override { return true; }  // w_0 < 0 enforced at compile
  bool global_x() const override { return false; }

 private:
  mpq_class dot(const Monomial& m) const {
    mpq_class s = 0;
    if (m.t[0] != 0) s += w_[0] * m.t[0] / denom_;
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i] != 0) s += w_[1 + i] * m.x[i];
    return s;
  }

  std::vector<mpq_class> w_;
  long denom_;
  MonoPtr global_;
};

}  // namespace detail

/// A compiled strict total order on module monomials, bound to its context.
class CompiledOrdering {
 public:
  virtual ~CompiledOrdering() = default;

  /// Three-way compare: 1 if a > b, 0 if equal, -1 if a < b.
  virtual int cmp(const Monomial& a, const Monomial& b) const = 0;
  virtual bool t_local() const = 0;
  virtual bool global_x() const { return false; }

  const CtxPtr& context() const { return ctx_; }

 protected:
  explicit CompiledOrdering(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  CtxPtr ctx_;
};

using OrdPtr = std::shared_ptr<const CompiledOrdering>;

namespace detail {

class ModuleOrd final : public CompiledOrdering {
 public:
  ModuleOrd(CtxPtr ctx, MonoPtr mono, bool component_first)
      : CompiledOrdering(std::move(ctx)), mono_(std::move(mono)), comp_first_(component_first) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    if (comp_first_) {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return mono_->cmp(a, b);
    }
    int c = mono_->cmp(a, b);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  bool t_local() const override { return mono_->t_local(); }
  bool global_x() const override { return mono_->global_x(); }

 private:
  MonoPtr mono_;
  bool comp_first_;
};

// Weight vector of length m+n+s: compares w.(alpha, beta, e_i) first.
class ModuleWeightOrd final : public CompiledOrdering {
 public:
  ModuleWeightOrd(CtxPtr ctx, std::vector<mpq_class> w, OrdPtr then)
      : CompiledOrdering(std::move(ctx)), w_(std::move(w)), then_(std::move(then)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    mpq_class wa = dot(a), wb = dot(b);
    int c = ::cmp(wa, wb);
    if (c != 0) return c > 0 ? 1 : -1;
    return then_->cmp(a, b);
  }
  bool t_local() const override {
    for (int i = 0; i < ctx_->tvars; ++i)
      if (w_[i] > 0) return false;
    return then_->t_local();
  }

 private:
  mpq_class dot(const Monomial& m) const {
    mpq_class s = 0;
    for (std::size_t i = 0; i < m.t.size(); ++i)
      if (m.t[i] != 0) s += w_[i] * m.t[i];
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i] != 0) s += w_[m.t.size() + i] * m.x[i];
    s += w_[m.t.size() + m.x.size() + (m.comp - 1)];
    return s;
  }

  std::vector<mpq_class> w_;
  OrdPtr then_;
};

// u*eps_i > v*eps_j iff u*lm(g_i) > v*lm(g_j) under the base ordering, ties
// by smaller index. Lives on the rank-k context over the same variables.
class SchreyerOrd final : public CompiledOrdering {
 public:
  SchreyerOrd(CtxPtr syz_ctx, OrdPtr base, std::vector<Monomial> leads)
      : CompiledOrdering(std::move(syz_ctx)), base_(std::move(base)), leads_(std::move(leads)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    Monomial pa = mono_mul(leads_[a.comp - 1], a);
    Monomial pb = mono_mul(leads_[b.comp - 1], b);
    int c = base_->cmp(pa, pb);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  bool t_local() const override { return base_->t_local(); }

 private:
  OrdPtr base_;
  std::vector<Monomial> leads_;
};

// Ordering on the context extended by the homogenizing variable (x slot 0):
// degree in (homogenizing variable + x-block [+ t-block when folding]) first,
// base ordering on the stripped monomial as tiebreak.
class HomogenizedOrd final : public CompiledOrdering {
 public:
  HomogenizedOrd(CtxPtr hctx, OrdPtr base, bool fold_t)
      : CompiledOrdering(std::move(hctx)), base_(std::move(base)), fold_(fold_t) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    int da = hdeg(a), db = hdeg(b);
    if (da != db) return da > db ? 1 : -1;
    return base_->cmp(strip(a), strip(b));
  }
  bool t_local() const override { return base_->t_local(); }
  const OrdPtr& base() const { return base_; }

 private:
  int hdeg(const Monomial& m) const {
    int d = 0;
    for (int e : m.x) d += e;
    if (fold_) d += deg_t(m);
    return d;
  }
  static Monomial strip(const Monomial& m) {
    Monomial r{m.t, std::vector<int>(m.x.begin() + 1, m.x.end()), m.comp};
    return r;
  }

  OrdPtr base_;
  bool fold_;
};

// Rank-lowered view of a base ordering through a component map.
class RemapOrd final : public CompiledOrdering {
 public:
  RemapOrd(CtxPtr ctx, OrdPtr base, std::vector<int> comp_map)
      : CompiledOrdering(std::move(ctx)), base_(std::move(base)), map_(std::move(comp_map)) {}

  int cmp(const Monomial& a, const Monomial& b) const override {
    Monomial a2 = a, b2 = b;
    a2.comp = map_[a.comp - 1];
    b2.comp = map_[b.comp - 1];
    return base_->cmp(a2, b2);
  }
  bool t_local() const override { return base_->t_local(); }

 private:
  OrdPtr base_;
  std::vector<int> map_;
};

inline MonoPtr compile_mono(const OrderingSpec& spec, const RingContext& ctx) {
  switch (spec.kind) {
    case OrderingSpec::Kind::Lex:
      return std::make_shared<LexMono>();
    case OrderingSpec::Kind::Degrevlex:
      return std::make_shared<DegrevlexMono>();
    case OrderingSpec::Kind::Weight: {
      if (static_cast<int>(spec.weights.size()) != ctx.tvars + ctx.xvars)
        throw OrderingError("weight vector has wrong length");
      if (!spec.sub) throw OrderingError("weight ordering needs an explicit tiebreak");
      return std::make_shared<WeightMono>(ctx.tvars, spec.weights, compile_mono(*spec.sub, ctx));
    }
    case OrderingSpec::Kind::Block: {
      if (spec.outer_vars.empty()) throw OrderingError("block ordering needs outer variables");
      std::vector<int> idx;
      for (const auto& name : spec.outer_vars) {
        auto it = std::find(ctx.names.begin(), ctx.names.end(), name);
        if (it == ctx.names.end()) throw OrderingError("unknown variable in block ordering: " + name);
        int pos = static_cast<int>(it - ctx.names.begin());
        if (pos < ctx.tvars)
          throw OrderingError("cannot eliminate local variables");
        idx.push_back(pos - ctx.tvars);
      }
      if (!spec.sub) throw OrderingError("block ordering needs an inner ordering");
      return std::make_shared<BlockMono>(std::move(idx), compile_mono(*spec.sub, ctx));
    }
    case OrderingSpec::Kind::TInitial: {
      if (ctx.tvars != 1) throw OrderingError("t-initial ordering needs exactly one t-variable");
      if (static_cast<int>(spec.weights.size()) != 1 + ctx.xvars)
        throw OrderingError("weight vector has wrong length");
      if (spec.weights[0] >= 0) throw OrderingError("t-initial weight w_0 must be negative");
      if (!spec.sub) throw OrderingError("t-initial ordering needs a global tiebreak");
      MonoPtr global = compile_mono(*spec.sub, ctx);
      if (!global->global_x()) throw OrderingError("t-initial tiebreak must be a global ordering");
      return std::make_shared<TInitialMono>(spec.weights, ctx.denom, std::move(global));
    }
    case OrderingSpec::Kind::Module:
      throw OrderingError("module(...) must be the outermost ordering");
  }
  throw OrderingError("unreachable ordering kind");
}

}  // namespace detail

/// Compiles a spec against a context; rejects specs that are not t-local.
inline OrdPtr compile(const OrderingSpec& spec, const CtxPtr& ctx) {
  OrdPtr ord;
  if (spec.kind == OrderingSpec::Kind::Module) {
    ord = std::make_shared<detail::ModuleOrd>(ctx, detail::compile_mono(*spec.sub, *ctx),
                                              spec.component_first);
  } else if (spec.kind == OrderingSpec::Kind::Weight &&
             static_cast<int>(spec.weights.size()) == ctx->tvars + ctx->xvars + ctx->rank) {
    if (!spec.sub) throw OrderingError("weight ordering needs an explicit tiebreak");
    ord = std::make_shared<detail::ModuleWeightOrd>(ctx, spec.weights, compile(*spec.sub, ctx));
  } else {
    ord = std::make_shared<detail::ModuleOrd>(ctx, detail::compile_mono(spec, *ctx), false);
  }
  if (!ord->t_local()) throw OrderingError("ordering not t-local");
  return ord;
}

inline bool is_t_local(const OrdPtr& ord) { return ord->t_local(); }

/// Context extended by the homogenizing variable at x slot 0.
inline CtxPtr homogenization_context(const CtxPtr& ctx) {
  std::vector<std::string> tnames(ctx->names.begin(), ctx->names.begin() + ctx->tvars);
  std::vector<std::string> xnames;
  xnames.push_back("@h");
  xnames.insert(xnames.end(), ctx->names.begin() + ctx->tvars, ctx->names.end());
  return make_context(ctx->field, std::move(tnames), std::move(xnames), ctx->rank, ctx->denom);
}

/// Homogenisation of an ordering: x-degree (with the new variable) first,
/// base as tiebreak. Lives on homogenization_context(base->context()).
inline OrdPtr homogenized(const OrdPtr& base) {
  return std::make_shared<detail::HomogenizedOrd>(homogenization_context(base->context()), base,
                                                  false);
}

namespace detail {
// Variant used by the division engine where t counts into the degree.
inline OrdPtr homogenized_folded(const OrdPtr& base) {
  return std::make_shared<HomogenizedOrd>(homogenization_context(base->context()), base, true);
}
}  // namespace detail

/// Rank-k context over the same variables, for syzygy data.
inline CtxPtr syzygy_context(const CtxPtr& ctx, int k) {
  std::vector<std::string> tnames(ctx->names.begin(), ctx->names.begin() + ctx->tvars);
  std::vector<std::string> xnames(ctx->names.begin() + ctx->tvars, ctx->names.end());
  return make_context(ctx->field, std::move(tnames), std::move(xnames), k, ctx->denom);
}

/// Schreyer ordering induced by a base ordering and the leading monomials of
/// a generator list; one epsilon slot per lead.
inline OrdPtr schreyer(const OrdPtr& base, const std::vector<Monomial>& leads) {
  if (leads.empty()) throw OrderingError("schreyer ordering needs at least one lead");
  return std::make_shared<detail::SchreyerOrd>(
      syzygy_context(base->context(), static_cast<int>(leads.size())), base, leads);
}

/// The >_w ordering of a weight vector (w_0,...,w_n), w_0 < 0, refining a
/// global ordering on Mon(x). Context must have exactly one t-variable.
inline OrdPtr tinitial_ordering(const std::vector<mpq_class>& w, const OrderingSpec& global_x,
                                const CtxPtr& ctx) {
  return compile(OrderingSpec::t_initial(w, global_x), ctx);
}

namespace detail {
inline OrdPtr remap_components(const CtxPtr& ctx, const OrdPtr& base, std::vector<int> comp_map) {
  return std::make_shared<RemapOrd>(ctx, base, std::move(comp_map));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Spec-string parsing:
//   lex | degrevlex | ws(w1,...,wk) <spec> | block(v1,v2 | <spec>)
//   | module(c, <spec>) | module(<spec>, c) | tw(w0,...,wn ; <spec>)
// ---------------------------------------------------------------------------

namespace detail {

struct SpecCursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw OrderingError(std::string("expected '") + c + "' in ordering spec");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (i == start) throw OrderingError("expected identifier in ordering spec");
    return s.substr(start, i - start);
  }
  mpq_class rational() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i == start) throw OrderingError("expected rational number in ordering spec");
    mpq_class q;
    if (q.set_str(s.substr(start, i - start), 10) != 0)
      throw OrderingError("invalid rational in ordering spec: " + s.substr(start, i - start));
    q.canonicalize();
    return q;
  }
};

inline OrderingSpec parse_spec(SpecCursor& cur);

inline std::vector<mpq_class> parse_weights(SpecCursor& cur, char stop) {
  std::vector<mpq_class> w;
  w.push_back(cur.rational());
  while (cur.eat(',')) w.push_back(cur.rational());
  cur.expect(stop);
  return w;
}

inline OrderingSpec parse_spec(SpecCursor& cur) {
  std::string head = cur.ident();
  if (head == "lex") return OrderingSpec::lex();
  if (head == "degrevlex") return OrderingSpec::degrevlex();
  if (head == "ws") {
    cur.expect('(');
    auto w = parse_weights(cur, ')');
    return OrderingSpec::weight(std::move(w), parse_spec(cur));
  }
  if (head == "block") {
    cur.expect('(');
    std::vector<std::string> outer;
    outer.push_back(cur.ident());
    while (cur.eat(',')) outer.push_back(cur.ident());
    cur.expect('|');
    OrderingSpec inner = parse_spec(cur);
    cur.expect(')');
    return OrderingSpec::block(std::move(outer), std::move(inner));
  }
  if (head == "module") {
    cur.expect('(');
    cur.skip_ws();
    bool comp_first = false;
    OrderingSpec base;
    if (cur.s.compare(cur.i, 2, "c,") == 0 || cur.s.compare(cur.i, 2, "c ") == 0) {
      cur.ident();
      cur.expect(',');
      comp_first = true;
      base = parse_spec(cur);
    } else {
      base = parse_spec(cur);
      cur.expect(',');
      if (cur.ident() != "c") throw OrderingError("expected 'c' in module(...)");
    }
    cur.expect(')');
    return OrderingSpec::module_ext(std::move(base), comp_first);
  }
  if (head == "tw") {
    cur.expect('(');
    auto w = parse_weights(cur, ';');
    OrderingSpec global = parse_spec(cur);
    cur.expect(')');
    return OrderingSpec::t_initial(std::move(w), std::move(global));
  }
  throw OrderingError("unknown ordering: " + head);
}

}  // namespace detail

namespace detail {

// Rewrites a spec for a context that gained an x-variable at x-slot x_pos:
// positional weight vectors get a zero entry for the new variable, name-based
// and positional-free specs pass through.
inline OrderingSpec spec_with_inserted_xvar(const OrderingSpec& spec, int tvars, int x_pos) {
  OrderingSpec out = spec;
  if (spec.sub)
    out.sub = std::make_shared<OrderingSpec>(spec_with_inserted_xvar(*spec.sub, tvars, x_pos));
  if (spec.kind == OrderingSpec::Kind::Weight)
    out.weights.insert(out.weights.begin() + tvars + x_pos, mpq_class(0));
  else if (spec.kind == OrderingSpec::Kind::TInitial)
    out.weights.insert(out.weights.begin() + 1 + x_pos, mpq_class(0));
  return out;
}

}  // namespace detail

inline OrderingSpec parse_ordering(const std::string& text) {
  detail::SpecCursor cur{text};
  OrderingSpec spec = detail::parse_spec(cur);
  cur.skip_ws();
  if (cur.i != text.size()) throw OrderingError("trailing input in ordering spec: " + text);
  return spec;
}

inline OrdPtr compile(const std::string& text, const CtxPtr& ctx) {
  return compile(parse_ordering(text), ctx);
}

}  // namespace tstd

#endif
