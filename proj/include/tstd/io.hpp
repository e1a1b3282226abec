#ifndef TSTD_IO_HPP
#define TSTD_IO_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "tstd/poly.hpp"

namespace tstd {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}

  int line;
  int col;
};

// ---------------------------------------------------------------------------
// Canonical text form. Terms print descending under the active ordering as
// c*t^a*x^b*gen(i) with `^1` omitted and gen(i) omitted when rank is 1;
// parse(print(f)) == f bit-exactly.
// ---------------------------------------------------------------------------

namespace detail {

inline void print_monomial_factors(std::ostream& os, const RingContext& ctx, const Monomial& m,
                                   bool& first) {
  auto emit = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  };
  for (int i = 0; i < ctx.tvars; ++i) emit(ctx.names[i], m.t[i]);
  for (int i = 0; i < ctx.xvars; ++i) emit(ctx.names[ctx.tvars + i], m.x[i]);
  if (ctx.rank > 1) {
    if (!first) os << "*";
    first = false;
    os << "gen(" << m.comp << ")";
  }
}

inline bool coeff_negative(const Coeff& c) { return c.is_rational() && c.rational() < 0; }

inline Coeff coeff_abs(const Coeff& c) {
  if (c.is_rational() && c.rational() < 0) return Coeff(mpq_class(-c.rational()));
  return c;
}

}  // namespace detail

inline std::string print_poly(const PolyVector& f) {
  if (f.is_zero()) return "0";
  const auto& ctx = *f.context();
  std::ostringstream os;
  bool lead = true;
  for (const auto& tm : f.terms()) {
    bool neg = detail::coeff_negative(tm.c);
    if (lead) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    lead = false;
    Coeff mag = detail::coeff_abs(tm.c);
    bool first = true;
    if (!mag.is_one()) {
      os << coeff_to_string(mag);
      first = false;
    }
    detail::print_monomial_factors(os, ctx, tm.m, first);
    if (first) os << "1";
  }
  return os.str();
}

/// Bracket form [p_1, ..., p_s]; used for syzygy output. Component entries
/// keep the term order of f, which is descending under f's ordering.
inline std::string print_poly_bracket(const PolyVector& f) {
  RingContext scalar = *f.context();
  scalar.rank = 1;
  std::ostringstream os;
  os << "[";
  for (int c = 1; c <= f.context()->rank; ++c) {
    if (c > 1) os << ", ";
    bool lead = true;
    for (const auto& tm : f.terms()) {
      if (tm.m.comp != c) continue;
      bool neg = detail::coeff_negative(tm.c);
      if (lead) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      lead = false;
      Coeff mag = detail::coeff_abs(tm.c);
      bool first = true;
      if (!mag.is_one()) {
        os << coeff_to_string(mag);
        first = false;
      }
      detail::print_monomial_factors(os, scalar, tm.m, first);
      if (first) os << "1";
    }
    if (lead) os << "0";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace insignificant):
//   poly   := vector | signed
//   vector := '[' signed (',' signed)* ']'
//   signed := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | name ['^' nat] | 'gen' '(' nat ')'
//   number := nat ['/' nat]
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
 public:
  PolyParser(const CtxPtr& ctx, const OrdPtr& ord, const std::string& text, int line0 = 1,
             int col0 = 1)
      : ctx_(ctx), ord_(ord), s_(text), line_(line0), col0_(col0) {}

  PolyVector parse() {
    skip_ws();
    PolyVector r = peek() == '[' ? parse_vector() : parse_signed(1);
    skip_ws();
    if (i_ < s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = line_, col = col0_;
    for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }

  PolyVector parse_vector() {
    eat('[');
    if (ctx_->rank < 1) fail("vector form in a rank-0 context");
    std::vector<Term> all;
    int comp = 1;
    while (true) {
      PolyVector p = parse_signed(comp);
      for (auto tm : p.terms()) {
        if (tm.m.comp != comp) fail("gen(i) inside a vector entry");
        all.push_back(std::move(tm));
      }
      if (eat(',')) {
        ++comp;
        continue;
      }
      break;
    }
    if (!eat(']')) fail("expected ']'");
    if (comp != ctx_->rank) fail("vector arity does not match module rank");
    return PolyVector::make(ctx_, ord_, std::move(all));
  }

  PolyVector parse_signed(int default_comp) {
    std::vector<Term> terms;
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      Term t = parse_term(default_comp);
      if (neg) t.c = field_neg(ctx_->field, t.c);
      if (!t.c.is_zero()) terms.push_back(std::move(t));
      skip_ws();
      if (eat('-')) {
        neg = true;
      } else if (eat('+')) {
        neg = false;
      } else {
        break;
      }
    }
    return PolyVector::make(ctx_, ord_, std::move(terms));
  }

  Term parse_term(int default_comp) {
    Term t{field_one(ctx_->field), mono_one(*ctx_, default_comp)};
    bool have_factor = false;
    bool comp_set = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.c = field_mul(ctx_->field, t.c, parse_number());
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
        parse_var_factor(t, comp_set);
        have_factor = true;
      } else {
        if (!have_factor) fail("expected term");
        break;
      }
      if (!eat('*')) break;
    }
    return t;
  }

  Coeff parse_number() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string text = s_.substr(start, i_ - start);
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      std::size_t dstart = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == dstart) fail("expected denominator");
      text += "/" + s_.substr(dstart, i_ - dstart);
    }
    try {
      return parse_coeff(ctx_->field, text);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  void parse_var_factor(Term& t, bool& comp_set) {
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '@')) {
      ++i_;
    }
    std::string name = s_.substr(start, i_ - start);
    if (name == "gen") {
      if (!eat('(')) fail("expected '(' after gen");
      int idx = parse_nat();
      if (!eat(')')) fail("expected ')'");
      if (idx < 1 || idx > ctx_->rank) fail("gen index out of range");
      if (comp_set && t.m.comp != idx) fail("conflicting gen(i) factors");
      t.m.comp = idx;
      comp_set = true;
      return;
    }
    auto it = std::find(ctx_->names.begin(), ctx_->names.end(), name);
    if (it == ctx_->names.end()) fail("unknown variable: " + name);
    int pos = static_cast<int>(it - ctx_->names.begin());
    int e = 1;
    if (eat('^')) e = parse_nat();
    if (pos < ctx_->tvars)
      t.m.t[pos] += e;
    else
      t.m.x[pos - ctx_->tvars] += e;
  }

  int parse_nat() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("expected natural number");
    long v = 0;
    for (std::size_t k = start; k < i_; ++k) {
      v = v * 10 + (s_[k] - '0');
      if (v > INT_MAX) fail("exponent too large");
    }
    return static_cast<int>(v);
  }

  CtxPtr ctx_;
  OrdPtr ord_;
  const std::string& s_;
  std::size_t i_ = 0;
  int line_;
  int col0_;
};

}  // namespace detail

inline PolyVector parse_poly(const CtxPtr& ctx, const OrdPtr& ord, const std::string& text) {
  return detail::PolyParser(ctx, ord, text).parse();
}

}  // namespace tstd

#endif
