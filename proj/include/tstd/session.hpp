#ifndef TSTD_SESSION_HPP
#define TSTD_SESSION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tstd/io.hpp"

namespace tstd {

/// Parsed session file: ring block, ordering, and named generator lists.
///
///   ring {
///     field QQ           # or: field F 32003
///     tvars t
///     xvars x y
///     rank 1             # optional, default 1
///     denom 1            # optional, default 1
///   }
///   order lex
///   ideal I {
///     x - t
///     y - t
///   }
///
/// `#` starts a comment; unknown keys are rejected.
struct Session {
  CtxPtr ctx;
  OrderingSpec order_spec;
  OrdPtr ord;
  std::vector<std::pair<std::string, std::vector<PolyVector>>> ideals;

  const std::vector<PolyVector>& ideal(const std::string& name) const {
    for (const auto& [n, gens] : ideals)
      if (n == name) return gens;
    throw MathError("no such ideal in session: " + name);
  }
};

namespace detail {

struct SessionLine {
  std::string text;
  int number = 0;
};

inline std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

inline Session parse_session(const std::string& text) {
  std::vector<detail::SessionLine> lines;
  {
    std::string cur;
    int n = 1;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n') {
        auto hash = cur.find('#');
        if (hash != std::string::npos) cur.erase(hash);
        lines.push_back({cur, n});
        cur.clear();
        ++n;
      } else {
        cur += text[i];
      }
    }
  }

  Session s;
  bool have_ring = false, have_order = false;
  std::string field_kind;
  std::uint32_t field_p = 0;
  std::vector<std::string> tnames, xnames;
  int rank = 1;
  long denom = 1;
  bool have_field = false, have_xvars = false, have_tvars = false;

  std::size_t li = 0;
  auto next_words = [&](bool required) -> std::pair<std::vector<std::string>, int> {
    while (li < lines.size()) {
      auto words = detail::split_words(lines[li].text);
      int num = lines[li].number;
      ++li;
      if (!words.empty()) return {words, num};
    }
    if (required) throw ParseError("unexpected end of session file", static_cast<int>(lines.size()), 1);
    return {{}, 0};
  };

  while (true) {
    auto [words, num] = next_words(false);
    if (words.empty()) break;
    const std::string& key = words[0];
    if (key == "ring") {
      if (have_ring) throw ParseError("duplicate ring block", num, 1);
      if (words.size() != 2 || words[1] != "{") throw ParseError("expected 'ring {'", num, 1);
      while (true) {
        auto [w, n2] = next_words(true);
        if (w[0] == "}") {
          if (w.size() != 1) throw ParseError("unexpected input after '}'", n2, 1);
          break;
        }
        if (w[0] == "field") {
          if (w.size() == 2 && w[1] == "QQ") {
            field_kind = "QQ";
          } else if (w.size() == 3 && w[1] == "F") {
            field_kind = "F";
            try {
              field_p = static_cast<std::uint32_t>(std::stoul(w[2]));
            } catch (...) {
              throw ParseError("invalid characteristic: " + w[2], n2, 1);
            }
          } else {
            throw ParseError("expected 'field QQ' or 'field F <p>'", n2, 1);
          }
          have_field = true;
        } else if (w[0] == "tvars") {
          tnames.assign(w.begin() + 1, w.end());
          have_tvars = true;
        } else if (w[0] == "xvars") {
          xnames.assign(w.begin() + 1, w.end());
          have_xvars = true;
        } else if (w[0] == "rank") {
          if (w.size() != 2) throw ParseError("expected 'rank <n>'", n2, 1);
          rank = std::stoi(w[1]);
        } else if (w[0] == "denom") {
          if (w.size() != 2) throw ParseError("expected 'denom <n>'", n2, 1);
          denom = std::stol(w[1]);
        } else {
          throw ParseError("unknown ring key: " + w[0], n2, 1);
        }
      }
      if (!have_field) throw ParseError("ring block missing field", num, 1);
      if (!have_xvars && !have_tvars) throw ParseError("ring block missing variables", num, 1);
      for (const auto& v : tnames)
        if (!detail::valid_var_name(v)) throw ParseError("invalid variable name: " + v, num, 1);
      for (const auto& v : xnames)
        if (!detail::valid_var_name(v)) throw ParseError("invalid variable name: " + v, num, 1);
      try {
        FieldSpec fs = field_kind == "QQ" ? FieldSpec::rationals() : FieldSpec::prime_field(field_p);
        s.ctx = make_context(fs, tnames, xnames, rank, denom);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), num, 1);
      }
      have_ring = true;
    } else if (key == "order") {
      if (!have_ring) throw ParseError("order before ring block", num, 1);
      if (have_order) throw ParseError("duplicate order line", num, 1);
      std::string rest = lines[li - 1].text;
      rest = rest.substr(rest.find("order") + 5);
      try {
        s.order_spec = parse_ordering(rest);
        s.ord = compile(s.order_spec, s.ctx);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), num, 1);
      }
      have_order = true;
    } else if (key == "ideal") {
      if (!have_order) throw ParseError("ideal before order line", num, 1);
      if (words.size() != 3 || words[2] != "{")
        throw ParseError("expected 'ideal <name> {'", num, 1);
      const std::string& name = words[1];
      for (const auto& [n, _] : s.ideals)
        if (n == name) throw ParseError("duplicate ideal name: " + name, num, 1);
      std::vector<PolyVector> gens;
      while (true) {
        auto [w, n2] = next_words(true);
        if (w[0] == "}") break;
        std::string line = lines[li - 1].text;
        gens.push_back(detail::PolyParser(s.ctx, s.ord, line, n2, 1).parse());
      }
      s.ideals.emplace_back(name, std::move(gens));
    } else {
      throw ParseError("unknown session key: " + key, num, 1);
    }
  }
  if (!have_ring) throw ParseError("session file has no ring block", 1, 1);
  if (!have_order) throw ParseError("session file has no order line", 1, 1);
  return s;
}

}  // namespace tstd

#endif
