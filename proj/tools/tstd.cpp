#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tstd/tstd.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tstd::ParseError("cannot open session file: " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<tstd::PolyVector>& pick_ideal(const tstd::Session& s, const std::string& name) {
  if (!name.empty()) return s.ideal(name);
  if (s.ideals.empty()) throw tstd::MathError("session file defines no ideals");
  return s.ideals.front().second;
}

void warn_zero_gens(const std::vector<tstd::PolyVector>& gens) {
  for (const auto& g : gens)
    if (g.is_zero()) {
      std::cerr << "warning: zero generator dropped\n";
      return;
    }
}

void print_basis(const tstd::GeneratorSet& g) {
  std::vector<tstd::PolyVector> sorted;
  for (const auto& f : g.gens) sorted.push_back(tstd::monic(f));
  std::sort(sorted.begin(), sorted.end(), [](const tstd::PolyVector& a, const tstd::PolyVector& b) {
    return tstd::compare_polys(a, b) > 0;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& f : sorted) std::cout << tstd::print_poly(f) << "\n";
}

std::vector<mpq_class> parse_weight_list(const std::string& text) {
  std::vector<mpq_class> w;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    mpq_class q;
    std::string trimmed;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || q.set_str(trimmed, 10) != 0)
      throw tstd::MathError("invalid weight entry: " + cur);
    q.canonicalize();
    w.push_back(q);
  }
  return w;
}

int saturation_cap() {
  if (const char* env = std::getenv("TSTD_MAX_ITER")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return 1000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact standard bases, division and t-initial ideals in K[t][x]^s"};
  app.require_subcommand(1);

  std::string session_path, ideal_name, other_name;
  std::string poly_text, by_text, vars_text, w_text, order_text;
  std::string mode_text = "weak", global_text = "degrevlex";
  int prec = -1;
  long denom_override = 0;
  bool reduce_flag = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("session", session_path, "session file")->required();
    sub->add_option("--ideal", ideal_name, "generator list to use (default: first)");
    sub->add_option("--order", order_text, "ordering spec overriding the session order");
  };

  CLI::App* c_std = app.add_subcommand("std", "standard basis of an ideal");
  add_common(c_std);
  c_std->add_flag("--reduce", reduce_flag, "minimalize the output (and reduce tails when global)");
  CLI::App* c_check = app.add_subcommand("check", "test whether the generators are a standard basis");
  add_common(c_check);
  CLI::App* c_nf = app.add_subcommand("nf", "weak division with remainder of --poly");
  add_common(c_nf);
  c_nf->add_option("--poly", poly_text, "element to divide")->required();
  c_nf->add_option("--mode", mode_text, "weak (default) or strong");
  CLI::App* c_hddwr = app.add_subcommand("hddwr", "determinate homogeneous division of --poly");
  add_common(c_hddwr);
  c_hddwr->add_option("--poly", poly_text, "homogeneous element to divide")->required();
  c_hddwr->add_option("--prec", prec, "truncate once the residual is in <t>^prec");
  CLI::App* c_member = app.add_subcommand("member", "submodule membership of --poly");
  add_common(c_member);
  c_member->add_option("--poly", poly_text, "element to test")->required();
  CLI::App* c_syz = app.add_subcommand("syz", "Schreyer basis of the syzygy module");
  add_common(c_syz);
  CLI::App* c_elim = app.add_subcommand("eliminate", "eliminate x-variables");
  add_common(c_elim);
  c_elim->add_option("--vars", vars_text, "comma-separated x-variables to drop")->required();
  CLI::App* c_inter = app.add_subcommand("intersect", "intersection with a second ideal");
  add_common(c_inter);
  c_inter->add_option("--other", other_name, "name of the second ideal")->required();
  CLI::App* c_quot = app.add_subcommand("quotient", "ideal quotient by --by");
  add_common(c_quot);
  c_quot->add_option("--by", by_text, "divisor polynomial")->required();
  CLI::App* c_sat = app.add_subcommand("saturate", "saturation by --by");
  add_common(c_sat);
  c_sat->add_option("--by", by_text, "saturating polynomial")->required();
  CLI::App* c_tin = app.add_subcommand("tinitial", "t-initial ideal for a weight vector");
  add_common(c_tin);
  c_tin->add_option("--w", w_text, "weights w_0,...,w_n with w_0 < 0")->required();
  c_tin->add_option("--denom", denom_override, "rescale to this Puiseux denominator");
  c_tin->add_option("--global", global_text, "global tiebreak ordering (lex or degrevlex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    tstd::Session s = tstd::parse_session(read_file(session_path));
    if (!order_text.empty()) {
      s.order_spec = tstd::parse_ordering(order_text);
      s.ord = tstd::compile(s.order_spec, s.ctx);
    }
    const auto& raw = pick_ideal(s, ideal_name);

    if (c_std->parsed()) {
      warn_zero_gens(raw);
      tstd::GeneratorSet g = tstd::standard_basis(tstd::make_generator_set(raw, s.ord));
      if (reduce_flag) g = tstd::interreduce(g);
      print_basis(g);
      return 0;
    }
    if (c_check->parsed()) {
      bool ok = tstd::is_standard_basis(tstd::make_generator_set(raw, s.ord));
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (c_nf->parsed()) {
      tstd::PolyVector f = tstd::parse_poly(s.ctx, s.ord, poly_text);
      warn_zero_gens(raw);
      tstd::DivisionResult d = mode_text == "strong" ? tstd::weak_division_strong(f, raw, s.ord)
                                                     : tstd::weak_division(f, raw, s.ord);
      std::cout << "u = " << tstd::print_poly(d.u) << "\n";
      for (std::size_t i = 0; i < d.q.size(); ++i)
        std::cout << "q[" << i + 1 << "] = " << tstd::print_poly(d.q[i]) << "\n";
      std::cout << "r = " << tstd::print_poly(d.r) << "\n";
      return 0;
    }
    if (c_hddwr->parsed()) {
      tstd::PolyVector f = tstd::parse_poly(s.ctx, s.ord, poly_text);
      tstd::HddwrMode mode =
          prec >= 0 ? tstd::HddwrMode::truncate(prec) : tstd::HddwrMode::folded();
      tstd::DivisionResult d = tstd::homogeneous_division(f, raw, s.ord, mode);
      for (std::size_t i = 0; i < d.q.size(); ++i)
        std::cout << "q[" << i + 1 << "] = " << tstd::print_poly(d.q[i]) << "\n";
      std::cout << "r = " << tstd::print_poly(d.r) << "\n";
      if (prec >= 0) std::cout << "residual = " << tstd::print_poly(d.residual) << "\n";
      return 0;
    }
    if (c_member->parsed()) {
      tstd::PolyVector f = tstd::parse_poly(s.ctx, s.ord, poly_text);
      bool ok = tstd::membership(f, tstd::make_generator_set(raw, s.ord));
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (c_syz->parsed()) {
      tstd::SyzygyBasis sb = tstd::schreyer_syzygies(tstd::make_generator_set(raw, s.ord));
      for (const auto& v : sb.vectors) std::cout << tstd::print_poly_bracket(v) << "\n";
      return 0;
    }
    if (c_elim->parsed()) {
      tstd::EliminationSpec spec;
      std::string cur;
      std::istringstream in(vars_text);
      while (std::getline(in, cur, ',')) {
        std::string trimmed;
        for (char c : cur)
          if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (!trimmed.empty()) spec.drop_vars.push_back(trimmed);
      }
      print_basis(tstd::eliminate(raw, spec, s.order_spec, s.ctx));
      return 0;
    }
    if (c_inter->parsed()) {
      const auto& other = s.ideal(other_name);
      print_basis(tstd::intersect(raw, other, s.order_spec, s.ctx));
      return 0;
    }
    if (c_quot->parsed()) {
      tstd::PolyVector f = tstd::parse_poly(s.ctx, s.ord, by_text);
      print_basis(tstd::ideal_quotient(raw, f, s.order_spec, s.ctx));
      return 0;
    }
    if (c_sat->parsed()) {
      tstd::PolyVector f = tstd::parse_poly(s.ctx, s.ord, by_text);
      print_basis(tstd::saturate(raw, f, s.order_spec, s.ctx, saturation_cap()));
      return 0;
    }
    if (c_tin->parsed()) {
      tstd::WeightVectorW w(parse_weight_list(w_text));
      tstd::OrderingSpec global = tstd::parse_ordering(global_text);
      std::vector<tstd::PolyVector> gens = raw;
      tstd::CtxPtr ctx = s.ctx;
      if (denom_override > 0) {
        if (denom_override % s.ctx->denom != 0)
          throw tstd::MathError("--denom must be a multiple of the session denominator");
        long m = denom_override / s.ctx->denom;
        std::vector<tstd::PolyVector> scaled;
        for (const auto& g : gens) scaled.push_back(tstd::rescale(g, m));
        gens = std::move(scaled);
        std::vector<std::string> tn(ctx->names.begin(), ctx->names.begin() + ctx->tvars);
        std::vector<std::string> xn(ctx->names.begin() + ctx->tvars, ctx->names.end());
        ctx = tstd::make_context(ctx->field, tn, xn, ctx->rank, denom_override);
      }
      tstd::TInitialResult res = tstd::t_initial_ideal(gens, w, global, ctx);
      for (const auto& g : res.gens) std::cout << tstd::print_poly(g) << "\n";
      return 0;
    }
    return 2;
  } catch (const tstd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tstd::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
