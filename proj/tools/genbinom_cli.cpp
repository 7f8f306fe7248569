#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "genbinom/binomial_basis.hpp"
#include "genbinom/coefficients.hpp"
#include "genbinom/hook_psi.hpp"
#include "genbinom/identities.hpp"
#include "genbinom/latex.hpp"

using namespace genbinom;
using nlohmann::json;

namespace {

enum class Format { json, csv, latex };

struct RunConfig {
  int k = 0;
  int max_k = 10;
  int table_max_k = 8;
  int max_n = 20;
  int max_r = 10;
  int order = 40;
  int r = 1;
  int s = 0;
  unsigned threads = 0;
  std::string x_value, t_value;
  std::string identity = "all";
  std::string format = "json";
  std::string output_path;
  bool negative_controls = false;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::latex;
}

std::string csv_poly(const PolyT& p) { return "\"" + p.str() + "\""; }

int cmd_coeff(const RunConfig& cfg, bool format_given, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  const std::optional<Rational> x = cfg.x_value.empty() ? std::nullopt : std::optional(Rational::parse(cfg.x_value));
  const std::optional<Rational> t = cfg.t_value.empty() ? std::nullopt : std::optional(Rational::parse(cfg.t_value));

  if (x) {
    const PolyT value = genbinom_at(*x, cfg.k);
    if (t) {
      const Rational v = value.eval(*t);
      // A bare number unless a format was asked for.
      if (format_given && fmt == Format::json) out << json(v).dump() << '\n';
      else if (format_given && fmt == Format::latex) out << latex::rational(v) << '\n';
      else out << v.str() << '\n';
      return 0;
    }
    switch (fmt) {
      case Format::json: out << json(value).dump() << '\n'; break;
      case Format::latex: out << latex::poly(value) << '\n'; break;
      case Format::csv:
        out << "t_power,coeff\n";
        for (int p = 0; p <= value.degree(); ++p) out << p << ',' << value.coeff(p).str() << '\n';
        break;
    }
    return 0;
  }

  PolyXT value = genbinom_symbolic(cfg.k);
  if (t) value = value.eval_t(*t);
  switch (fmt) {
    case Format::json: out << json(value).dump() << '\n'; break;
    case Format::latex: out << latex::binomial_form(to_binomial_basis(value)) << '\n'; break;
    case Format::csv:
      out << "x_power,t_power,coeff\n";
      for (int i = 0; i <= value.deg_x(); ++i)
        for (int p = 0; p <= value.row(i).degree(); ++p)
          if (!value.coeff(i, p).is_zero()) out << i << ',' << p << ',' << value.coeff(i, p).str() << '\n';
      break;
  }
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  bool all_agree = true;
  if (fmt == Format::csv) out << "k,i,method1,method2,agree\n";
  if (fmt == Format::latex) out << "\\begin{tabular}{rrll}\n$k$ & $i$ & $c_i(k)$ & agree \\\\\n\\hline\n";
  for (int k = 1; k <= cfg.table_max_k; ++k) {
    const BinomialExpansion a = expansion_method1(k), b = expansion_method2(k);
    for (int i = 1; i <= k; ++i) {
      const bool agree = a.coeff(i) == b.coeff(i);
      all_agree = all_agree && agree;
      switch (fmt) {
        case Format::json:
          out << json{{"k", k}, {"i", i}, {"method1", a.coeff(i)}, {"method2", b.coeff(i)}, {"agree", agree}}.dump()
              << '\n';
          break;
        case Format::csv:
          out << k << ',' << i << ',' << csv_poly(a.coeff(i)) << ',' << csv_poly(b.coeff(i)) << ','
              << (agree ? "true" : "false") << '\n';
          break;
        case Format::latex:
          out << k << " & " << i << " & $" << latex::poly(a.coeff(i)) << "$ & " << (agree ? "yes" : "no")
              << " \\\\\n";
          break;
      }
    }
  }
  if (fmt == Format::latex) out << "\\end{tabular}\n";
  if (!all_agree) std::cerr << "table: the two methods disagree\n";
  return all_agree ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SweepLimits lim;
  lim.order = cfg.order;
  lim.max_k = cfg.max_k;
  lim.max_n = cfg.max_n;
  lim.max_r = cfg.max_r;
  const auto reports = run_sweep(cfg.identity, lim, cfg.negative_controls, cfg.threads);
  std::size_t held = 0;
  for (const auto& r : reports) {
    held += r.holds ? 1 : 0;
    out << json(r).dump() << '\n';
  }
  std::cerr << held << " of " << reports.size() << " checks hold\n";
  // Negative controls succeed when every mutated identity is rejected.
  return cfg.negative_controls ? (held == 0 ? 0 : 1) : (held == reports.size() ? 0 : 1);
}

std::vector<IdentityReport> psi_checks(int r, int s) {
  std::vector<IdentityReport> out;
  switch (s) {
    case 0: out.push_back(verify_system_s0(r)); break;
    case 1: out.push_back(verify_system_s1(r)); break;
    default: out.push_back(verify_system_s2(r)); break;
  }
  out.push_back(verify_initial_condition(r, s));
  if (r > 1 || s > 0) out.push_back(verify_t_equal_one(r, s));
  return out;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  if (cfg.r < 1) throw CLI::ValidationError("--r", "must be >= 1");
  const HookSolution h = psi_hook(cfg.r, cfg.s);
  const auto checks = psi_checks(cfg.r, cfg.s);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.holds;
  switch (parse_format(cfg.format)) {
    case Format::json: out << json{{"solution", h}, {"checks", checks}}.dump() << '\n'; break;
    case Format::latex:
      out << latex::hook_solution(h) << '\n';
      for (const auto& c : checks) out << "% " << c.identity_id << ": " << (c.holds ? "holds" : "fails") << '\n';
      break;
    case Format::csv:
      out << "exponent,coeff\n";
      for (auto it = h.body.terms().rbegin(); it != h.body.terms().rend(); ++it)
        out << it->first << ',' << csv_poly(it->second * h.scale.inverse()) << '\n';
      break;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized binomial coefficients, exact identity checks and hook solutions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->envname("GENBINOM_FORMAT");
    sub->add_option("-o,--output", cfg.output_path, "write to this file instead of stdout");
  };

  auto* coeff = app.add_subcommand("coeff", "print <x,k>, optionally at x and/or t");
  coeff->add_option("--k", cfg.k, "index k")->required()->check(CLI::NonNegativeNumber);
  coeff->add_option("--x", cfg.x_value, "rational value for x, e.g. 5 or -1/2");
  coeff->add_option("--t", cfg.t_value, "rational value for t");
  add_format(coeff);

  auto* table = app.add_subcommand("table", "c_i(k) by both expansion methods");
  table->add_option("--max-k", cfg.table_max_k, "largest k")->check(CLI::PositiveNumber);
  add_format(table);

  auto* verify = app.add_subcommand("verify", "run identity checks, one JSON report per line");
  verify->add_option("--identity", cfg.identity, "identity id, or all");
  verify->add_option("--order", cfg.order, "series truncation order")->check(CLI::PositiveNumber);
  verify->add_option("--max-k", cfg.max_k)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", cfg.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--max-r", cfg.max_r)->check(CLI::PositiveNumber);
  verify->add_option("--threads", cfg.threads, "worker threads, 0 for one per core");
  verify->add_flag("--negative-controls", cfg.negative_controls, "run the mutated variants, which must all fail");
  auto* list = verify->add_flag("--list", "print the identity ids and exit");

  auto* psi = app.add_subcommand("psi", "hook solution psi_{r,1^s} with its checks");
  psi->add_option("--r", cfg.r)->required();
  psi->add_option("--s", cfg.s)->check(CLI::Range(0, 2));
  add_format(psi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (verify->parsed() && cfg.order < cfg.max_k) {
    std::cerr << "--order must be at least --max-k\n";
    return 2;
  }

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      std::cerr << "cannot open " << cfg.output_path << '\n';
      return 2;
    }
  }
  std::ostream& out = cfg.output_path.empty() ? std::cout : file;

  try {
    if (coeff->parsed()) return cmd_coeff(cfg, coeff->count("--format") > 0, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) {
      if (list->count() > 0) {
        for (const auto& id : identity_ids()) out << id << '\n';
        return 0;
      }
      return cmd_verify(cfg, out);
    }
    return cmd_psi(cfg, out);
  } catch (const UnknownIdentity& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
