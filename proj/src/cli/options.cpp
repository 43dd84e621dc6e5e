#include "options.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qaw/errors.hpp"

namespace qaw::cli {

namespace {

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw DomainError("'" + token + "' is not a number");
  }
  if (used != token.size()) throw DomainError("'" + token + "' is not a number");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "7" (that order alone) or "2:9"
void parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
  auto to_index = [](const std::string& s) {
    const double v = parse_real(trim(s));
    if (v < 0 || v != std::floor(v)) throw DomainError("order '" + s + "' is not a nonnegative integer");
    return static_cast<std::size_t>(v);
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    lo = hi = to_index(text);
    return;
  }
  lo = to_index(text.substr(0, colon));
  hi = to_index(text.substr(colon + 1));
  if (lo > hi) throw DomainError("empty order range '" + text + "'");
}

}  // namespace

ParamVector parse_params(const std::string& text) {
  ParamVector params;
  if (trim(text).empty()) return params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto at = item.find('@');
    if (at == std::string::npos) {
      params.push_back(parse_real(item));
    } else {
      const double rho = parse_real(trim(item.substr(0, at)));
      const double eta = parse_real(trim(item.substr(at + 1)));
      if (!(rho >= 0.0)) throw DomainError("conjugate pair '" + item + "' needs rho >= 0");
      params.push_conjugate_pair(rho, eta);
    }
  }
  return params;
}

std::size_t max_terms_from_env(std::size_t fallback) {
  const char* raw = std::getenv("QAW_MAX_TERMS");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw DomainError(std::string("QAW_MAX_TERMS='") + raw + "' is not a positive integer");
  return static_cast<std::size_t>(v);
}

std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"q-Hermite expansions of the Askey-Wilson density ladder", "qaw"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"pretty", Format::Pretty}};
  std::string n_text;

  auto* q_opt = app.add_option("--q", cfg.q, "deformation parameter in (-1, 1]");
  app.add_option("--params", cfg.params_text, "comma separated parameters; rho@eta gives a conjugate pair");
  app.add_option("--family", cfg.family, "density family or hermite / rogers-szego");
  app.add_option("--n", n_text, "order N or range LO:HI");
  app.add_option("--x", cfg.xs, "evaluation points")->delimiter(',');
  app.add_option("--grid", cfg.grid, "use N equispaced points on [-1, 1] instead of --x");
  app.add_option("--tol", cfg.tol, "comparison tolerance");
  app.add_option("--trunc", cfg.trunc, "truncation tolerance of products and series");
  app.add_option("--format", cfg.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--output,-o", cfg.output, "write the result to this file");

  auto* eval = app.add_subcommand("eval", "evaluate densities, h_n, phi_h or the Poisson-Mehler kernel");
  eval->add_flag("--pm", cfg.pm, "Poisson-Mehler kernel at (x, --y, --rho)");
  eval->add_option("--rho", cfg.rho);
  eval->add_option("--y", cfg.y);
  eval->add_flag("--phi", cfg.phi, "generating function phi_h(x|--t)");
  eval->add_option("--t", cfg.t);
  eval->add_flag("--unnormalized", cfg.unnormalized, "density without the 1/A_n factor");
  eval->add_flag("--series", cfg.series, "use the series form instead of the product form");

  app.add_subcommand("integrate", "quadrature of a density against its closed-form mass");
  app.add_subcommand("moments", "h-moments by quadrature against their closed forms");

  auto* expand = app.add_subcommand("expand", "expansion table A_n, T_0..T_J");
  expand->add_option("--order", cfg.order, "table order J");
  expand->add_flag("--closed", cfg.closed, "closed forms instead of the recursion (n <= 4)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "suite name or all");
  verify->add_flag("--list", cfg.list_suites, "list the suites");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--draws", cfg.draws, "random parameter draws per case");
  verify->add_option("--qs", cfg.q_list, "q values overriding the suite sweep")->delimiter(',');

  auto* conj = app.add_subcommand("conjecture", "probe the conjectured product form of the g_5 integral");
  conj->add_option("--qs", cfg.q_list, "q grid")->delimiter(',');

  app.add_subcommand("gasper", "Gasper-Rahman integral, quadrature vs product");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!n_text.empty()) parse_range(n_text, cfg.n_lo, cfg.n_hi);
  cfg.params = parse_params(cfg.params_text);
  // an explicit --q narrows the q sweep of verify and conjecture
  if (cfg.q_list.empty() && q_opt->count() > 0 && (cfg.command == "verify" || cfg.command == "conjecture"))
    cfg.q_list = {cfg.q};
  cfg.max_terms = max_terms_from_env(cfg.max_terms);
  if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
  return std::nullopt;
}

}  // namespace qaw::cli
