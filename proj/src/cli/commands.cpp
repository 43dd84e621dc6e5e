#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "options.hpp"
#include "qaw/cli.hpp"
#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/expand.hpp"
#include "qaw/qpoly.hpp"
#include "qaw/quad.hpp"
#include "qaw/verify.hpp"

namespace qaw::cli {

namespace {

std::vector<double> points(const RunConfig& cfg) {
  if (cfg.grid > 0) return uniform_grid(cfg.grid);
  if (cfg.xs.empty()) throw DomainError("no evaluation points: pass --x or --grid");
  return cfg.xs;
}

Family required_family(const RunConfig& cfg) {
  if (cfg.family.empty()) throw DomainError("--family is required");
  return family_from_string(cfg.family);
}

void require_count(const RunConfig& cfg, std::size_t n) {
  if (cfg.params.size() != n) {
    std::ostringstream os;
    os << cfg.command << " needs " << n << " parameters, got " << cfg.params.size();
    throw DomainError(os.str());
  }
}

QuadOptions quad_for(const RunConfig& cfg, ExecPolicy policy) {
  QuadOptions qo;
  qo.tol = std::min(1e-12, cfg.tol * 1e-2);
  qo.policy = policy;
  return qo;
}

}  // namespace

CommandResult cmd_eval(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const auto xs = points(cfg);
  const EvalMode mode = cfg.series ? EvalMode::Series : EvalMode::ClosedForm;
  CommandResult res;
  Table& t = res.table;

  if (cfg.pm) {
    t.columns = {"x", "y", "rho", "value"};
    for (double x : xs) t.rows.push_back({x, cfg.y, cfg.rho, poisson_mehler(x, cfg.y, cfg.rho, ctx, mode)});
    return res;
  }
  if (cfg.phi) {
    t.columns = {"x", "t", "value"};
    for (double x : xs) t.rows.push_back({x, cfg.t, phi_h(x, cfg.t, ctx, mode)});
    return res;
  }
  if (cfg.family == "hermite" || cfg.family == "rogers-szego") {
    const bool hermite = cfg.family == "hermite";
    t.columns = {"n", "x", "value"};
    for (std::size_t n = cfg.n_lo; n <= cfg.n_hi; ++n)
      for (double x : xs)
        t.rows.push_back({static_cast<long long>(n), x, hermite ? q_hermite(n, x, ctx) : rogers_szego(n, x, ctx)});
    return res;
  }
  const DensitySpec spec(required_family(cfg), cfg.params, ctx);
  if (!cfg.unnormalized) spec.total_mass();  // fills the GeneralN cache before the parallel loop
  const auto values = evaluate_grid(
      [&](double x) { return cfg.unnormalized ? density_value_unnormalized(spec, x) : density_value(spec, x); }, xs);
  t.columns = {"x", "value"};
  for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], values[i]});
  t.meta.emplace_back("family", std::string(to_string(spec.family())));
  return res;
}

CommandResult cmd_integrate(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const DensitySpec spec(required_family(cfg), cfg.params, ctx);
  const double closed = spec.total_mass();
  const auto report =
      integrate_theta([&](double x) { return density_value_unnormalized(spec, x); }, quad_for(cfg, ExecPolicy::Parallel));
  const double diff = std::abs(report.value - closed) / std::abs(closed);
  CommandResult res;
  res.table.columns = {"family", "quad", "closed", "rel_diff", "nodes", "passed"};
  res.table.rows.push_back({std::string(to_string(spec.family())), report.value, closed, diff,
                            static_cast<long long>(report.nodes_used), diff <= cfg.tol});
  res.exit_code = diff <= cfg.tol ? kExitOk : kExitFailure;
  return res;
}

CommandResult cmd_moments(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const DensitySpec spec(required_family(cfg), cfg.params, ctx);
  spec.total_mass();
  const std::size_t count = cfg.n_hi - cfg.n_lo + 1;
  struct Row {
    double closed, quad;
  };
  const auto rows = parallel_map<Row>(count, [&](std::size_t i) {
    const std::size_t n = cfg.n_lo + i;
    const double quad = integrate_theta([&](double x) { return q_hermite(n, x, ctx) * density_value(spec, x); },
                                        quad_for(cfg, ExecPolicy::Serial))
                            .value;
    return Row{q_hermite_moment(spec, n), quad};
  });
  CommandResult res;
  res.table.columns = {"n", "closed", "quad", "diff"};
  for (std::size_t i = 0; i < count; ++i) {
    const double diff = std::abs(rows[i].closed - rows[i].quad);
    if (!(diff <= cfg.tol)) res.exit_code = kExitFailure;
    res.table.rows.push_back({static_cast<long long>(cfg.n_lo + i), rows[i].closed, rows[i].quad, diff});
  }
  res.table.meta.emplace_back("family", std::string(to_string(spec.family())));
  return res;
}

CommandResult cmd_expand(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  ExpansionTable table;
  if (cfg.closed) {
    table = closed_form_table(cfg.params, cfg.order, ctx);
  } else {
    ExpandOptions eo;
    eo.initial_order = cfg.order;
    eo.max_order = std::max<std::size_t>(cfg.order, 1024);
    eo.tol = cfg.tol;
    table = build_expansion(cfg.params, ctx, eo);
  }
  const bool real = std::all_of(table.T.begin(), table.T.end(),
                                [](const Complex& z) { return std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z)); });
  CommandResult res;
  Table& t = res.table;
  t.columns = real ? std::vector<std::string>{"j", "T"} : std::vector<std::string>{"j", "T", "T_im"};
  for (std::size_t j = 0; j <= table.J(); ++j) {
    if (real) t.rows.push_back({static_cast<long long>(j), table.T[j].real()});
    else t.rows.push_back({static_cast<long long>(j), table.T[j].real(), table.T[j].imag()});
  }
  t.meta.emplace_back("n", static_cast<long long>(table.n()));
  t.meta.emplace_back("A", table.A.real());
  if (!real || table.A.imag() != 0.0) t.meta.emplace_back("A_im", table.A.imag());
  t.meta.emplace_back("J", static_cast<long long>(table.J()));
  t.meta.emplace_back("tail_estimate", table.tail_estimate);
  t.meta.emplace_back("provenance", std::string(to_string(table.provenance)));
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult res;
  Table& t = res.table;
  if (cfg.list_suites) {
    t.columns = {"suite", "summary"};
    for (const auto& s : suite_catalog()) t.rows.push_back({std::string(s.name), std::string(s.summary)});
    return res;
  }
  VerifyOptions vo;
  vo.qs = cfg.q_list;
  vo.seed = cfg.seed;
  vo.draws = cfg.draws;
  std::vector<SuiteReport> reports;
  if (cfg.suite == "all") reports = run_all(vo);
  else reports.push_back(run_suite(cfg.suite, vo));
  t.columns = {"suite", "check", "residual", "tol", "passed"};
  std::size_t failures = 0;
  for (const auto& r : reports) {
    failures += r.failures();
    for (const auto& c : r.checks) t.rows.push_back({r.suite, c.label, c.residual, c.tol, c.passed});
  }
  t.meta.emplace_back("suites", static_cast<long long>(reports.size()));
  t.meta.emplace_back("failures", static_cast<long long>(failures));
  res.exit_code = failures == 0 ? kExitOk : kExitFailure;
  return res;
}

CommandResult cmd_conjecture(const RunConfig& cfg) {
  require_count(cfg, 5);
  std::vector<double> qs = cfg.q_list;
  if (qs.empty())
    for (int i = 0; i <= 9; ++i) qs.push_back(0.1 * i);
  struct Row {
    ConjectureProbe probe;
    std::string status = "ok";
  };
  const auto rows = parallel_map<Row>(qs.size(), [&](std::size_t i) {
    Row row;
    try {
      row.probe = conjecture_residual(cfg.params, QContext::make(qs[i], cfg.trunc, cfg.max_terms));
    } catch (const Error& e) {
      row.status = e.what();
    }
    return row;
  });
  CommandResult res;
  res.table.columns = {"q", "series", "conjectured", "residual", "signed_diff", "status"};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto& r = rows[i];
    if (r.status == "ok")
      res.table.rows.push_back({qs[i], r.probe.series, r.probe.conjectured, r.probe.residual, r.probe.signed_diff,
                                r.status});
    else
      res.table.rows.push_back({qs[i], std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, r.status});
  }
  return res;
}

CommandResult cmd_gasper(const RunConfig& cfg) {
  require_count(cfg, 5);
  const auto out = gasper_rahman_check(cfg.params, cfg.ctx(), quad_for(cfg, ExecPolicy::Parallel));
  const double diff = out.relative_diff();
  CommandResult res;
  res.table.columns = {"lhs", "rhs", "rel_diff", "nodes", "passed"};
  res.table.rows.push_back({out.lhs, out.rhs, diff, static_cast<long long>(out.quad.nodes_used), diff <= cfg.tol});
  res.exit_code = diff <= cfg.tol ? kExitOk : kExitFailure;
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (auto code = parse_args(args, cfg, out, err)) return *code;
    CommandResult res;
    if (cfg.command == "eval") res = cmd_eval(cfg);
    else if (cfg.command == "integrate") res = cmd_integrate(cfg);
    else if (cfg.command == "moments") res = cmd_moments(cfg);
    else if (cfg.command == "expand") res = cmd_expand(cfg);
    else if (cfg.command == "verify") res = cmd_verify(cfg);
    else if (cfg.command == "conjecture") res = cmd_conjecture(cfg);
    else if (cfg.command == "gasper") res = cmd_gasper(cfg);
    const std::string text = render(cfg, res.table);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output);
      if (!(file << text)) {
        err << "error: cannot write " << cfg.output << "\n";
        return kExitUsage;
      }
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qaw::cli
