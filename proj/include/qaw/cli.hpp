#pragma once

// Command-line front end: option parsing, the seven commands and the
// JSON / CSV / pretty renderers.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qaw/qcore.hpp"
#include "qaw/symfun.hpp"

namespace qaw::cli {

enum class Format { Json, Csv, Pretty };

/// Exit codes of the executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification check failed
inline constexpr int kExitUsage = 2;    // bad flags or a violated precondition

struct RunConfig {
  std::string command;
  double q = 0.5;
  std::string params_text;
  ParamVector params;
  std::string family;
  std::size_t n_lo = 0, n_hi = 10;
  std::vector<double> xs;
  std::size_t grid = 0;  // > 0 replaces xs by an equispaced grid
  double tol = 1e-9;
  double trunc = kDefaultEpsTrunc;
  std::size_t max_terms = kDefaultMaxTerms;
  Format format = Format::Json;
  std::string output;

  // eval
  bool pm = false, phi = false, unnormalized = false, series = false;
  double rho = 0.0, y = 0.0, t = 0.0;
  // expand
  std::size_t order = 64;
  bool closed = false;
  // verify
  std::string suite = "all";
  bool list_suites = false;
  std::uint64_t seed = 20240917;
  std::size_t draws = 0;
  // verify / conjecture q sweep
  std::vector<double> q_list;

  QContext ctx() const { return QContext::make(q, trunc, max_terms); }
};

using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;  // appended to the "meta" object
};

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
};

/// Comma separated list of reals; an entry rho@eta expands to the conjugate
/// pair rho e^{+-i eta}.
ParamVector parse_params(const std::string& text);

/// Value of QAW_MAX_TERMS when set to a positive integer, else fallback.
std::size_t max_terms_from_env(std::size_t fallback);

std::string render(const RunConfig& cfg, const Table& table);

CommandResult cmd_eval(const RunConfig& cfg);
CommandResult cmd_integrate(const RunConfig& cfg);
CommandResult cmd_moments(const RunConfig& cfg);
CommandResult cmd_expand(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_conjecture(const RunConfig& cfg);
CommandResult cmd_gasper(const RunConfig& cfg);

/// Parses args (without the program name), runs the command and writes the
/// rendered table to out (or to --output).  Diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaw::cli
