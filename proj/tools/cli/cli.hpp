#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "landen/real.hpp"

namespace landen::cli {

enum class Mode { kEvalQuad, kTraceQuad, kAgm, kElliptic, kLemniscate, kDegree6, kVerify };
enum class Format { kText, kCsv, kJson };
enum class Backend { kFloat, kRational };

std::string to_string(Mode mode);
std::string to_string(Format format);
std::string to_string(Backend backend);

struct RunConfig {
  Mode mode = Mode::kEvalQuad;
  // Coefficients are kept as text so the rational backend can read them
  // exactly ("44/41", "0.125", "3").
  std::string a = "1";
  std::string b = "0";
  std::string c = "1";
  std::optional<std::size_t> iters;
  double tol = 1e-12;
  std::size_t max_iter = 30;
  Format format = Format::kText;
  Backend backend = Backend::kFloat;
  std::string suite = "all";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

/// Throws landen::Error (invalid-input) when the invariants fail:
/// tol > 0, max_iter >= 1, rational backend only for trace-quad and verify.
void validate(const RunConfig& config);

/// Reads flags, LANDEN_* environment overrides and an optional key=value file
/// (--config), with flags taking precedence over the environment and the
/// environment over the file.
struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when parsing stopped early
  int exit_code = 0;                // meaningful when config is empty
};
ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                std::ostream& err);

// A cell in a rendered table or a top-level scalar.
using Value = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Mode output prior to formatting. `params` echo the inputs, `table` holds
/// per-iteration rows and `scalars` the summary fields, all in insertion
/// order.
struct Report {
  std::vector<std::pair<std::string, Value>> params;
  std::optional<Table> table;
  std::vector<std::pair<std::string, Value>> scalars;
  bool success = true;
};

/// Exact reading of "p/q", integers and decimals such as "-1.25" or "3e-2".
/// Throws invalid-input on anything else.
Rational parse_rational(const std::string& text);

/// Like parse_rational but rounded to double; plain decimals go through
/// from_chars.
double parse_double(const std::string& text);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

void render(const Report& report, Format format, std::ostream& out);

/// Executes one mode. Domain failures propagate as landen::Error.
Report execute(const RunConfig& config);

/// execute + render; returns 0 on success, 1 when a verify suite failed.
int run(const RunConfig& config, std::ostream& out);

/// Full entry point used by main(): parse, run, and map errors to exit codes
/// (2 for domain errors, CLI11's codes for malformed flags).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace landen::cli
