#include <algorithm>
#include <map>
#include <optional>
#include <string_view>
#include <vector>
#include <ostream>

#include "CLI11.hpp"
#include "cli/cli.hpp"
#include "landen/error.hpp"

namespace landen::cli {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kEvalQuad: return "eval-quad";
    case Mode::kTraceQuad: return "trace-quad";
    case Mode::kAgm: return "agm";
    case Mode::kElliptic: return "elliptic";
    case Mode::kLemniscate: return "lemniscate";
    case Mode::kDegree6: return "degree6";
    case Mode::kVerify: return "verify";
  }
  return "unknown";
}

std::string to_string(Format format) {
  switch (format) {
    case Format::kText: return "text";
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
  }
  return "unknown";
}

std::string to_string(Backend backend) {
  return backend == Backend::kFloat ? "float" : "rational";
}

void validate(const RunConfig& config) {
  if (!(config.tol > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "--tol must be positive");
  }
  if (config.max_iter < 1) {
    throw Error(ErrorKind::kInvalidInput, "--max-iter must be at least 1");
  }
  if (config.backend == Backend::kRational && config.mode != Mode::kTraceQuad &&
      config.mode != Mode::kVerify) {
    throw Error(ErrorKind::kInvalidInput,
                "the rational backend only applies to trace-quad and verify");
  }
}

namespace {

const std::map<std::string, Format> kFormats{
    {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
const std::map<std::string, Backend> kBackends{{"float", Backend::kFloat},
                                               {"rational", Backend::kRational}};

void add_shared_options(CLI::App& app, RunConfig& config, bool with_env) {
  auto* tol = app.add_option("--tol", config.tol, "Stopping tolerance")->capture_default_str();
  auto* max_iter =
      app.add_option("--max-iter", config.max_iter, "Iteration cap")->capture_default_str();
  auto* format = app.add_option("--format", config.format, "Output format: text, csv or json")
                     ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
                     ->type_name("{text,csv,json}");
  app.add_option("--backend", config.backend, "Number backend: float or rational")
      ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case).description(""))
      ->type_name("{float,rational}");
  if (with_env) {
    tol->envname("LANDEN_TOL");
    max_iter->envname("LANDEN_MAX_ITER");
    format->envname("LANDEN_FORMAT");
  }
}

std::optional<std::string> config_path(int argc, const char* const* argv) {
  std::optional<std::string> path;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[++i];
    } else if (arg.starts_with("--config=")) {
      path = std::string(arg.substr(9));
    }
  }
  return path;
}

// The config file only seeds defaults, so environment variables and flags
// (both applied by the main parse) take precedence over it.
void load_config_file(const std::string& path, RunConfig& config) {
  CLI::App file_app;
  add_shared_options(file_app, config, false);
  std::vector<std::string> args;
  for (const auto& item : CLI::ConfigINI{}.from_file(path)) {
    args.push_back("--" + item.fullname());
    args.insert(args.end(), item.inputs.begin(), item.inputs.end());
  }
  std::reverse(args.begin(), args.end());
  file_app.parse(args);
}

}  // namespace

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                std::ostream& err) {
  RunConfig config;
  CLI::App app{"Evaluate integrals by iterating Landen transformations"};
  app.require_subcommand(1);

  std::string config_file;
  app.add_option("--config", config_file, "key=value file of default options")
      ->check(CLI::ExistingFile);
  try {
    if (const auto path = config_path(argc, argv)) load_config_file(*path, config);
  } catch (const CLI::Error& e) {
    err << "error: config file: " << e.what() << "\n";
    return ParseOutcome{std::nullopt, 2};
  }
  add_shared_options(app, config, true);

  const auto add_quadratic = [&config](CLI::App* sub) {
    sub->add_option("--a", config.a, "Coefficient of x^2")->required();
    sub->add_option("--b", config.b, "Coefficient of x")->required();
    sub->add_option("--c", config.c, "Constant coefficient")->required();
  };
  const auto add_pair = [&config](CLI::App* sub, const std::string& what) {
    sub->add_option("--a", config.a, "First " + what)->required();
    sub->add_option("--b", config.b, "Second " + what)->required();
  };

  auto* eval = app.add_subcommand("eval-quad", "Integral of 1/(ax^2+bx+c) by iteration");
  add_quadratic(eval);
  auto* trace = app.add_subcommand("trace-quad", "Print the Landen orbit of (a, b, c)");
  add_quadratic(trace);
  trace->add_option("--iters", config.iters, "Exact number of steps (ignores --tol)");
  auto* agm = app.add_subcommand("agm", "Arithmetic-geometric mean of a and b");
  add_pair(agm, "mean argument");
  auto* elliptic = app.add_subcommand("elliptic", "Elliptic integral G(a, b)");
  add_pair(elliptic, "semi-axis parameter");
  app.add_subcommand("lemniscate", "Compare 1/AGM(1, sqrt 2) with the lemniscate integral");
  auto* degree6 = app.add_subcommand("degree6", "Iterate the x^6 + a x^4 + b x^2 + 1 system");
  add_pair(degree6, "denominator coefficient");
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify
      ->add_option("--suite", config.suite,
                   "discriminant, identity, vanishing, gauss, conjugacy, invariance, "
                   "closed-form or all")
      ->check(CLI::IsMember({"all", "discriminant", "identity", "vanishing", "gauss",
                             "conjugacy", "invariance", "closed-form"}));
  verify->add_option("--samples", config.samples, "Random samples per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Sampling seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return ParseOutcome{std::nullopt, app.exit(e, out, err)};
  }

  const std::pair<CLI::App*, Mode> modes[] = {
      {eval, Mode::kEvalQuad},   {trace, Mode::kTraceQuad},
      {agm, Mode::kAgm},         {elliptic, Mode::kElliptic},
      {app.get_subcommand("lemniscate"), Mode::kLemniscate},
      {degree6, Mode::kDegree6}, {verify, Mode::kVerify}};
  for (const auto& [sub, mode] : modes) {
    if (sub->parsed()) config.mode = mode;
  }
  return ParseOutcome{config, 0};
}

}  // namespace landen::cli
