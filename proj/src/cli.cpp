#include "hcr/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "hcr/io.hpp"
#include "hcr/svg.hpp"

namespace hcr::cli {

namespace {

constexpr std::array<ExperimentKind, 4> kExperiments = {
    ExperimentKind::Sine, ExperimentKind::Triangle, ExperimentKind::Square,
    ExperimentKind::Extreme};

constexpr std::array<Scheme::Kind, 4> kSchemes = {Scheme::Kind::Hybrid, Scheme::Kind::Cip,
                                                  Scheme::Kind::Rational,
                                                  Scheme::Kind::ModifiedRational};

std::size_t min_points(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Sine:
      return 16;
    case ExperimentKind::Triangle:
    case ExperimentKind::Square:
    case ExperimentKind::ReducedAlpha:
      return 64;
    case ExperimentKind::Extreme:
      return 120;
  }
  return 16;
}

std::string run_label(Scheme::Kind kind, double alpha_scale) {
  std::string label(scheme_name(kind));
  if (kind == Scheme::Kind::Hybrid && alpha_scale != 1.0) label += " x" + format_double(alpha_scale);
  return label;
}

std::string snapshot_name(std::size_t step) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snapshot_%06zu.csv", step);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir, "cannot create directory: " + ec.message());
}

void write_run_files(const ExperimentResult& result, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_summary_csv(dir / "summary.csv", result.records);
  for (const Snapshot& snap : result.snapshots) {
    write_snapshot_csv(dir / snapshot_name(snap.step), snap.step, snap.state,
                       convexity_indicator(snap.state.f));
  }
}

bool has_error(const std::vector<LabeledSummary>& runs) {
  for (const auto& run : runs) {
    for (const auto& r : run.records) {
      if (r.l1_error) return true;
    }
  }
  return false;
}

void log_result(std::ostream& log, const CliRequest& req, const std::string& label,
                const ExperimentResult& result, const std::filesystem::path& dir) {
  const DiagnosticsRecord& last = result.records.back();
  log << experiment_name(req.experiment) << '/' << label << ": " << last.step << " steps, dt "
      << format_double(result.dt) << ", f in [" << format_double(last.f_min) << ", "
      << format_double(last.f_max) << "], regions (" << last.pos_regions << ','
      << last.neg_regions << ')';
  if (last.l1_error) log << ", l1 " << format_double(*last.l1_error);
  log << " -> " << dir.string() << '\n';
}

void add_common_options(CLI::App* cmd, CliRequest& req, std::string& experiment,
                        std::size_t& n_points, std::optional<std::size_t>& snapshot_every) {
  cmd->add_option("--experiment,-e", experiment, "sine | triangle | square | extreme")
      ->required();
  cmd->add_option("--n", n_points, "number of grid points (default depends on experiment)");
  cmd->add_option("--cfl", req.cfl, "global Courant number, in (0, 1]");
  cmd->add_option("--steps", req.n_steps, "number of time steps")->required();
  cmd->add_option("--alpha-scale", req.alpha_scale, "factor on the optimal hybrid weight");
  cmd->add_option("--snapshot-every", snapshot_every,
                  "snapshot cadence in steps (default: steps/10 rounded up)");
  cmd->add_option("--out,-o", req.out_dir, "output directory");
  cmd->add_flag("--svg", req.svg, "also write SVG plots");
}

}  // namespace

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (ExperimentKind k : kExperiments) {
    if (experiment_name(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<Scheme::Kind> parse_scheme(std::string_view name) {
  for (Scheme::Kind k : kSchemes) {
    if (scheme_name(k) == name) return k;
  }
  return std::nullopt;
}

Scheme CliRequest::scheme_value() const {
  switch (scheme) {
    case Scheme::Kind::Cip:
      return Scheme::cip();
    case Scheme::Kind::Rational:
      return Scheme::rational();
    case Scheme::Kind::ModifiedRational:
      return Scheme::modified_rational();
    case Scheme::Kind::Hybrid:
      return Scheme::hybrid(alpha_scale);
  }
  return Scheme::hybrid(alpha_scale);
}

ExperimentConfig CliRequest::config(Scheme::Kind kind) const {
  CliRequest copy = *this;
  copy.scheme = kind;
  ExperimentConfig c;
  c.kind = experiment;
  c.n_points = n_points;
  c.cfl = cfl;
  c.n_steps = n_steps;
  c.scheme = copy.scheme_value();
  c.alpha_scale = alpha_scale;
  c.snapshot_every = snapshot_every;
  return c;
}

CliRequest parse_args(const std::vector<std::string>& args) {
  CliRequest req;
  std::string experiment;
  std::string scheme = "hybrid";
  std::size_t n_points = 0;
  std::optional<std::size_t> snapshot_every;

  CLI::App app{"1D semi-Lagrangian advection with cubic, rational and hybrid kernels",
               "hcr_advect"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "run one experiment with one scheme");
  add_common_options(run, req, experiment, n_points, snapshot_every);
  run->add_option("--scheme,-s", scheme, "cip | rational | modified-rational | hybrid");
  CLI::App* compare = app.add_subcommand("compare", "run one experiment with all four schemes");
  add_common_options(compare, req, experiment, n_points, snapshot_every);

  std::vector<const char*> argv{"hcr_advect"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    req.help = true;
    const CLI::App* which = run->parsed() ? run : compare->parsed() ? compare : &app;
    req.help_text = which->help();
    return req;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  req.command = compare->parsed() ? Command::Compare : Command::Run;

  const auto exp = parse_experiment(experiment);
  if (!exp) throw UsageError("unknown experiment '" + experiment + "'");
  req.experiment = *exp;

  const auto sk = parse_scheme(scheme);
  if (!sk) throw UsageError("unknown scheme '" + scheme + "'");
  req.scheme = *sk;

  req.n_points = n_points != 0 ? n_points : default_points(req.experiment);
  if (req.n_points < min_points(req.experiment)) {
    throw UsageError("--n must be at least " + std::to_string(min_points(req.experiment)) +
                     " for " + std::string(experiment_name(req.experiment)));
  }
  if (!(req.cfl > 0.0 && req.cfl <= 1.0)) throw UsageError("--cfl must lie in (0, 1]");
  if (!std::isfinite(req.alpha_scale) || req.alpha_scale < 0.0) {
    throw UsageError("--alpha-scale must be finite and non-negative");
  }
  if (req.command == Command::Run && req.scheme != Scheme::Kind::Hybrid &&
      req.alpha_scale != 1.0) {
    throw UsageError("--alpha-scale applies only to --scheme hybrid");
  }
  if (snapshot_every) {
    if (*snapshot_every == 0) throw UsageError("--snapshot-every must be positive");
    req.snapshot_every = *snapshot_every;
  } else {
    req.snapshot_every = std::max<std::size_t>(1, (req.n_steps + 9) / 10);
  }
  return req;
}

void execute(const CliRequest& req, std::ostream& log) {
  ensure_dir(req.out_dir);
  std::vector<Scheme::Kind> kinds;
  if (req.command == Command::Compare) {
    kinds.assign(kSchemes.begin(), kSchemes.end());
  } else {
    kinds.push_back(req.scheme);
  }

  std::vector<LabeledSnapshot> finals;
  std::vector<LabeledSummary> summaries;
  LabeledSnapshot initial;
  for (Scheme::Kind kind : kinds) {
    const ExperimentResult result = run_experiment(req.config(kind));
    const std::string label = run_label(kind, req.alpha_scale);
    const std::filesystem::path dir =
        req.command == Command::Compare ? req.out_dir / std::string(scheme_name(kind))
                                        : req.out_dir;
    write_run_files(result, dir);
    log_result(log, req, label, result, dir);

    const Snapshot& last = result.snapshots.back();
    finals.push_back({label, last.step, last.state});
    summaries.push_back({label, result.records});
    if (initial.label.empty()) initial = {"initial", 0, result.setup.state0};
  }

  if (req.svg) {
    std::vector<LabeledSnapshot> profiles = finals;
    profiles.push_back(initial);
    write_text(req.out_dir / "profile.svg",
               render_svg(snapshot_plot(PlotKind::Profile, profiles)));
    write_text(req.out_dir / "indicator.svg",
               render_svg(snapshot_plot(PlotKind::Indicator, finals)));
    write_text(req.out_dir / "extrema.svg",
               render_svg(summary_plot(PlotKind::Extrema, summaries)));
    if (has_error(summaries)) {
      write_text(req.out_dir / "error.svg", render_svg(summary_plot(PlotKind::Error, summaries)));
    }
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  CliRequest req;
  try {
    req = parse_args(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << " (try --help)\n";
    return kExitUsage;
  }
  if (req.help) {
    out << req.help_text;
    return kExitOk;
  }
  try {
    execute(req, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace hcr::cli
