#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcr/experiments.hpp"

namespace hcr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Run, Compare };

struct CliRequest {
  Command command = Command::Run;
  ExperimentKind experiment = ExperimentKind::Sine;
  Scheme::Kind scheme = Scheme::Kind::Hybrid;
  std::size_t n_points = 0;
  double cfl = 0.2;
  std::size_t n_steps = 0;
  double alpha_scale = 1.0;
  std::size_t snapshot_every = 1;
  std::filesystem::path out_dir = "out";
  bool svg = false;
  bool help = false;
  std::string help_text;

  Scheme scheme_value() const;
  ExperimentConfig config(Scheme::Kind kind) const;
};

std::optional<ExperimentKind> parse_experiment(std::string_view name);
std::optional<Scheme::Kind> parse_scheme(std::string_view name);

// args excludes the program name.  Throws UsageError with a one-line message.
CliRequest parse_args(const std::vector<std::string>& args);

// Executes a parsed request, writing CSV (and optionally SVG) files under
// out_dir.  Throws IoError or solver errors.
void execute(const CliRequest& request, std::ostream& log);

// Full front end: parse, execute, map failures to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcr::cli
