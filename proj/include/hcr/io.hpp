#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcr/diagnostics.hpp"
#include "hcr/solver.hpp"

namespace hcr {

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what), path_(path) {}

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

// 17 significant digits; parses back to the identical double.
std::string format_double(double v);

inline constexpr const char* kSnapshotHeader = "step,i,x,f,d,p";
inline constexpr const char* kSummaryHeader = "step,l1_error,f_max,f_min,pos_regions,neg_regions";

// One row per node; p has N-1 entries and the last row's p field is empty.
void write_snapshot_csv(const std::filesystem::path& path, std::size_t step,
                        const GridField& state, std::span<const double> p);

void write_summary_csv(const std::filesystem::path& path,
                       std::span<const DiagnosticsRecord> records);

struct SnapshotRows {
  std::size_t step = 0;
  std::vector<double> x, f, d, p;
};

// Reader for files produced by write_snapshot_csv.
SnapshotRows read_snapshot_csv(const std::filesystem::path& path);

}  // namespace hcr
