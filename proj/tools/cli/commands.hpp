#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spg/classify.hpp"
#include "spg/dataset.hpp"
#include "spg/features.hpp"

namespace spg::cli {

enum class OutputFormat { Table, Csv, Json };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  ///< bad flags, configuration or input data

struct RunConfig {
  std::string command;
  std::filesystem::path corpus;
  ScaleSpec scales = ScaleSpec({32});
  Protocol protocol = Protocol::Holdout;
  int repetitions = kDefaultRepetitions;
  std::uint64_t seed = 42;
  Method method = Method::SpgHsi;
  OutputFormat output = OutputFormat::Table;
  std::filesystem::path cache_dir = ".spg-cache";
  bool use_cache = true;
  int threads = 0;
  bool skip_bad = false;
  bool zscore = false;
};

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// command. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spg::cli
