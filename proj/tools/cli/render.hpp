#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cli/commands.hpp"

namespace spg::cli {

/// Published USPTex 1NN + holdout accuracies of methods this tool does not
/// implement, shown beside computed rows by `compare`.
struct ReportedResult {
  std::string_view method;
  double accuracy;
};

inline constexpr std::array<ReportedResult, 4> kReportedUsptexHoldout{{
    {"single-band SPG (RGB)", 54.39},
    {"HRF", 49.86},
    {"MultiLayer CCR", 82.08},
    {"MSD", 51.29},
}};

struct MethodOutcome {
  Method method;
  std::size_t samples = 0;
  EvalReport report;
};

void render_report(std::ostream& out, const RunConfig& config, const MethodOutcome& outcome);

void render_comparison(std::ostream& out, const RunConfig& config,
                       std::span<const MethodOutcome> outcomes);

/// One row per sample: id, label, then the descriptor columns.
void render_features_csv(std::ostream& out, const RunConfig& config,
                         std::span<const LabeledFeature> samples);

}  // namespace spg::cli
