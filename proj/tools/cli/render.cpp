#include "cli/render.hpp"

#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

namespace spg::cli {

namespace {

using json = nlohmann::json;

json grids_json(const ScaleSpec& scales) {
  return std::vector<int>(scales.grids().begin(), scales.grids().end());
}

std::string scales_label(const RunConfig& config, Method method) {
  return method == Method::AverageRgb ? "-" : config.scales.to_string();
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string seed_label(const RunConfig& config) {
  return config.protocol == Protocol::Holdout ? std::to_string(config.seed) : "-";
}

json report_json(const RunConfig& config, const MethodOutcome& o) {
  json per_class = json::array();
  for (const ClassAccuracy& c : o.report.per_class) {
    per_class.push_back(
        {{"class", c.label}, {"tested", c.tested}, {"correct", c.correct}, {"accuracy", c.accuracy}});
  }
  json j = {
      {"method", method_name(o.method)},
      {"protocol", protocol_name(config.protocol)},
      {"corpus", config.corpus.generic_string()},
      {"scales", o.method == Method::AverageRgb ? json(nullptr) : grids_json(config.scales)},
      {"repetitions", o.report.repetitions},
      {"seed", config.protocol == Protocol::Holdout ? json(config.seed) : json(nullptr)},
      {"zscore", config.zscore},
      {"samples", o.samples},
      {"predictions", o.report.predictions},
      {"accuracy", o.report.overall_accuracy},
      {"repetition_accuracies", o.report.repetition_accuracies},
      {"classes", o.report.classes},
      {"per_class", per_class},
      {"confusion", o.report.confusion},
  };
  return j;
}

}  // namespace

void render_report(std::ostream& out, const RunConfig& config, const MethodOutcome& o) {
  const EvalReport& r = o.report;
  switch (config.output) {
    case OutputFormat::Json:
      out << report_json(config, o).dump(2) << '\n';
      return;
    case OutputFormat::Csv:
      fmt::print(out, "method,protocol,scales,repetitions,seed,zscore,samples,accuracy\n");
      fmt::print(out, "{},{},{},{},{},{},{},{:.4f}\n", method_name(o.method),
                 protocol_name(config.protocol), csv_field(scales_label(config, o.method)),
                 r.repetitions, seed_label(config), config.zscore ? "on" : "off", o.samples,
                 r.overall_accuracy);
      fmt::print(out, "\nclass,tested,correct,accuracy\n");
      for (const ClassAccuracy& c : r.per_class) {
        fmt::print(out, "{},{},{},{:.4f}\n", csv_field(c.label), c.tested, c.correct, c.accuracy);
      }
      return;
    case OutputFormat::Table:
      break;
  }
  fmt::print(out, "{:<13}{}\n", "method", method_name(o.method));
  fmt::print(out, "{:<13}{}\n", "protocol", protocol_name(config.protocol));
  fmt::print(out, "{:<13}{}\n", "corpus", config.corpus.generic_string());
  fmt::print(out, "{:<13}{}\n", "scales", scales_label(config, o.method));
  fmt::print(out, "{:<13}{}\n", "repetitions", r.repetitions);
  fmt::print(out, "{:<13}{}\n", "seed", seed_label(config));
  fmt::print(out, "{:<13}{}\n", "zscore", config.zscore ? "on" : "off");
  fmt::print(out, "{:<13}{}\n", "samples", o.samples);
  fmt::print(out, "{:<13}{}\n", "classes", r.classes.size());
  fmt::print(out, "{:<13}{:.2f} %\n", "accuracy", r.overall_accuracy);
  if (r.repetition_accuracies.size() > 1) {
    fmt::print(out, "\n{:<12}{:>10}\n", "repetition", "accuracy");
    for (std::size_t k = 0; k < r.repetition_accuracies.size(); ++k) {
      fmt::print(out, "{:<12}{:>10.2f}\n", k + 1, r.repetition_accuracies[k]);
    }
  }
  std::size_t width = 5;
  for (const ClassAccuracy& c : r.per_class) width = std::max(width, c.label.size());
  fmt::print(out, "\n{:<{}}  {:>7}  {:>7}  {:>8}\n", "class", width, "tested", "correct",
             "accuracy");
  for (const ClassAccuracy& c : r.per_class) {
    fmt::print(out, "{:<{}}  {:>7}  {:>7}  {:>8.2f}\n", c.label, width, c.tested, c.correct,
               c.accuracy);
  }
}

void render_comparison(std::ostream& out, const RunConfig& config,
                       std::span<const MethodOutcome> outcomes) {
  switch (config.output) {
    case OutputFormat::Json: {
      json rows = json::array();
      for (const MethodOutcome& o : outcomes) {
        rows.push_back({{"method", method_name(o.method)},
                        {"source", "computed"},
                        {"accuracy", o.report.overall_accuracy},
                        {"samples", o.samples}});
      }
      for (const ReportedResult& r : kReportedUsptexHoldout) {
        rows.push_back({{"method", r.method}, {"source", "reported"}, {"accuracy", r.accuracy}});
      }
      const json j = {{"protocol", protocol_name(config.protocol)},
                      {"corpus", config.corpus.generic_string()},
                      {"scales", grids_json(config.scales)},
                      {"repetitions", outcomes.empty() ? config.repetitions
                                                       : outcomes.front().report.repetitions},
                      {"seed", config.protocol == Protocol::Holdout ? json(config.seed)
                                                                    : json(nullptr)},
                      {"rows", rows}};
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv:
      fmt::print(out, "method,source,accuracy,protocol,seed\n");
      for (const MethodOutcome& o : outcomes) {
        fmt::print(out, "{},computed,{:.4f},{},{}\n", method_name(o.method),
                   o.report.overall_accuracy, protocol_name(config.protocol), seed_label(config));
      }
      for (const ReportedResult& r : kReportedUsptexHoldout) {
        fmt::print(out, "{},reported,{:.2f},holdout,-\n", csv_field(r.method), r.accuracy);
      }
      return;
    case OutputFormat::Table:
      break;
  }
  fmt::print(out, "protocol {}, repetitions {}, seed {}, scales {}, corpus {}\n\n",
             protocol_name(config.protocol),
             outcomes.empty() ? config.repetitions : outcomes.front().report.repetitions,
             seed_label(config), config.scales.to_string(), config.corpus.generic_string());
  fmt::print(out, "{:<24}{:>10}  {}\n", "method", "accuracy", "source");
  for (const MethodOutcome& o : outcomes) {
    fmt::print(out, "{:<24}{:>10.2f}  computed\n", method_name(o.method), o.report.overall_accuracy);
  }
  for (const ReportedResult& r : kReportedUsptexHoldout) {
    fmt::print(out, "{:<24}{:>10.2f}  reported (USPTex, 1NN + holdout)\n", r.method, r.accuracy);
  }
}

void render_features_csv(std::ostream& out, const RunConfig& config,
                         std::span<const LabeledFeature> samples) {
  std::vector<std::string> names;
  if (config.method == Method::AverageRgb) {
    names = {"mean_r", "mean_g", "mean_b"};
  } else {
    names = feature_names(config.scales);
  }
  fmt::print(out, "id,label");
  for (const std::string& n : names) fmt::print(out, ",{}", n);
  fmt::print(out, "\n");
  for (const LabeledFeature& s : samples) {
    fmt::print(out, "{},{}", csv_field(s.id), csv_field(s.label));
    for (double v : s.vector) fmt::print(out, ",{:.17g}", v);
    fmt::print(out, "\n");
  }
}

}  // namespace spg::cli
