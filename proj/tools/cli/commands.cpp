#include "cli/commands.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "cli/render.hpp"
#include "spg/errors.hpp"

namespace spg::cli {

namespace {

struct Corpus {
  CorpusManifest manifest;
  ExtractResult extracted;
};

WarningSink warnings_to(std::ostream& err) {
  return [&err](const std::string& message) { fmt::print(err, "warning: {}\n", message); };
}

Corpus load_corpus(const RunConfig& config, Method method, std::ostream& err) {
  Corpus corpus;
  corpus.manifest = scan_corpus(config.corpus, warnings_to(err));
  if (method == Method::SpgHsi) config.scales.validate_for(corpus.manifest.image_side);

  ExtractOptions options;
  options.method = method;
  options.scales = config.scales;
  if (config.use_cache) options.cache_dir = config.cache_dir;
  options.threads = config.threads;
  options.skip_bad = config.skip_bad;
  options.warn = warnings_to(err);
  corpus.extracted = extract_corpus(corpus.manifest, options);
  return corpus;
}

MethodOutcome evaluate_method(const RunConfig& config, Method method, std::ostream& err) {
  const Corpus corpus = load_corpus(config, method, err);
  const std::vector<LabeledFeature>& samples = corpus.extracted.samples;
  const EvalOptions options{.zscore = config.zscore};
  MethodOutcome outcome{method, samples.size(), {}};
  outcome.report = config.protocol == Protocol::Loocv
                       ? eval_loocv(samples, options)
                       : eval_holdout(samples, config.repetitions, config.seed, options);
  return outcome;
}

int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Corpus corpus = load_corpus(config, config.method, err);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ExtractResult& r = corpus.extracted;
  const std::size_t length = r.samples.empty() ? 0 : r.samples.front().vector.size();
  const std::string cache =
      r.cache_file ? r.cache_file->generic_string() : std::string("disabled");

  switch (config.output) {
    case OutputFormat::Csv:
      render_features_csv(out, config, r.samples);
      fmt::print(err, "{} samples, vector length {}, {:.2f} s, cache {}\n", r.samples.size(),
                 length, seconds, cache);
      break;
    case OutputFormat::Json: {
      const nlohmann::json j = {{"method", method_name(config.method)},
                                {"scales", config.scales.to_string()},
                                {"samples", r.samples.size()},
                                {"classes", corpus.manifest.classes.size()},
                                {"vector_length", length},
                                {"computed", r.stats.computed},
                                {"cache_hits", r.stats.cache_hits},
                                {"skipped", r.stats.skipped},
                                {"seconds", seconds},
                                {"cache", cache}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table:
      fmt::print(out,
                 "{} samples in {} classes, vector length {}, computed {}, cached {}, "
                 "skipped {}, {:.2f} s, cache {}\n",
                 r.samples.size(), corpus.manifest.classes.size(), length, r.stats.computed,
                 r.stats.cache_hits, r.stats.skipped, seconds, cache);
      break;
  }
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  render_report(out, config, evaluate_method(config, config.method, err));
  return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<MethodOutcome> outcomes{evaluate_method(config, Method::SpgHsi, err),
                                            evaluate_method(config, Method::AverageRgb, err)};
  render_comparison(out, config, outcomes);
  return kExitOk;
}

void add_corpus_flags(CLI::App& sub, RunConfig& config, std::string& scales, std::string& method,
                      std::string& output, std::string& cache) {
  sub.add_option("--corpus", config.corpus, "Corpus root laid out as <class>/<image>")
      ->required();
  sub.add_option("--scales", scales, "Comma-separated grid sizes")->capture_default_str();
  sub.add_option("--method", method, "spg-hsi or average-rgb")->capture_default_str();
  sub.add_option("--output", output, "table, csv or json")->capture_default_str();
  sub.add_option("--cache", cache, "Feature cache directory")->capture_default_str();
  sub.add_flag("--no-cache", "Neither read nor write the feature cache");
  sub.add_option("--threads", config.threads, "Extraction workers (0: all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub.add_flag("--skip-bad", config.skip_bad, "Drop undecodable images instead of failing");
}

void add_protocol_flags(CLI::App& sub, RunConfig& config, std::string& protocol) {
  sub.add_option("--protocol", protocol, "loocv or holdout")->capture_default_str();
  sub.add_option("--reps", config.repetitions, "Holdout repetitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--seed", config.seed, "Holdout split seed")->capture_default_str();
  sub.add_flag("--zscore", config.zscore, "Standardize features with training statistics");
}

OutputFormat parse_output(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError(fmt::format("unknown output format '{}' (expected table, csv or json)", text));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string scales = config.scales.to_string();
  std::string method{method_name(config.method)};
  std::string protocol{protocol_name(config.protocol)};
  std::string output = "table";
  std::string cache = config.cache_dir.generic_string();

  CLI::App app{"Shortest-path color texture descriptors", "spg_hsi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SPG_VERSION_STRING);

  CLI::App* extract = app.add_subcommand("extract", "Compute and cache descriptors");
  add_corpus_flags(*extract, config, scales, method, output, cache);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Classify the corpus with 1NN");
  add_corpus_flags(*evaluate, config, scales, method, output, cache);
  add_protocol_flags(*evaluate, config, protocol);

  CLI::App* compare = app.add_subcommand("compare", "Evaluate spg-hsi and average-rgb together");
  add_corpus_flags(*compare, config, scales, method, output, cache);
  add_protocol_flags(*compare, config, protocol);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  try {
    config.scales = ScaleSpec::parse(scales);
    config.method = parse_method(method);
    config.protocol = parse_protocol(protocol);
    config.output = parse_output(output);
    config.cache_dir = cache;
    config.use_cache = chosen->count("--no-cache") == 0;
    if (config.protocol == Protocol::Loocv) config.repetitions = 1;

    if (config.command == "extract") return cmd_extract(config, out, err);
    if (config.command == "evaluate") return cmd_evaluate(config, out, err);
    return cmd_compare(config, out, err);
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const DataError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
}

}  // namespace spg::cli
