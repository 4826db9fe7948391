#include "spg/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "spg/errors.hpp"

namespace spg {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    acc += d * d;
  }
  return acc;
}

/// 1NN over samples with index `skip` left out; ties go to the smallest index.
std::size_t nearest(std::span<const LabeledFeature> samples, std::span<const double> query,
                    std::size_t skip) {
  std::size_t best = samples.size();
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k == skip) continue;
    if (samples[k].vector.size() != query.size()) {
      throw ContractError(fmt::format("training sample '{}' has {} values, query has {}",
                                      samples[k].id, samples[k].vector.size(), query.size()));
    }
    const double d = squared_distance(samples[k].vector, query);
    if (d < best_distance || best == samples.size()) {
      best_distance = d;
      best = k;
    }
  }
  return best;
}

void check_uniform_length(std::span<const LabeledFeature> samples) {
  for (const LabeledFeature& s : samples) {
    if (s.vector.size() != samples.front().vector.size()) {
      throw ContractError(fmt::format("sample '{}' has {} values, expected {}", s.id,
                                      s.vector.size(), samples.front().vector.size()));
    }
  }
}

std::vector<std::string> sorted_classes(std::span<const LabeledFeature> samples) {
  std::vector<std::string> classes;
  for (const LabeledFeature& s : samples) classes.push_back(s.label);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

/// Accumulates predictions into a report.
class Tally {
 public:
  explicit Tally(std::vector<std::string> classes) : classes_(std::move(classes)) {
    confusion_.assign(classes_.size(), std::vector<std::size_t>(classes_.size(), 0));
  }

  void record(const std::string& truth, const std::string& predicted) {
    ++confusion_[slot(truth)][slot(predicted)];
    ++round_total_;
    if (truth == predicted) ++round_correct_;
  }

  void end_repetition() {
    accuracies_.push_back(round_total_ == 0 ? 0.0 : 100.0 * double(round_correct_) / double(round_total_));
    round_total_ = 0;
    round_correct_ = 0;
  }

  EvalReport finish(Protocol protocol, int repetitions, std::uint64_t seed) && {
    EvalReport report;
    report.protocol = protocol;
    report.repetitions = repetitions;
    report.seed = seed;
    report.repetition_accuracies = std::move(accuracies_);
    report.overall_accuracy =
        std::accumulate(report.repetition_accuracies.begin(), report.repetition_accuracies.end(),
                        0.0) /
        double(report.repetition_accuracies.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      ClassAccuracy acc;
      acc.label = classes_[c];
      acc.tested = std::accumulate(confusion_[c].begin(), confusion_[c].end(), std::size_t{0});
      acc.correct = confusion_[c][c];
      acc.accuracy = acc.tested == 0 ? 0.0 : 100.0 * double(acc.correct) / double(acc.tested);
      report.predictions += acc.tested;
      report.per_class.push_back(std::move(acc));
    }
    report.classes = std::move(classes_);
    report.confusion = std::move(confusion_);
    return report;
  }

 private:
  std::size_t slot(const std::string& label) const {
    return static_cast<std::size_t>(
        std::lower_bound(classes_.begin(), classes_.end(), label) - classes_.begin());
  }

  std::vector<std::string> classes_;
  std::vector<std::vector<std::size_t>> confusion_;
  std::vector<double> accuracies_;
  std::size_t round_total_ = 0;
  std::size_t round_correct_ = 0;
};

std::vector<LabeledFeature> standardized(std::span<const LabeledFeature> samples,
                                         const ZScore& z) {
  std::vector<LabeledFeature> out(samples.begin(), samples.end());
  for (LabeledFeature& s : out) s.vector = z.apply(s.vector);
  return out;
}

}  // namespace

std::string_view protocol_name(Protocol protocol) {
  return protocol == Protocol::Loocv ? "loocv" : "holdout";
}

Protocol parse_protocol(std::string_view text) {
  if (text == "loocv") return Protocol::Loocv;
  if (text == "holdout") return Protocol::Holdout;
  throw ConfigError(fmt::format("unknown protocol '{}' (expected loocv or holdout)", text));
}

std::size_t nn_predict_index(std::span<const LabeledFeature> train,
                             std::span<const double> query) {
  if (train.empty()) {
    throw ContractError("1NN needs a non-empty training set");
  }
  return nearest(train, query, train.size());
}

const std::string& nn_predict(std::span<const LabeledFeature> train,
                              std::span<const double> query) {
  return train[nn_predict_index(train, query)].label;
}

EvalReport eval_loocv(std::span<const LabeledFeature> samples, const EvalOptions& options) {
  if (samples.size() < 2) {
    throw ConfigError("leave-one-out needs at least 2 samples");
  }
  std::vector<std::string> classes = sorted_classes(samples);
  if (classes.size() < 2) {
    throw ConfigError("leave-one-out needs at least 2 classes");
  }
  check_uniform_length(samples);

  std::vector<LabeledFeature> working(samples.begin(), samples.end());
  if (options.zscore) working = standardized(samples, ZScore::fit(samples));

  Tally tally(std::move(classes));
  for (std::size_t k = 0; k < working.size(); ++k) {
    const std::size_t hit = nearest(working, working[k].vector, k);
    tally.record(working[k].label, working[hit].label);
  }
  tally.end_repetition();
  return std::move(tally).finish(Protocol::Loocv, 1, 0);
}

EvalReport eval_holdout(std::span<const LabeledFeature> samples, int repetitions,
                        std::uint64_t seed, const EvalOptions& options) {
  if (repetitions < 1) {
    throw ConfigError(fmt::format("repetition count must be at least 1, got {}", repetitions));
  }
  if (samples.empty()) {
    throw ConfigError("holdout needs samples");
  }
  check_uniform_length(samples);

  Tally tally(sorted_classes(samples));
  std::mt19937_64 rng(seed);
  std::vector<LabeledFeature> train;
  std::vector<const LabeledFeature*> test;
  for (int rep = 0; rep < repetitions; ++rep) {
    const std::vector<bool> in_train = stratified_split(samples, rng);
    train.clear();
    test.clear();
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (in_train[k]) {
        train.push_back(samples[k]);
      } else {
        test.push_back(&samples[k]);
      }
    }
    if (options.zscore) {
      const ZScore z = ZScore::fit(train);
      for (LabeledFeature& t : train) t.vector = z.apply(t.vector);
      for (const LabeledFeature* t : test) {
        tally.record(t->label, nn_predict(train, z.apply(t->vector)));
      }
    } else {
      for (const LabeledFeature* t : test) {
        tally.record(t->label, nn_predict(train, t->vector));
      }
    }
    tally.end_repetition();
  }
  return std::move(tally).finish(Protocol::Holdout, repetitions, seed);
}

FeatureVector average_rgb_features(const RgbImage& image) {
  std::uint64_t r = 0;
  std::uint64_t g = 0;
  std::uint64_t b = 0;
  for (const Rgb& px : image.pixels()) {
    r += px.r;
    g += px.g;
    b += px.b;
  }
  const double n = static_cast<double>(image.pixels().size());
  return {double(r) / n, double(g) / n, double(b) / n};
}

ZScore ZScore::fit(std::span<const LabeledFeature> samples) {
  if (samples.empty()) {
    throw ContractError("cannot fit standardization on an empty set");
  }
  const std::size_t dim = samples.front().vector.size();
  const double n = double(samples.size());
  ZScore z;
  z.mean.assign(dim, 0.0);
  z.scale.assign(dim, 0.0);
  for (const LabeledFeature& s : samples) {
    for (std::size_t k = 0; k < dim; ++k) z.mean[k] += s.vector[k];
  }
  for (double& m : z.mean) m /= n;
  std::vector<double> var(dim, 0.0);
  for (const LabeledFeature& s : samples) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double d = s.vector[k] - z.mean[k];
      var[k] += d * d;
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    const double sigma = std::sqrt(var[k] / n);
    z.scale[k] = sigma > 0.0 ? 1.0 / sigma : 0.0;
  }
  return z;
}

FeatureVector ZScore::apply(std::span<const double> v) const {
  FeatureVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = (v[k] - mean[k]) * scale[k];
  return out;
}

}  // namespace spg
