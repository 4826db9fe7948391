#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spg/colorspace.hpp"
#include "spg/features.hpp"

namespace spg {

struct LabeledFeature {
  std::string id;
  std::string label;
  FeatureVector vector;
  friend bool operator==(const LabeledFeature&, const LabeledFeature&) = default;
};

enum class Protocol : std::uint8_t { Loocv, Holdout };

std::string_view protocol_name(Protocol protocol);
/// Accepts "loocv" and "holdout"; throws ConfigError otherwise.
Protocol parse_protocol(std::string_view text);

/// Number of holdout repetitions used in the published experiments.
inline constexpr int kDefaultRepetitions = 10;

struct ClassAccuracy {
  std::string label;
  std::size_t tested = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;  ///< percent
};

struct EvalReport {
  Protocol protocol = Protocol::Loocv;
  int repetitions = 1;
  std::uint64_t seed = 0;
  double overall_accuracy = 0.0;                ///< percent, mean over repetitions
  std::vector<double> repetition_accuracies;    ///< percent
  std::vector<std::string> classes;             ///< sorted; indexes the confusion matrix
  std::vector<ClassAccuracy> per_class;         ///< from the summed confusion matrix
  std::vector<std::vector<std::size_t>> confusion;  ///< [true][predicted], summed over repetitions
  std::size_t predictions = 0;
};

struct EvalOptions {
  /// Standardize every dimension to zero mean and unit variance using
  /// training statistics before measuring distances.
  bool zscore = false;
};

/// Index of the training sample nearest to the query (Euclidean); ties go to
/// the smallest index. Throws ContractError on an empty set or length mismatch.
std::size_t nn_predict_index(std::span<const LabeledFeature> train, std::span<const double> query);

const std::string& nn_predict(std::span<const LabeledFeature> train,
                              std::span<const double> query);

/// Each sample classified by 1NN against all others.
EvalReport eval_loocv(std::span<const LabeledFeature> samples, const EvalOptions& options = {});

/// Number of training samples drawn from a class of class_size samples.
constexpr std::size_t holdout_train_count(std::size_t class_size) {
  return (2 * class_size + 2) / 3;
}

/// Training-set membership for one stratified 2/3 : 1/3 split. The generator
/// state advances; classes are visited in sorted order.
template <class Rng>
std::vector<bool> stratified_split(std::span<const LabeledFeature> samples, Rng& rng);

/// Repeated stratified holdout; the reported accuracy is the mean over repetitions.
EvalReport eval_holdout(std::span<const LabeledFeature> samples, int repetitions,
                        std::uint64_t seed, const EvalOptions& options = {});

/// [mean R, mean G, mean B].
FeatureVector average_rgb_features(const RgbImage& image);

/// Per-dimension mean and population standard deviation of the given vectors.
struct ZScore {
  std::vector<double> mean;
  std::vector<double> scale;  ///< 1/sigma, or 0 for constant dimensions

  static ZScore fit(std::span<const LabeledFeature> samples);
  FeatureVector apply(std::span<const double> v) const;
};

}  // namespace spg

#include "spg/detail/stratified_split.hpp"
