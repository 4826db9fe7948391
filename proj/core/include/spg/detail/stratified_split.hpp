#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "spg/errors.hpp"

namespace spg {

template <class Rng>
std::vector<bool> stratified_split(std::span<const LabeledFeature> samples, Rng& rng) {
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    by_class[samples[k].label].push_back(k);
  }
  std::vector<bool> train(samples.size(), false);
  for (auto& [label, members] : by_class) {
    if (members.size() < 3) {
      throw ConfigError("class '" + label + "' has " + std::to_string(members.size()) +
                        " samples; holdout needs at least 3");
    }
    std::shuffle(members.begin(), members.end(), rng);
    const std::size_t take = holdout_train_count(members.size());
    for (std::size_t k = 0; k < take; ++k) {
      train[members[k]] = true;
    }
  }
  return train;
}

}  // namespace spg
