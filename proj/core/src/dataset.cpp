#include "spg/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include <fmt/format.h>

#include "spg/errors.hpp"
#include "spg/image_io.hpp"
#include "spg/parallel.hpp"

namespace fs = std::filesystem;

namespace spg {

namespace {

void emit(const WarningSink& warn, const std::string& message) {
  if (warn) warn(message);
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) {
    out += "\n  ";
    out += line;
  }
  return out;
}

std::vector<fs::directory_entry> sorted_entries(const fs::path& dir) {
  std::vector<fs::directory_entry> entries;
  for (const auto& entry : fs::directory_iterator(dir)) entries.push_back(entry);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.path().filename().string() < b.path().filename().string();
  });
  return entries;
}

}  // namespace

std::size_t CorpusManifest::sample_count() const {
  std::size_t n = 0;
  for (const CorpusClass& c : classes) n += c.samples.size();
  return n;
}

CorpusManifest scan_corpus(const fs::path& root, const WarningSink& warn) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw DataError(fmt::format("corpus root '{}' does not exist or is not a directory",
                                root.string()));
  }
  CorpusManifest manifest;
  manifest.root = root;
  for (const auto& class_entry : sorted_entries(root)) {
    if (!class_entry.is_directory()) {
      emit(warn, fmt::format("ignoring '{}': not a class directory", class_entry.path().string()));
      continue;
    }
    CorpusClass cls;
    cls.name = class_entry.path().filename().string();
    for (const auto& entry : sorted_entries(class_entry.path())) {
      if (!entry.is_regular_file() || !is_image_file(entry.path())) {
        emit(warn, fmt::format("ignoring '{}': not an image file", entry.path().string()));
        continue;
      }
      cls.samples.push_back(cls.name + "/" + entry.path().filename().string());
    }
    if (cls.samples.empty()) {
      emit(warn, fmt::format("ignoring class '{}': no images", cls.name));
      continue;
    }
    manifest.classes.push_back(std::move(cls));
  }
  if (manifest.classes.empty()) {
    throw DataError(fmt::format("no classes found in '{}'", root.string()));
  }

  std::vector<std::string> unreadable;
  std::vector<std::string> non_square;
  std::vector<std::string> mismatched;
  std::optional<ImageSize> reference;
  std::string reference_id;
  for (const CorpusClass& cls : manifest.classes) {
    for (const std::string& id : cls.samples) {
      const auto size = probe_image_size(root / id);
      if (!size) {
        unreadable.push_back(id);
        continue;
      }
      if (size->width != size->height) {
        non_square.push_back(fmt::format("{} ({}x{})", id, size->width, size->height));
        continue;
      }
      if (!reference) {
        reference = size;
        reference_id = id;
      } else if (*size != *reference) {
        mismatched.push_back(fmt::format("{} ({}x{})", id, size->width, size->height));
      }
    }
  }
  if (!unreadable.empty()) {
    throw DataError(fmt::format("unreadable image files:{}", join_lines(unreadable)));
  }
  if (!non_square.empty()) {
    throw DataError(fmt::format("images must be square:{}", join_lines(non_square)));
  }
  if (!mismatched.empty()) {
    throw DataError(fmt::format("mixed image sizes; expected {}x{} like '{}':{}", reference->width,
                                reference->height, reference_id, join_lines(mismatched)));
  }
  manifest.image_side = reference->width;
  return manifest;
}

std::string_view method_name(Method method) {
  return method == Method::SpgHsi ? "spg-hsi" : "average-rgb";
}

Method parse_method(std::string_view text) {
  if (text == "spg-hsi") return Method::SpgHsi;
  if (text == "average-rgb") return Method::AverageRgb;
  throw ConfigError(fmt::format("unknown method '{}' (expected spg-hsi or average-rgb)", text));
}

FeatureVector compute_features(const RgbImage& image, Method method, const ScaleSpec& scales) {
  if (method == Method::AverageRgb) {
    return average_rgb_features(image);
  }
  return extract_multiscale(convert_image(image), scales);
}

std::string pipeline_fingerprint(Method method, const ScaleSpec& scales) {
  if (method == Method::AverageRgb) {
    return fmt::format("spg-hsi/{};method=average-rgb", SPG_VERSION_STRING);
  }
  return fmt::format(
      "spg-hsi/{};method=spg-hsi;scales={};color=hsi-gonzalez-woods,levels={},round-half-up;"
      "graph=chebyshev-{},weight=absdiff-plus-mean,si-coupled-aligned;endpoints=mid-floor;"
      "sigma=population",
      SPG_VERSION_STRING, scales.to_string(), kLevels, kChebyshevThreshold);
}

ExtractResult extract_corpus(const CorpusManifest& manifest, const ExtractOptions& options) {
  if (options.method == Method::SpgHsi) {
    options.scales.validate_for(manifest.image_side);
  }
  const std::size_t expected_length =
      options.method == Method::SpgHsi ? options.scales.vector_length() : 3;

  struct Slot {
    std::string id;
    std::string label;
  };
  std::vector<Slot> slots;
  for (const CorpusClass& cls : manifest.classes) {
    for (const std::string& id : cls.samples) slots.push_back({id, cls.name});
  }

  ExtractResult result;
  std::optional<FeatureCache> cache;
  std::unordered_map<std::string, LabeledFeature> cached;
  if (options.cache_dir) {
    cache = FeatureCache::for_corpus(*options.cache_dir, manifest.root,
                                     pipeline_fingerprint(options.method, options.scales));
    result.cache_file = cache->file();
    if (auto records = cache->load()) {
      for (LabeledFeature& rec : *records) {
        if (rec.vector.size() == expected_length) cached.emplace(rec.id, std::move(rec));
      }
    }
  }

  std::vector<std::optional<LabeledFeature>> features(slots.size());
  std::vector<std::string> failures(slots.size());
  std::vector<std::uint8_t> computed(slots.size(), 0);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto hit = cached.find(slots[k].id);
    if (hit != cached.end() && hit->second.label == slots[k].label) {
      features[k] = std::move(hit->second);
      ++result.stats.cache_hits;
    }
  }

  std::atomic<std::size_t> decoded{0};
  parallel_for(slots.size(), options.threads, [&](std::size_t k) {
    if (features[k]) return;
    try {
      const RgbImage image = decode_image(manifest.root / slots[k].id);
      decoded.fetch_add(1, std::memory_order_relaxed);
      if (image.width() != manifest.image_side || image.height() != manifest.image_side) {
        throw DataError(fmt::format("image '{}' decoded as {}x{}, expected {}x{}", slots[k].id,
                                    image.width(), image.height(), manifest.image_side,
                                    manifest.image_side));
      }
      features[k] = LabeledFeature{slots[k].id, slots[k].label,
                                   compute_features(image, options.method, options.scales)};
      computed[k] = 1;
    } catch (const DataError& e) {
      failures[k] = e.what();
    }
  });
  result.stats.decoded = decoded.load();

  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (failures[k].empty()) continue;
    if (!options.skip_bad) {
      throw DataError(failures[k]);
    }
    emit(options.warn, fmt::format("skipping: {}", failures[k]));
    ++result.stats.skipped;
  }

  result.samples.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (features[k]) {
      result.stats.computed += computed[k];
      result.samples.push_back(std::move(*features[k]));
    }
  }
  if (cache && (result.stats.computed > 0 || result.stats.cache_hits != cached.size() ||
                !fs::exists(cache->file()))) {
    cache->save(result.samples);
  }
  return result;
}

}  // namespace spg
