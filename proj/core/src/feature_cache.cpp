#include <cstdint>
#include <fstream>
#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "spg/dataset.hpp"
#include "spg/errors.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace spg {

namespace {

constexpr int kCacheFormat = 1;

std::uint64_t fnv1a(std::string_view text, std::uint64_t hash = 14695981039346656037ull) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace

FeatureCache::FeatureCache(fs::path file, std::string fingerprint)
    : file_(std::move(file)), fingerprint_(std::move(fingerprint)) {}

FeatureCache FeatureCache::for_corpus(const fs::path& directory, const fs::path& corpus_root,
                                      std::string fingerprint) {
  std::error_code ec;
  fs::path canonical = fs::weakly_canonical(fs::absolute(corpus_root), ec);
  if (ec) canonical = corpus_root;
  const std::uint64_t hash = fnv1a(fingerprint, fnv1a(canonical.generic_string() + '\n'));
  std::string stem = canonical.filename().string();
  if (stem.empty()) stem = "corpus";
  fs::path file = directory / fmt::format("{}-{:016x}.jsonl", stem, hash);
  return FeatureCache(std::move(file), std::move(fingerprint));
}

std::optional<std::vector<LabeledFeature>> FeatureCache::load() const {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    const json header = json::parse(line);
    if (header.value("type", "") != "header" || header.value("format", 0) != kCacheFormat ||
        header.value("fingerprint", "") != fingerprint_) {
      return std::nullopt;
    }
  } catch (const json::exception&) {
    return std::nullopt;
  }

  std::vector<LabeledFeature> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      LabeledFeature f;
      f.id = rec.at("id").get<std::string>();
      f.label = rec.at("label").get<std::string>();
      f.vector = rec.at("values").get<std::vector<double>>();
      records.push_back(std::move(f));
    } catch (const json::exception& e) {
      throw DataError(
          fmt::format("malformed cache record at {}:{}: {}", file_.string(), line_no, e.what()));
    }
  }
  return records;
}

void FeatureCache::save(std::span<const LabeledFeature> samples) const {
  std::error_code ec;
  if (file_.has_parent_path()) {
    fs::create_directories(file_.parent_path(), ec);
    if (ec) {
      throw DataError(fmt::format("cannot create cache directory '{}': {}",
                                  file_.parent_path().string(), ec.message()));
    }
  }
  fs::path tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw DataError(fmt::format("cannot write cache file '{}'", tmp.string()));
    }
    const json header = {{"type", "header"}, {"format", kCacheFormat}, {"fingerprint", fingerprint_}};
    out << header.dump() << '\n';
    for (const LabeledFeature& s : samples) {
      std::string values;
      for (std::size_t k = 0; k < s.vector.size(); ++k) {
        if (k) values += ',';
        values += fmt::format("{:.17g}", s.vector[k]);
      }
      out << fmt::format(R"({{"id":{},"label":{},"values":[{}]}})", json(s.id).dump(),
                         json(s.label).dump(), values)
          << '\n';
    }
    if (!out.flush()) {
      throw DataError(fmt::format("cannot write cache file '{}'", tmp.string()));
    }
  }
  fs::rename(tmp, file_, ec);
  if (ec) {
    throw DataError(fmt::format("cannot replace cache file '{}': {}", file_.string(), ec.message()));
  }
}

}  // namespace spg
