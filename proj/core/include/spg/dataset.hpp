#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spg/classify.hpp"
#include "spg/features.hpp"

namespace spg {

/// Receives non-fatal diagnostics (skipped files, unreadable cache).
using WarningSink = std::function<void(const std::string&)>;

struct CorpusClass {
  std::string name;
  std::vector<std::string> samples;  ///< root-relative paths, '/'-separated, sorted
  friend bool operator==(const CorpusClass&, const CorpusClass&) = default;
};

/// Layout root/<class>/<image>. Classes and samples are sorted lexicographically.
struct CorpusManifest {
  std::filesystem::path root;
  std::vector<CorpusClass> classes;
  int image_side = 0;

  std::size_t sample_count() const;
  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

/// Walks the corpus tree. Non-image files are skipped with a warning.
/// Throws DataError for a missing or empty root, unreadable image headers,
/// non-square images or mixed image sizes (each listing the offending files).
CorpusManifest scan_corpus(const std::filesystem::path& root, const WarningSink& warn = {});

enum class Method : std::uint8_t { SpgHsi, AverageRgb };

std::string_view method_name(Method method);
/// Accepts "spg-hsi" and "average-rgb"; throws ConfigError otherwise.
Method parse_method(std::string_view text);

/// Descriptor of one decoded image under the given method.
FeatureVector compute_features(const RgbImage& image, Method method, const ScaleSpec& scales);

/// Identifies everything that changes feature values. Cached vectors are
/// reused only under an exactly equal fingerprint.
std::string pipeline_fingerprint(Method method, const ScaleSpec& scales);

/// JSON-lines feature cache: a header record carrying the fingerprint, then
/// one {id, label, values} record per sample. Values are written with 17
/// significant digits so they load back bit-identical.
class FeatureCache {
 public:
  FeatureCache(std::filesystem::path file, std::string fingerprint);

  /// Cache file for a corpus root under `directory`; the name embeds a hash
  /// of the root and the fingerprint.
  static FeatureCache for_corpus(const std::filesystem::path& directory,
                                 const std::filesystem::path& corpus_root,
                                 std::string fingerprint);

  const std::filesystem::path& file() const { return file_; }
  const std::string& fingerprint() const { return fingerprint_; }

  /// Records in file order; nullopt when the file is missing or its header
  /// fingerprint differs. Throws DataError on a malformed record.
  std::optional<std::vector<LabeledFeature>> load() const;

  /// Replaces the file atomically (temporary file, then rename).
  void save(std::span<const LabeledFeature> samples) const;

 private:
  std::filesystem::path file_;
  std::string fingerprint_;
};

struct ExtractOptions {
  Method method = Method::SpgHsi;
  ScaleSpec scales = ScaleSpec({32});
  std::optional<std::filesystem::path> cache_dir;
  int threads = 0;  ///< 0: available parallelism
  bool skip_bad = false;
  WarningSink warn;
};

struct ExtractStats {
  std::size_t decoded = 0;
  std::size_t cache_hits = 0;
  std::size_t computed = 0;
  std::size_t skipped = 0;
};

struct ExtractResult {
  std::vector<LabeledFeature> samples;  ///< manifest order
  ExtractStats stats;
  std::optional<std::filesystem::path> cache_file;
};

/// One LabeledFeature per manifest sample (id = root-relative path, label =
/// class directory). Decode failures abort with DataError unless skip_bad is
/// set, in which case the sample is dropped and reported through `warn`.
ExtractResult extract_corpus(const CorpusManifest& manifest, const ExtractOptions& options);

}  // namespace spg
