#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorlab/types.hpp"

namespace colorlab::analysis {

/// Display label for a model name accepted by the analysis ("rgb" -> "RGB",
/// "lab" -> "LAB"). Unlike the conversion API, RGB is admitted here.
/// Returns an empty string for unknown names.
std::string model_label(std::string_view name);

/// Number of slider components for a label from model_label (3 for RGB).
std::size_t label_component_count(std::string_view label);

/// One color-matching trial.
struct SessionRecord {
  std::string participant_id;
  std::string model;  // label as returned by model_label
  Rgb8 target;
  std::vector<double> components;
  double elapsed_s = 0.0;
  std::string timestamp;  // ISO-8601

  friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

inline constexpr std::string_view kSessionHeader = "participant_id,model,target_hex,components,elapsed_s,timestamp";

/// Throws std::invalid_argument if a field cannot be written unambiguously
/// (commas or line breaks in text fields, bad component count, elapsed <= 0).
void validate(const SessionRecord& r);

/// One data row (no trailing newline). Components are joined with ';'.
std::string to_csv_row(const SessionRecord& r);

/// Header plus one row per record.
std::string to_csv(const std::vector<SessionRecord>& records);

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
};

struct IngestResult {
  std::vector<SessionRecord> records;
  std::vector<RejectedRow> rejected;
};

/// Parses a session CSV. Malformed rows are collected in `rejected` with
/// their 1-based line numbers. Throws std::invalid_argument for a missing or
/// wrong header and when no row is valid.
IngestResult ingest_sessions(std::istream& in);
IngestResult ingest_sessions(const std::string& text);

/// As above; throws std::runtime_error if the file cannot be opened.
IngestResult ingest_sessions_file(const std::string& path);

using MeanTable = std::map<std::string, double>;

/// Arithmetic mean of elapsed_s per model label.
MeanTable mean_times(const std::vector<SessionRecord>& records);

/// The twelve published per-model mean completion times, in seconds.
const MeanTable& published_intuitiveness_means();

struct KMeansResult {
  std::vector<double> centroids;              // strictly ascending
  std::map<std::string, std::size_t> cluster;  // label -> index into centroids
  std::size_t iterations = 0;
};

/// Deterministic one-dimensional k-means.
///
/// Seeds are the distinct sorted values at positions floor(j * (m - 1) / (k - 1)),
/// which for k = 3 are the minimum, median and maximum. Lloyd iterations run
/// until no assignment changes; a value equidistant from two centroids joins
/// the lower one. Clusters are numbered by ascending centroid. Throws
/// std::invalid_argument when there are fewer than k distinct values.
KMeansResult kmeans_1d(const MeanTable& values, std::size_t k = 3);

enum class Intuitiveness { High, Medium, Low };

std::string_view to_string(Intuitiveness level);

struct IntuitivenessRow {
  std::string model;
  double mean_s = 0.0;
  std::size_t cluster = 0;
  Intuitiveness category = Intuitiveness::Medium;
};

/// k = 3 clustering of the means; cluster 0 (fastest) is High, 2 is Low.
std::vector<IntuitivenessRow> categorize_intuitiveness(const MeanTable& means);

inline constexpr std::string_view kTableHeader = "model,mean_s,cluster,category";

std::string to_csv(const std::vector<IntuitivenessRow>& rows);
std::string to_json(const std::vector<IntuitivenessRow>& rows);

}  // namespace colorlab::analysis
