#include "colorlab/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace colorlab::analysis {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

bool is_iso8601(const std::string& s) {
  static const std::regex re(R"(\d{4}-\d{2}-\d{2}(T\d{2}:\d{2}(:\d{2}(\.\d+)?)?(Z|[+-]\d{2}:?\d{2})?)?)");
  return std::regex_match(s, re);
}

bool has_separator(std::string_view s) { return s.find_first_of(",\r\n") != std::string_view::npos; }

// Parses one data row; returns an error message or empty on success.
std::string parse_row(const std::string& line, SessionRecord& out) {
  const auto f = split(line, ',');
  if (f.size() != 6) return "expected 6 fields, got " + std::to_string(f.size());
  if (f[0].empty()) return "empty participant_id";
  out.participant_id = f[0];

  out.model = model_label(f[1]);
  if (out.model.empty()) return "unknown model '" + f[1] + "'";

  const auto target = parse_hex(f[2]);
  if (!target) return "bad target_hex '" + f[2] + "'";
  out.target = *target;

  out.components.clear();
  for (const auto& c : split(f[3], ';')) {
    double v = 0.0;
    if (!parse_double(c, v)) return "bad component '" + c + "'";
    out.components.push_back(v);
  }
  const auto expected = label_component_count(out.model);
  if (out.components.size() != expected) {
    return out.model + " takes " + std::to_string(expected) + " components, got " +
           std::to_string(out.components.size());
  }

  if (!parse_double(f[4], out.elapsed_s)) return "bad elapsed_s '" + f[4] + "'";
  if (!(out.elapsed_s > 0.0)) return "elapsed_s must be positive";

  if (!is_iso8601(f[5])) return "timestamp is not ISO-8601: '" + f[5] + "'";
  out.timestamp = f[5];
  return {};
}

}  // namespace

std::string model_label(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "rgb") return "RGB";
  const auto m = parse_model(name);
  return m ? std::string(display_name(*m)) : std::string{};
}

std::size_t label_component_count(std::string_view label) {
  if (label == "RGB") return 3;
  const auto m = parse_model(label);
  if (!m) throw std::invalid_argument("unknown model label: " + std::string(label));
  return component_count(*m);
}

void validate(const SessionRecord& r) {
  if (r.participant_id.empty() || has_separator(r.participant_id)) {
    throw std::invalid_argument("participant_id must be non-empty and free of commas and line breaks");
  }
  if (model_label(r.model).empty()) throw std::invalid_argument("unknown model: " + r.model);
  if (r.components.size() != label_component_count(model_label(r.model))) {
    throw std::invalid_argument("component count does not match the model");
  }
  for (double c : r.components) {
    if (!std::isfinite(c)) throw std::invalid_argument("components must be finite");
  }
  if (!(r.elapsed_s > 0.0) || !std::isfinite(r.elapsed_s)) throw std::invalid_argument("elapsed_s must be positive");
  if (!is_iso8601(r.timestamp)) throw std::invalid_argument("timestamp must be ISO-8601");
}

std::string to_csv_row(const SessionRecord& r) {
  validate(r);
  std::string out = r.participant_id + ',' + model_label(r.model) + ',' + to_hex(r.target) + ',';
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    if (i) out += ';';
    out += shortest(r.components[i]);
  }
  out += ',' + shortest(r.elapsed_s) + ',' + r.timestamp;
  return out;
}

std::string to_csv(const std::vector<SessionRecord>& records) {
  std::string out(kSessionHeader);
  out += '\n';
  for (const auto& r : records) out += to_csv_row(r) + '\n';
  return out;
}

IngestResult ingest_sessions(std::istream& in) {
  IngestResult result;
  std::string line;
  std::size_t n = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line != kSessionHeader) {
        throw std::invalid_argument("line 1: expected header '" + std::string(kSessionHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    SessionRecord r;
    auto err = parse_row(line, r);
    if (err.empty()) {
      result.records.push_back(std::move(r));
    } else {
      result.rejected.push_back({n, std::move(err)});
    }
  }
  if (!header_seen) throw std::invalid_argument("session file is empty");
  if (result.records.empty()) throw std::invalid_argument("session file has no valid rows");
  return result;
}

IngestResult ingest_sessions(const std::string& text) {
  std::istringstream in(text);
  return ingest_sessions(in);
}

IngestResult ingest_sessions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open session file: " + path);
  return ingest_sessions(in);
}

MeanTable mean_times(const std::vector<SessionRecord>& records) {
  std::map<std::string, std::pair<double, std::size_t>> acc;
  for (const auto& r : records) {
    auto& [sum, count] = acc[model_label(r.model)];
    sum += r.elapsed_s;
    ++count;
  }
  MeanTable out;
  for (const auto& [label, sc] : acc) out[label] = sc.first / static_cast<double>(sc.second);
  return out;
}

const MeanTable& published_intuitiveness_means() {
  static const MeanTable means = {
      {"CMY", 50.58}, {"CMYK", 46.69}, {"HSI", 48.80},   {"HSL", 63.88},   {"HSV", 34.25}, {"LAB", 58.74},
      {"LUV", 34.37}, {"RGB", 54.69},  {"XYZ", 122.71}, {"YCbCr", 57.29}, {"YIQ", 58.54}, {"YUV", 38.63},
  };
  return means;
}

KMeansResult kmeans_1d(const MeanTable& values, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  for (const auto& [label, v] : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value for " + label);
  }
  const std::set<double> distinct_set = [&] {
    std::set<double> s;
    for (const auto& [label, v] : values) s.insert(v);
    return s;
  }();
  if (distinct_set.size() < k) {
    throw std::invalid_argument("k-means needs at least " + std::to_string(k) + " distinct values, got " +
                                std::to_string(distinct_set.size()));
  }
  const std::vector<double> distinct(distinct_set.begin(), distinct_set.end());
  const std::size_t m = distinct.size();

  KMeansResult result;
  result.centroids.resize(k);
  for (std::size_t j = 0; j < k; ++j) result.centroids[j] = k == 1 ? distinct[(m - 1) / 2] : distinct[j * (m - 1) / (k - 1)];

  // Work on values sorted ascending so the result never depends on input order.
  std::vector<std::pair<double, std::string>> points;
  for (const auto& [label, v] : values) points.emplace_back(v, label);
  std::sort(points.begin(), points.end());

  std::vector<std::size_t> assign(points.size(), k);
  constexpr std::size_t kMaxIterations = 1000;
  for (std::size_t it = 1; it <= kMaxIterations; ++it) {
    bool changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::size_t best = 0;
      double best_d = std::abs(points[i].first - result.centroids[0]);
      for (std::size_t j = 1; j < k; ++j) {
        const double d = std::abs(points[i].first - result.centroids[j]);
        if (d < best_d) {  // strict: ties stay with the lower centroid
          best = j;
          best_d = d;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    result.iterations = it;
    if (!changed) break;
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      sum[assign[i]] += points[i].first;
      ++count[assign[i]];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (count[j]) result.centroids[j] = sum[j] / static_cast<double>(count[j]);
    }
  }

  // Relabel by ascending centroid.
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return result.centroids[a] < result.centroids[b]; });
  std::vector<std::size_t> rank(k);
  std::vector<double> sorted(k);
  for (std::size_t r = 0; r < k; ++r) {
    rank[order[r]] = r;
    sorted[r] = result.centroids[order[r]];
  }
  result.centroids = std::move(sorted);
  for (std::size_t i = 0; i < points.size(); ++i) result.cluster[points[i].second] = rank[assign[i]];
  return result;
}

std::string_view to_string(Intuitiveness level) {
  switch (level) {
    case Intuitiveness::High: return "High";
    case Intuitiveness::Medium: return "Medium";
    case Intuitiveness::Low: return "Low";
  }
  return "Medium";
}

std::vector<IntuitivenessRow> categorize_intuitiveness(const MeanTable& means) {
  const auto km = kmeans_1d(means, 3);
  std::vector<IntuitivenessRow> rows;
  rows.reserve(means.size());
  for (const auto& [label, mean] : means) {
    const std::size_t c = km.cluster.at(label);
    rows.push_back({label, mean, c, static_cast<Intuitiveness>(c)});
  }
  return rows;
}

std::string to_csv(const std::vector<IntuitivenessRow>& rows) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.model + ',' + shortest(r.mean_s) + ',' + std::to_string(r.cluster) + ',' +
           std::string(to_string(r.category)) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<IntuitivenessRow>& rows) {
  auto j = nlohmann::json::array();
  for (const auto& r : rows) {
    j.push_back({{"model", r.model},
                 {"mean_s", r.mean_s},
                 {"cluster", r.cluster},
                 {"category", std::string(to_string(r.category))}});
  }
  return j.dump(2) + '\n';
}

}  // namespace colorlab::analysis
