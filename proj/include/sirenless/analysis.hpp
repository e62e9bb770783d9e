#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sirenless/discourse.hpp"
#include "sirenless/entities.hpp"
#include "sirenless/ingest.hpp"
#include "sirenless/markers.hpp"
#include "sirenless/patterns.hpp"
#include "sirenless/scoring.hpp"
#include "sirenless/sentiment.hpp"
#include "sirenless/topics.hpp"

namespace sirenless {

inline constexpr int kSchemaVersion = 1;

/// Knobs a single request may change.
struct RunOptions {
  std::uint64_t seed = 0;
  int topics = 3;
  int iterations = 500;
  double alpha = 0.0;  // <= 0 selects 50 / topics
  double beta = 0.01;
  std::size_t keywords_per_topic = 8;

  /// Reads {"seed", "topics", "iterations", "keywords_per_topic"} over the
  /// current values. Unknown keys or bad types raise ConfigError.
  void merge_json(const nlohmann::json& j);
};

/// Resources chosen when the analyzer is built. Empty paths select the
/// bundled lexicon, the rule baseline and the default thresholds.
struct AnalysisConfig {
  RunOptions run;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> thresholds;
};

struct AnalysisResult {
  std::string analysis_id;
  Document document;
  std::vector<SentenceSentiment> sentiments;
  std::vector<DiscourseLabel> labels;
  std::vector<Character> characters;
  std::optional<TopicModel> topic_model;  // empty when the text has no content stems
  std::vector<Topic> topics;
  std::vector<Marker> markers;
  ArticleMetrics metrics;
  DiscourseHistogram histogram;
  RadarData radar;
  ArticleSummary summary;
  PatternReport patterns;
  std::vector<std::pair<std::string, std::size_t>> wordcloud;
  nlohmann::json config;  // echo of everything that shaped the result
};

/// Runs the whole pipeline. Loaded resources are immutable, so one Analyzer
/// may serve many threads.
class Analyzer {
 public:
  /// Throws IoError / ParseError / ModelError / ConfigError for bad resources.
  explicit Analyzer(const AnalysisConfig& config = {});

  /// Throws AnalyzeError when the text is empty after normalization or has
  /// no words, IngestError on invalid UTF-8.
  AnalysisResult analyze(std::string_view text, std::optional<std::string> title = std::nullopt) const;
  AnalysisResult analyze(std::string_view text, std::optional<std::string> title,
                         const RunOptions& run) const;

  const AnalysisConfig& config() const { return config_; }
  const Thresholds& thresholds() const { return thresholds_; }

 private:
  AnalysisConfig config_;
  const SentimentLexicon* lexicon_ = nullptr;
  std::optional<SentimentLexicon> owned_lexicon_;
  std::optional<DiscourseModel> model_;
  Thresholds thresholds_;
  SentenceSegmenter segmenter_;
};

/// Canonical JSON of a result. Key order is fixed, so equal results dump to
/// equal bytes.
nlohmann::json to_json(const AnalysisResult& result);

/// Serialized form written to disk and returned by the API.
std::string dump_analysis(const nlohmann::json& j);

/// Structural and cross-field checks on an analysis JSON: required fields
/// and types, counts that must agree, marker references that must resolve,
/// and summary levels that must follow from the stats. Returns the problems
/// found; empty means valid.
std::vector<std::string> validate_analysis_json(const nlohmann::json& j);

}  // namespace sirenless
