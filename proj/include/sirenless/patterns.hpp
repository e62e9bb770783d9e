#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sirenless/discourse.hpp"
#include "sirenless/entities.hpp"
#include "sirenless/sentiment.hpp"

namespace sirenless {

/// Detector thresholds. Every value is a tunable choice of this engine, not
/// a published constant; the defaults below are what ships.
struct Thresholds {
  int version = 1;
  double emotional_cutoff = 0.3;        // |polarity| counted as emotional
  std::size_t min_emotional = 5;        // emotional sentences the sign rules need
  double dominance_share = 0.75;        // one sign's share of emotional sentences
  double oscillation_share = 0.3;       // minimum share of each sign
  double subjectivity_warning = 0.2;
  double subjectivity_alert = 0.4;
  double easy_read_score = 30.0;        // Flesch score strictly above this
  double argument_share = 0.25;
  std::size_t min_character_mentions = 3;
  double character_bias = 0.25;         // |mean polarity| around a character
  std::size_t min_quotes = 5;
  double emotional_quote_share = 0.4;   // extreme quotes / quotes

  bool operator==(const Thresholds&) const = default;
};

/// Reads {"version": N, "thresholds": {name: number, ...}}. Unknown names
/// and non-numeric values raise ConfigError; missing names keep defaults.
Thresholds thresholds_from_json(const nlohmann::json& j);
Thresholds load_thresholds(const std::filesystem::path& path);
nlohmann::json thresholds_to_json(const Thresholds& t);

enum class PatternKind {
  SentimentDominance,
  SentimentOscillation,
  HighSubjectivity,
  EasyRead,
  ArgumentHeavy,
  CharacterSentimentBias,
  EmotionalQuotes,
};
inline constexpr std::size_t kPatternKinds = 7;

enum class Severity { Info, Warning, Alert };

std::string_view to_string(PatternKind kind);
std::string_view to_string(Severity severity);

struct Finding {
  PatternKind kind;
  Severity severity;
  std::vector<std::size_t> sentences;  // evidence sentence indices, ascending
  std::vector<int> characters;         // evidence character ids, ascending
  std::string detail;
};

struct PatternReport {
  std::vector<Finding> findings;  // at most one per kind, in PatternKind order

  const Finding* find(PatternKind kind) const;
};

/// Everything the detectors look at.
struct PatternInput {
  std::span<const SentenceSentiment> sentiments;
  std::span<const DiscourseMode> modes;
  std::span<const Character> characters;
  double article_subjectivity = 0.0;
  double flesch_score = 0.0;
};

PatternReport detect_patterns(const PatternInput& input, const Thresholds& t = {});

}  // namespace sirenless
