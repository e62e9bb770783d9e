#pragma once

#include <array>
#include <span>
#include <string_view>

#include "sirenless/discourse.hpp"
#include "sirenless/sentiment.hpp"

namespace sirenless {

// Text-summary header scheme. Each attribute maps a grade onto three
// half-open bins; the last bin is closed at the top of the domain.

enum class WritingStyle { Rigorous, Balanced, Literative };
enum class SentimentLevel { Calm, Regular, Emotional };
enum class ReadabilityLevel { Easy, Medium, Hard };
enum class ReliabilityLevel { Low, Medium, High };

std::string_view to_string(WritingStyle v);
std::string_view to_string(SentimentLevel v);
std::string_view to_string(ReadabilityLevel v);
std::string_view to_string(ReliabilityLevel v);

template <typename Level>
struct Graded {
  Level level;
  double grade;
};

struct DiscourseHistogram {
  std::array<std::size_t, kModeCount> counts{};

  std::size_t operator[](DiscourseMode m) const { return counts[index_of(m)]; }
  std::size_t total() const;

  static DiscourseHistogram from(std::span<const DiscourseMode> modes);
  static DiscourseHistogram from(std::span<const DiscourseLabel> labels);
};

/// (argument + quote - description - background) / max(narration, 1),
/// clamped to [0, 1]. Rigorous [0, 0.2), Balanced [0.2, 0.4), Literative [0.4, 1].
Graded<WritingStyle> writing_style(const DiscourseHistogram& h);
WritingStyle writing_style_level(double grade);

/// Grade is |article polarity|. Calm [0, 0.1), Regular [0.1, 0.2), Emotional [0.2, 1].
Graded<SentimentLevel> sentiment_level(double article_polarity);
SentimentLevel sentiment_level_of(double grade);

/// Flesch semantics: Hard [0, 30), Medium [30, 70), Easy [70, 100].
Graded<ReadabilityLevel> readability_level(double flesch_score);
ReadabilityLevel readability_level_of(double grade);

/// 100 - (|polarity| + subjectivity) * 100 clamped to [0, 100].
/// Low [0, 40), Medium [40, 70), High [70, 100].
Graded<ReliabilityLevel> reliability(double article_polarity, double article_subjectivity);
ReliabilityLevel reliability_level_of(double grade);

struct ArticleSummary {
  Graded<WritingStyle> writing_style;
  Graded<SentimentLevel> sentiment;
  Graded<ReadabilityLevel> readability;
  Graded<ReliabilityLevel> reliability;
};

ArticleSummary summarize(const ArticleMetrics& metrics, const DiscourseHistogram& histogram);

/// Sentiment radar bins, in order: strong negative (<= -0.5), negative
/// (-0.5, -0.1], neutral (-0.1, 0.1), positive [0.1, 0.5), strong positive
/// (>= 0.5).
inline constexpr std::size_t kSentimentBins = 5;
std::size_t sentiment_bin(double polarity);

struct RadarData {
  std::array<std::size_t, kSentimentBins> sentiment_axes{};
  std::array<double, kModeCount> discourse_axes{};  // share per mode, kAllModes order
};

RadarData radar_data(std::span<const SentenceSentiment> sentiments, const DiscourseHistogram& histogram);

}  // namespace sirenless
