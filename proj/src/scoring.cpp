#include "sirenless/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sirenless {

std::string_view to_string(WritingStyle v) {
  switch (v) {
    case WritingStyle::Rigorous: return "Rigorous";
    case WritingStyle::Balanced: return "Balanced";
    case WritingStyle::Literative: return "Literative";
  }
  return "Rigorous";
}

std::string_view to_string(SentimentLevel v) {
  switch (v) {
    case SentimentLevel::Calm: return "Calm";
    case SentimentLevel::Regular: return "Regular";
    case SentimentLevel::Emotional: return "Emotional";
  }
  return "Calm";
}

std::string_view to_string(ReadabilityLevel v) {
  switch (v) {
    case ReadabilityLevel::Easy: return "Easy";
    case ReadabilityLevel::Medium: return "Medium";
    case ReadabilityLevel::Hard: return "Hard";
  }
  return "Medium";
}

std::string_view to_string(ReliabilityLevel v) {
  switch (v) {
    case ReliabilityLevel::Low: return "Low";
    case ReliabilityLevel::Medium: return "Medium";
    case ReliabilityLevel::High: return "High";
  }
  return "Medium";
}

std::size_t DiscourseHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

DiscourseHistogram DiscourseHistogram::from(std::span<const DiscourseMode> modes) {
  DiscourseHistogram h;
  for (auto m : modes) ++h.counts[index_of(m)];
  return h;
}

DiscourseHistogram DiscourseHistogram::from(std::span<const DiscourseLabel> labels) {
  DiscourseHistogram h;
  for (const auto& l : labels) ++h.counts[index_of(l.mode)];
  return h;
}

WritingStyle writing_style_level(double grade) {
  if (grade < 0.2) return WritingStyle::Rigorous;
  if (grade < 0.4) return WritingStyle::Balanced;
  return WritingStyle::Literative;
}

Graded<WritingStyle> writing_style(const DiscourseHistogram& h) {
  const double numerator = static_cast<double>(h[DiscourseMode::Argument]) +
                           static_cast<double>(h[DiscourseMode::Quote]) -
                           static_cast<double>(h[DiscourseMode::Description]) -
                           static_cast<double>(h[DiscourseMode::Background]);
  const double narration = static_cast<double>(std::max<std::size_t>(h[DiscourseMode::Narration], 1));
  const double grade = std::clamp(numerator / narration, 0.0, 1.0);
  return {writing_style_level(grade), grade};
}

SentimentLevel sentiment_level_of(double grade) {
  if (grade < 0.1) return SentimentLevel::Calm;
  if (grade < 0.2) return SentimentLevel::Regular;
  return SentimentLevel::Emotional;
}

Graded<SentimentLevel> sentiment_level(double article_polarity) {
  const double grade = std::clamp(std::abs(article_polarity), 0.0, 1.0);
  return {sentiment_level_of(grade), grade};
}

ReadabilityLevel readability_level_of(double grade) {
  if (grade < 30.0) return ReadabilityLevel::Hard;
  if (grade < 70.0) return ReadabilityLevel::Medium;
  return ReadabilityLevel::Easy;
}

Graded<ReadabilityLevel> readability_level(double flesch_score) {
  const double grade = std::clamp(flesch_score, 0.0, 100.0);
  return {readability_level_of(grade), grade};
}

ReliabilityLevel reliability_level_of(double grade) {
  if (grade < 40.0) return ReliabilityLevel::Low;
  if (grade < 70.0) return ReliabilityLevel::Medium;
  return ReliabilityLevel::High;
}

Graded<ReliabilityLevel> reliability(double article_polarity, double article_subjectivity) {
  const double grade = std::clamp(100.0 - (std::abs(article_polarity) + article_subjectivity) * 100.0, 0.0, 100.0);
  return {reliability_level_of(grade), grade};
}

ArticleSummary summarize(const ArticleMetrics& metrics, const DiscourseHistogram& histogram) {
  return {writing_style(histogram), sentiment_level(metrics.article_polarity),
          readability_level(metrics.flesch_score),
          reliability(metrics.article_polarity, metrics.article_subjectivity)};
}

std::size_t sentiment_bin(double p) {
  if (p <= -0.5) return 0;
  if (p <= -0.1) return 1;
  if (p < 0.1) return 2;
  if (p < 0.5) return 3;
  return 4;
}

RadarData radar_data(std::span<const SentenceSentiment> sentiments, const DiscourseHistogram& histogram) {
  RadarData r;
  for (const auto& s : sentiments) ++r.sentiment_axes[sentiment_bin(s.polarity)];
  const std::size_t total = histogram.total();
  if (total > 0) {
    for (std::size_t c = 0; c < kModeCount; ++c) {
      r.discourse_axes[c] = static_cast<double>(histogram.counts[c]) / static_cast<double>(total);
    }
  }
  return r;
}

}  // namespace sirenless
