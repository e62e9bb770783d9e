#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sirenless/ingest.hpp"
#include "sirenless/resources.hpp"

namespace sirenless {

struct LexiconEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

/// Word-level sentiment lexicon plus the negation and intensifier cues that
/// modify it. Immutable once loaded; safe to share between threads.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  /// Throws ConfigError if an entry is out of range or a word is both a
  /// negator and an intensifier.
  SentimentLexicon(std::unordered_map<std::string, LexiconEntry> entries, WordSet negators,
                   std::map<std::string, double, std::less<>> intensifiers);

  /// Exact lowercase match, then a light -s / -ed / -ing fallback.
  const LexiconEntry* lookup(std::string_view lower) const;

  bool is_negator(std::string_view lower) const { return negators_.contains(lower); }
  /// Multiplier for an intensifier, or 0 when `lower` is not one.
  double intensifier(std::string_view lower) const;

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, LexiconEntry>& entries() const { return entries_; }
  const WordSet& negators() const { return negators_; }
  const std::map<std::string, double, std::less<>>& intensifiers() const { return intensifiers_; }

  /// Number of duplicate lemmas seen while parsing (last entry wins).
  std::size_t duplicate_count = 0;
  /// SHA-256 of the TSV the entries were parsed from.
  std::string digest;

 private:
  const LexiconEntry* find(const std::string& key) const;

  std::unordered_map<std::string, LexiconEntry> entries_;
  WordSet negators_;
  std::map<std::string, double, std::less<>> intensifiers_;
};

/// Parses `lemma<TAB>polarity<TAB>subjectivity` rows. `source` names the
/// input in ParseError messages. Negators and intensifiers come from the
/// bundled lists.
SentimentLexicon parse_lexicon(std::string_view tsv, const std::string& source = "<lexicon>");

/// Throws IoError for a missing file, ParseError for a malformed row.
SentimentLexicon load_lexicon(const std::filesystem::path& path);

/// The bundled English lexicon, parsed once.
const SentimentLexicon& default_lexicon();

/// Parses `word<TAB>multiplier` rows; multipliers must lie in (0, 2].
std::map<std::string, double, std::less<>> parse_intensifiers(std::string_view tsv,
                                                              const std::string& source);

struct SentenceSentiment {
  double polarity = 0.0;
  double subjectivity = 0.0;
  bool extreme = false;  // |polarity| > 0.5
};

inline constexpr double kExtremePolarity = 0.5;
inline constexpr double kNegationFactor = -0.5;
inline constexpr int kNegationWindow = 2;

/// Mean effective polarity and mean subjectivity over the lexicon hits in
/// one sentence. A hit is flipped and halved when a negator sits within the
/// two preceding word tokens, and scaled when the word right before it is an
/// intensifier. No hits gives (0, 0).
SentenceSentiment sentence_sentiment(std::span<const Token> tokens, const SentimentLexicon& lexicon);

/// Unclamped Flesch reading ease. Throws MetricError when either count is 0.
double flesch_raw(std::size_t words, std::size_t sentences, std::size_t syllables);

/// Flesch reading ease clamped to [0, 100].
double flesch_reading_ease(std::size_t words, std::size_t sentences, std::size_t syllables);

struct ArticleMetrics {
  double article_polarity = 0.0;
  double article_subjectivity = 0.0;
  double flesch_score = 0.0;
};

/// Signed mean polarity, mean subjectivity and Flesch score of a document.
ArticleMetrics article_metrics(const Document& doc, std::span<const SentenceSentiment> sentences);

}  // namespace sirenless
