#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sirenless/resources.hpp"

namespace sirenless {

enum class TokenKind { Word, Number, Punctuation, QuoteMark };

std::string_view to_string(TokenKind kind);

/// A token inside the normalized document text. Offsets are byte offsets
/// into Document::text.
struct Token {
  std::string surface;
  std::string lower;
  TokenKind kind = TokenKind::Punctuation;
  std::size_t start = 0;
  std::size_t end = 0;
  int syllables = 0;  // >= 1 for words, 0 otherwise

  bool is_word() const { return kind == TokenKind::Word; }
  /// Words and numbers: the tokens that carry content.
  bool is_content() const { return kind == TokenKind::Word || kind == TokenKind::Number; }
};

struct ParagraphSpan {
  std::size_t index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
};

struct SentenceSpan {
  std::size_t index = 0;
  std::size_t paragraph = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Token> tokens;

  std::size_t word_count() const;
};

/// Immutable structured article. Everything downstream refers back to
/// `text` through byte offsets.
struct Document {
  std::string id;  // SHA-256 of `text`
  std::optional<std::string> title;
  std::string text;
  std::vector<ParagraphSpan> paragraphs;
  std::vector<SentenceSpan> sentences;
  std::size_t word_count = 0;
  std::size_t syllable_count = 0;

  std::string_view sentence_text(const SentenceSpan& s) const {
    return std::string_view(text).substr(s.start, s.end - s.start);
  }
  std::string_view sentence_text(std::size_t i) const { return sentence_text(sentences.at(i)); }
};

/// Maps curly quotes to ASCII and CRLF to LF. Throws IngestError on invalid
/// UTF-8. Idempotent.
std::string normalize_text(std::string_view raw);

/// Paragraphs are separated by one or more blank (whitespace-only) lines.
/// Spans are trimmed to their first and last non-whitespace byte.
std::vector<ParagraphSpan> split_paragraphs(std::string_view text);

/// Splits `text` into tokens; offsets are shifted by `base`.
std::vector<Token> tokenize(std::string_view text, std::size_t base = 0);

/// Vowel-group syllable heuristic, never less than 1.
int count_syllables(std::string_view word);

/// Sentence boundary detection over one paragraph. Holds the abbreviation
/// list; immutable after construction.
class SentenceSegmenter {
 public:
  /// Uses the bundled abbreviations.txt.
  SentenceSegmenter();
  /// Every entry matches in any case.
  explicit SentenceSegmenter(WordSet abbreviations);

  /// Reads a one-per-line abbreviation list. Entries written with a leading
  /// capital only match capitalized text ("Sat." but not "sat.").
  static SentenceSegmenter from_list(std::string_view list);

  /// Sentences of `paragraph`, with offsets shifted by `base`. Indices and
  /// paragraph numbers are left at zero for the caller to fill.
  std::vector<SentenceSpan> segment(std::string_view paragraph, std::size_t base = 0) const;

 private:
  bool is_abbreviation(std::string_view paragraph, std::size_t period) const;

  WordSet abbreviations_;
  WordSet capitalized_;  // lowercased keys
};

inline std::vector<SentenceSpan> segment_sentences(std::string_view paragraph,
                                                   std::size_t base = 0) {
  return SentenceSegmenter().segment(paragraph, base);
}

/// Full ingest: normalize, split, segment, tokenize, count.
Document ingest(std::string_view raw, std::optional<std::string> title = std::nullopt,
                const SentenceSegmenter& segmenter = SentenceSegmenter());

}  // namespace sirenless
