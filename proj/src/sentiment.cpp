#include "sirenless/sentiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "sirenless/errors.hpp"
#include "sirenless/text.hpp"

namespace sirenless {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    cols.push_back(line.substr(pos, tab == std::string_view::npos ? line.npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return cols;
}

bool parse_double(std::string_view s, double& out) {
  s = text::trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

template <typename Fn>
void for_each_row(std::string_view content, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    fn(line, line_no);
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

SentimentLexicon::SentimentLexicon(std::unordered_map<std::string, LexiconEntry> entries,
                                   WordSet negators,
                                   std::map<std::string, double, std::less<>> intensifiers)
    : entries_(std::move(entries)),
      negators_(std::move(negators)),
      intensifiers_(std::move(intensifiers)) {
  for (const auto& [word, e] : entries_) {
    if (!(e.polarity >= -1.0 && e.polarity <= 1.0) ||
        !(e.subjectivity >= 0.0 && e.subjectivity <= 1.0)) {
      throw ConfigError("lexicon entry out of range: " + word);
    }
  }
  for (const auto& [word, mult] : intensifiers_) {
    if (negators_.contains(word)) throw ConfigError("'" + word + "' is both negator and intensifier");
    if (!(mult > 0.0 && mult <= 2.0)) throw ConfigError("intensifier multiplier out of range: " + word);
  }
}

const LexiconEntry* SentimentLexicon::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry* SentimentLexicon::lookup(std::string_view lower) const {
  std::string w(lower);
  if (const auto* e = find(w)) return e;
  if (ends_with(w, "'s")) {
    if (const auto* e = find(w.substr(0, w.size() - 2))) return e;
  }
  if (ends_with(w, "ing") && w.size() > 5) {
    const std::string stem = w.substr(0, w.size() - 3);
    if (const auto* e = find(stem)) return e;
    if (const auto* e = find(stem + "e")) return e;
  }
  if (ends_with(w, "ed") && w.size() > 4) {
    if (const auto* e = find(w.substr(0, w.size() - 2))) return e;
    if (const auto* e = find(w.substr(0, w.size() - 1))) return e;
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 3) {
    if (const auto* e = find(w.substr(0, w.size() - 1))) return e;
  }
  return nullptr;
}

double SentimentLexicon::intensifier(std::string_view lower) const {
  auto it = intensifiers_.find(lower);
  return it == intensifiers_.end() ? 0.0 : it->second;
}

std::map<std::string, double, std::less<>> parse_intensifiers(std::string_view tsv,
                                                              const std::string& source) {
  std::map<std::string, double, std::less<>> out;
  for_each_row(tsv, [&](std::string_view line, std::size_t line_no) {
    auto cols = split_tabs(line);
    double mult = 0.0;
    if (cols.size() != 2 || text::trim(cols[0]).empty() || !parse_double(cols[1], mult)) {
      throw ParseError(source, line_no, "expected word<TAB>multiplier");
    }
    if (!(mult > 0.0 && mult <= 2.0)) throw ParseError(source, line_no, "multiplier outside (0, 2]");
    out[text::to_lower(text::trim(cols[0]))] = mult;
  });
  return out;
}

SentimentLexicon parse_lexicon(std::string_view tsv, const std::string& source) {
  std::unordered_map<std::string, LexiconEntry> entries;
  std::size_t duplicates = 0;
  for_each_row(tsv, [&](std::string_view line, std::size_t line_no) {
    auto cols = split_tabs(line);
    if (cols.size() != 3) {
      throw ParseError(source, line_no, "expected 3 tab-separated columns, got " +
                                            std::to_string(cols.size()));
    }
    const std::string lemma = text::to_lower(text::trim(cols[0]));
    if (lemma.empty()) throw ParseError(source, line_no, "empty lemma");
    LexiconEntry e;
    if (!parse_double(cols[1], e.polarity)) throw ParseError(source, line_no, "polarity is not a number");
    if (!parse_double(cols[2], e.subjectivity)) {
      throw ParseError(source, line_no, "subjectivity is not a number");
    }
    if (e.polarity < -1.0 || e.polarity > 1.0) throw ParseError(source, line_no, "polarity outside [-1, 1]");
    if (e.subjectivity < 0.0 || e.subjectivity > 1.0) {
      throw ParseError(source, line_no, "subjectivity outside [0, 1]");
    }
    if (!entries.insert_or_assign(lemma, e).second) ++duplicates;
  });

  SentimentLexicon lex(std::move(entries), bundled_word_list("negators.txt"),
                       parse_intensifiers(bundled("intensifiers.tsv"), "intensifiers.tsv"));
  lex.duplicate_count = duplicates;
  lex.digest = text::sha256_hex(tsv);
  return lex;
}

SentimentLexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_file(path), path.string());
}

const SentimentLexicon& default_lexicon() {
  static const SentimentLexicon lex = parse_lexicon(bundled("lexicon.tsv"), "lexicon.tsv");
  return lex;
}

SentenceSentiment sentence_sentiment(std::span<const Token> tokens, const SentimentLexicon& lexicon) {
  std::vector<const Token*> words;
  for (const auto& t : tokens) {
    if (t.is_word()) words.push_back(&t);
  }

  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i]->lower;
    // Modifiers shape their neighbours and are never scored themselves.
    if (lexicon.is_negator(w) || lexicon.intensifier(w) > 0.0) continue;
    const LexiconEntry* e = lexicon.lookup(w);
    if (!e) continue;

    double effective = e->polarity;
    for (int back = 1; back <= kNegationWindow && static_cast<std::size_t>(back) <= i; ++back) {
      if (lexicon.is_negator(words[i - back]->lower)) {
        effective *= kNegationFactor;
        break;
      }
    }
    if (i > 0) {
      if (double mult = lexicon.intensifier(words[i - 1]->lower); mult > 0.0) effective *= mult;
    }
    polarity_sum += effective;
    subjectivity_sum += e->subjectivity;
    ++hits;
  }

  SentenceSentiment out;
  if (hits == 0) return out;
  out.polarity = std::clamp(polarity_sum / static_cast<double>(hits), -1.0, 1.0);
  out.subjectivity = std::clamp(subjectivity_sum / static_cast<double>(hits), 0.0, 1.0);
  out.extreme = std::abs(out.polarity) > kExtremePolarity;
  return out;
}

double flesch_raw(std::size_t words, std::size_t sentences, std::size_t syllables) {
  if (sentences == 0) throw MetricError("Flesch reading ease is undefined for zero sentences");
  if (words == 0) throw MetricError("Flesch reading ease is undefined for zero words");
  const double w = static_cast<double>(words);
  return 206.835 - 1.015 * (w / static_cast<double>(sentences)) -
         84.6 * (static_cast<double>(syllables) / w);
}

double flesch_reading_ease(std::size_t words, std::size_t sentences, std::size_t syllables) {
  return std::clamp(flesch_raw(words, sentences, syllables), 0.0, 100.0);
}

ArticleMetrics article_metrics(const Document& doc, std::span<const SentenceSentiment> sentences) {
  ArticleMetrics m;
  if (!sentences.empty()) {
    double p = 0.0;
    double s = 0.0;
    for (const auto& x : sentences) {
      p += x.polarity;
      s += x.subjectivity;
    }
    m.article_polarity = p / static_cast<double>(sentences.size());
    m.article_subjectivity = s / static_cast<double>(sentences.size());
  }
  m.flesch_score = flesch_reading_ease(doc.word_count, doc.sentences.size(), doc.syllable_count);
  return m;
}

}  // namespace sirenless
