#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sirenless/ingest.hpp"
#include "sirenless/resources.hpp"

namespace sirenless {

struct LdaOptions {
  int topics = 3;
  double alpha = 0.0;  // <= 0 selects 50 / topics
  double beta = 0.01;
  int iterations = 500;
  std::uint64_t seed = 0;

  double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / topics; }
};

/// Fitted LDA state. Rows of phi and theta are probability distributions.
struct TopicModel {
  int topics = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<std::string> vocabulary;      // sorted
  std::vector<std::vector<double>> phi;     // topics x vocabulary
  std::vector<std::vector<double>> theta;   // documents x topics
  std::vector<std::size_t> topic_tokens;    // tokens assigned to each topic
  std::uint64_t seed = 0;
  int iterations = 0;
};

/// Collapsed Gibbs sampling over the token-topic assignments. Bit-identical
/// for identical input and options. Throws TopicError for an empty vocabulary
/// or invalid options.
TopicModel lda_fit(const std::vector<std::vector<std::string>>& documents, const LdaOptions& options);

/// The n most probable stems of a topic, ties broken alphabetically. Asking
/// for more than the vocabulary returns all of it. Throws TopicError for a
/// bad topic id or n < 1.
std::vector<std::string> top_keywords(const TopicModel& model, int topic, std::size_t n);

struct Topic {
  int id = 0;
  std::vector<std::pair<std::string, double>> keywords;  // descending weight
  double weight = 0.0;  // smoothed share of tokens assigned to the topic
};

std::vector<Topic> summarize_topics(const TopicModel& model, std::size_t keywords_per_topic);

/// Lowercased, stopword-free, stemmed word tokens of one sentence.
std::vector<std::string> content_stems(const std::vector<Token>& tokens, const WordSet& stopwords);

/// One pseudo-document per paragraph: the content stems of its sentences.
std::vector<std::vector<std::string>> paragraph_documents(const Document& doc, const WordSet& stopwords);

}  // namespace sirenless
