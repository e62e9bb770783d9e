#include "sirenless/topics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rng.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/stemmer.hpp"

namespace sirenless {

std::vector<std::string> content_stems(const std::vector<Token>& tokens, const WordSet& stopwords) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (!t.is_word()) continue;
    std::string w = t.lower;
    if (w.ends_with("'s")) w.resize(w.size() - 2);
    if (w.size() < 2 || stopwords.contains(w)) continue;
    out.push_back(stem(w));
  }
  return out;
}

std::vector<std::vector<std::string>> paragraph_documents(const Document& doc, const WordSet& stopwords) {
  std::vector<std::vector<std::string>> docs(doc.paragraphs.size());
  for (const auto& s : doc.sentences) {
    auto stems = content_stems(s.tokens, stopwords);
    auto& d = docs[s.paragraph];
    d.insert(d.end(), std::make_move_iterator(stems.begin()), std::make_move_iterator(stems.end()));
  }
  return docs;
}

TopicModel lda_fit(const std::vector<std::vector<std::string>>& documents, const LdaOptions& options) {
  if (options.topics < 1) throw TopicError("topic count must be >= 1");
  if (options.iterations < 1) throw TopicError("iterations must be >= 1");
  if (!(options.beta > 0.0)) throw TopicError("beta must be positive");
  const double alpha = options.effective_alpha();

  TopicModel model;
  model.topics = options.topics;
  model.alpha = alpha;
  model.beta = options.beta;
  model.seed = options.seed;
  model.iterations = options.iterations;

  std::map<std::string, std::size_t> index;
  for (const auto& d : documents) {
    for (const auto& w : d) index.emplace(w, 0);
  }
  if (index.empty()) throw TopicError("vocabulary is empty");
  for (auto& [word, id] : index) {
    id = model.vocabulary.size();
    model.vocabulary.push_back(word);
  }

  const std::size_t K = static_cast<std::size_t>(options.topics);
  const std::size_t V = model.vocabulary.size();
  const std::size_t D = documents.size();

  std::vector<std::vector<std::size_t>> words(D);
  std::vector<std::vector<std::size_t>> z(D);
  std::vector<std::vector<std::size_t>> n_dk(D, std::vector<std::size_t>(K, 0));
  std::vector<std::vector<std::size_t>> n_kw(K, std::vector<std::size_t>(V, 0));
  std::vector<std::size_t> n_k(K, 0);

  detail::Rng rng(options.seed);
  for (std::size_t d = 0; d < D; ++d) {
    for (const auto& w : documents[d]) {
      const std::size_t wid = index.at(w);
      const std::size_t k = rng.below(K);
      words[d].push_back(wid);
      z[d].push_back(k);
      ++n_dk[d][k];
      ++n_kw[k][wid];
      ++n_k[k];
    }
  }

  const double v_beta = static_cast<double>(V) * options.beta;
  std::vector<double> cumulative(K);
  for (int iter = 0; iter < options.iterations; ++iter) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t i = 0; i < words[d].size(); ++i) {
        const std::size_t w = words[d][i];
        std::size_t k = z[d][i];
        --n_dk[d][k];
        --n_kw[k][w];
        --n_k[k];

        double total = 0.0;
        for (std::size_t t = 0; t < K; ++t) {
          total += (static_cast<double>(n_dk[d][t]) + alpha) *
                   (static_cast<double>(n_kw[t][w]) + options.beta) /
                   (static_cast<double>(n_k[t]) + v_beta);
          cumulative[t] = total;
        }
        const double u = rng.uniform() * total;
        k = 0;
        while (k + 1 < K && cumulative[k] <= u) ++k;

        z[d][i] = k;
        ++n_dk[d][k];
        ++n_kw[k][w];
        ++n_k[k];
      }
    }
  }

  model.phi.assign(K, std::vector<double>(V));
  for (std::size_t k = 0; k < K; ++k) {
    const double denom = static_cast<double>(n_k[k]) + v_beta;
    for (std::size_t w = 0; w < V; ++w) {
      model.phi[k][w] = (static_cast<double>(n_kw[k][w]) + options.beta) / denom;
    }
  }
  model.theta.assign(D, std::vector<double>(K));
  for (std::size_t d = 0; d < D; ++d) {
    const double denom = static_cast<double>(words[d].size()) + static_cast<double>(K) * alpha;
    for (std::size_t k = 0; k < K; ++k) {
      model.theta[d][k] = (static_cast<double>(n_dk[d][k]) + alpha) / denom;
    }
  }
  model.topic_tokens = n_k;
  return model;
}

std::vector<std::string> top_keywords(const TopicModel& model, int topic, std::size_t n) {
  if (topic < 0 || topic >= model.topics) throw TopicError("topic id out of range: " + std::to_string(topic));
  if (n < 1) throw TopicError("keyword count must be >= 1");
  const auto& row = model.phi[static_cast<std::size_t>(topic)];
  std::vector<std::size_t> ids(row.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  // The vocabulary is sorted, so the lower id wins ties alphabetically.
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
  ids.resize(std::min(n, ids.size()));
  std::vector<std::string> out;
  for (std::size_t id : ids) out.push_back(model.vocabulary[id]);
  return out;
}

std::vector<Topic> summarize_topics(const TopicModel& model, std::size_t keywords_per_topic) {
  std::vector<Topic> out;
  std::size_t tokens = 0;
  for (std::size_t c : model.topic_tokens) tokens += c;
  const double denom = static_cast<double>(tokens) + model.topics * model.alpha;
  for (int k = 0; k < model.topics; ++k) {
    Topic t;
    t.id = k;
    const auto& row = model.phi[static_cast<std::size_t>(k)];
    for (const auto& stem_word : top_keywords(model, k, keywords_per_topic)) {
      const auto pos = std::lower_bound(model.vocabulary.begin(), model.vocabulary.end(), stem_word);
      t.keywords.emplace_back(stem_word, row[static_cast<std::size_t>(pos - model.vocabulary.begin())]);
    }
    t.weight = (static_cast<double>(model.topic_tokens[static_cast<std::size_t>(k)]) + model.alpha) / denom;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace sirenless
