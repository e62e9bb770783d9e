#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sirenless/ingest.hpp"
#include "sirenless/resources.hpp"

namespace sirenless {

/// Rhetorical role of a sentence in a news article.
enum class DiscourseMode { Narration, Argument, Quote, Description, Background };

inline constexpr std::size_t kModeCount = 5;
inline constexpr std::array<DiscourseMode, kModeCount> kAllModes = {
    DiscourseMode::Narration, DiscourseMode::Argument, DiscourseMode::Quote,
    DiscourseMode::Description, DiscourseMode::Background};

/// Order used to break score ties in the trained classifier.
inline constexpr std::array<DiscourseMode, kModeCount> kTieBreakOrder = {
    DiscourseMode::Narration, DiscourseMode::Description, DiscourseMode::Quote,
    DiscourseMode::Background, DiscourseMode::Argument};

inline constexpr std::size_t index_of(DiscourseMode m) { return static_cast<std::size_t>(m); }

/// Lowercase name: "narration", "argument", ...
std::string_view to_string(DiscourseMode mode);
/// Case-insensitive inverse of to_string.
std::optional<DiscourseMode> parse_mode(std::string_view name);

enum class LabelSource { Rule, Model };

struct DiscourseLabel {
  DiscourseMode mode = DiscourseMode::Narration;
  double confidence = 1.0;
  LabelSource source = LabelSource::Rule;
};

/// Bundled cue lexicons used by feature extraction.
struct DiscourseCues {
  WordSet reporting_verbs;
  WordSet opinion_cues;
  WordSet modals;
  WordSet sensory_adjectives;
  WordSet past_tense;
  WordSet calendar;
  WordSet stopwords;

  static const DiscourseCues& bundled();
};

/// Document context a sentence's features depend on.
struct SentenceContext {
  std::optional<DiscourseMode> previous;
  double position = 0.0;  // index / (n - 1), 0 for single-sentence docs
  /// Lowercased capitalized words seen mid-sentence in earlier sentences.
  const WordSet* prior_entities = nullptr;
};

struct FeatureVector {
  double quoted_token_fraction = 0.0;
  bool has_reporting_verb = false;
  bool first_person = false;
  int opinion_cue_count = 0;
  int modal_count = 0;
  double past_tense_fraction = 0.0;
  bool date_or_year_present = false;
  double numeric_density = 0.0;
  double sentence_position = 0.0;
  int token_count = 0;
  int sensory_cue_count = 0;
  bool refers_prior_entity = false;
  std::optional<DiscourseMode> previous;

  /// Names of the dense encoding, in order. Fixed per feature version.
  static const std::vector<std::string>& names();
  /// Dense encoding fed to the linear model. token_count is scaled by 1/40
  /// and capped at 2; prev_mode is one-hot (all zero for the first sentence).
  std::vector<double> dense() const;
};

inline constexpr int kFeatureVersion = 1;

/// Features of one sentence. Quote, first-person, opinion, modal and sensory
/// cues are counted outside quotation marks only.
FeatureVector extract_features(std::span<const Token> tokens, const SentenceContext& context,
                               const DiscourseCues& cues = DiscourseCues::bundled());

/// Capitalized mid-sentence words of a sentence, lowercased; feeds
/// SentenceContext::prior_entities for later sentences.
std::vector<std::string> entity_words(std::span<const Token> tokens, const DiscourseCues& cues);

/// Thresholds of the deterministic rule baseline.
struct RuleThresholds {
  double quote_fraction = 0.5;
  int modal_count = 2;
  double numeric_density = 0.2;
};

/// First matching rule wins: Quote, Argument, Background, Description,
/// otherwise Narration. Confidence is always 1.
DiscourseLabel rule_baseline(const FeatureVector& f, const RuleThresholds& t = {});

struct ModelMetadata {
  std::uint64_t seed = 0;
  int epochs = 0;
  std::string corpus_hash;
  std::size_t examples = 0;
};

/// Multiclass linear model: one weight vector and bias per mode.
struct DiscourseModel {
  std::vector<std::string> feature_names;
  std::array<std::vector<double>, kModeCount> weights;
  std::array<double, kModeCount> bias{};
  ModelMetadata metadata;

  /// Zero model over the current feature names.
  static DiscourseModel zeros();
};

/// Argmax over class scores with kTieBreakOrder; confidence is the softmax
/// probability of the winner. Throws ModelError on a feature mismatch.
DiscourseLabel classify(const FeatureVector& f, const DiscourseModel& model);
DiscourseLabel classify(std::span<const double> dense, const DiscourseModel& model);

/// One line of a discourse corpus.
struct LabeledSentence {
  std::string text;
  DiscourseMode mode = DiscourseMode::Narration;
  std::string doc;
  std::size_t index = 0;
};

/// JSONL: {"text": ..., "mode": ..., "doc": ..., "index": ...} per line.
std::vector<LabeledSentence> parse_corpus(std::string_view jsonl, const std::string& source = "<corpus>");
std::vector<LabeledSentence> load_corpus(const std::filesystem::path& path);
std::string corpus_to_jsonl(std::span<const LabeledSentence> corpus);

struct TrainOptions {
  int epochs = 10;
  std::uint64_t seed = 0;
};

/// Averaged perceptron over gold previous-label context. Identical corpus and
/// seed give a bit-identical model. Throws TrainError for an empty or
/// single-label corpus.
DiscourseModel train(std::span<const LabeledSentence> corpus, const TrainOptions& options = {},
                     const DiscourseCues& cues = DiscourseCues::bundled());

/// Greedy left-to-right labeling of a document. Without a model the rule
/// baseline is used.
std::vector<DiscourseLabel> label_document(const Document& doc, const DiscourseModel* model = nullptr,
                                           const DiscourseCues& cues = DiscourseCues::bundled());

/// Labels corpus sentences doc by doc (ordered by index), feeding back the
/// predicted previous label. Output order matches the input order.
std::vector<DiscourseLabel> label_corpus(std::span<const LabeledSentence> corpus,
                                         const DiscourseModel* model = nullptr,
                                         const DiscourseCues& cues = DiscourseCues::bundled());

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
  bool absent_from_gold = false;
};

struct EvalReport {
  std::array<ClassMetrics, kModeCount> per_class;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t total = 0;
};

/// One-vs-rest precision/recall/F1 per mode; macro-F1 is the unweighted mean
/// over all five. Throws EvalError for empty or mismatched input.
EvalReport evaluate_predictions(std::span<const DiscourseMode> gold,
                                std::span<const DiscourseMode> predicted);

EvalReport evaluate(const DiscourseModel& model, std::span<const LabeledSentence> corpus,
                    const DiscourseCues& cues = DiscourseCues::bundled());

nlohmann::json model_to_json(const DiscourseModel& model);
/// Throws ModelError for unknown format or version.
DiscourseModel model_from_json(const nlohmann::json& j);
void save_model(const DiscourseModel& model, const std::filesystem::path& path);
DiscourseModel load_model(const std::filesystem::path& path);

}  // namespace sirenless
