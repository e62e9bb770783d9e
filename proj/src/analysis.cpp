#include "sirenless/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sirenless/errors.hpp"
#include "sirenless/text.hpp"

namespace sirenless {

using nlohmann::json;

namespace {

const WordSet& stopwords() { return bundled_word_list("stopwords.txt"); }

json graded(std::string_view level, double grade) { return {{"level", level}, {"grade", grade}}; }

json modes_object(const std::array<double, kModeCount>& values) {
  json out = json::object();
  for (auto m : kAllModes) out[std::string(to_string(m))] = values[index_of(m)];
  return out;
}

}  // namespace

void RunOptions::merge_json(const json& j) {
  if (j.is_null()) return;
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  // Parsed JSON stores non-negative numbers as unsigned, built JSON as signed.
  auto whole = [](const std::string& key, const json& v, std::uint64_t lo, std::uint64_t hi) {
    const bool ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    if (!ok || v.get<std::uint64_t>() < lo || v.get<std::uint64_t>() > hi) {
      throw ConfigError("config field '" + key + "' must be an integer in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    return v.get<std::uint64_t>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      seed = whole(key, value, 0, std::numeric_limits<std::uint64_t>::max());
    } else if (key == "topics") {
      topics = static_cast<int>(whole(key, value, 1, 50));
    } else if (key == "iterations") {
      iterations = static_cast<int>(whole(key, value, 1, 5000));
    } else if (key == "keywords_per_topic") {
      keywords_per_topic = whole(key, value, 1, 100);
    } else {
      throw ConfigError("unknown config field '" + key + "'");
    }
  }
}

Analyzer::Analyzer(const AnalysisConfig& config) : config_(config) {
  if (config_.lexicon) {
    owned_lexicon_ = load_lexicon(*config_.lexicon);
    lexicon_ = &*owned_lexicon_;
  } else {
    lexicon_ = &default_lexicon();
  }
  if (config_.model) model_ = load_model(*config_.model);
  if (config_.thresholds) thresholds_ = load_thresholds(*config_.thresholds);
}

AnalysisResult Analyzer::analyze(std::string_view text, std::optional<std::string> title) const {
  return analyze(text, std::move(title), config_.run);
}

AnalysisResult Analyzer::analyze(std::string_view text, std::optional<std::string> title,
                                 const RunOptions& run) const {
  if (text::trim(normalize_text(text)).empty()) throw AnalyzeError("text is empty");

  AnalysisResult r;
  r.document = ingest(text, std::move(title), segmenter_);
  const Document& doc = r.document;
  if (doc.word_count == 0) throw AnalyzeError("text contains no words");

  r.sentiments.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) r.sentiments.push_back(sentence_sentiment(s.tokens, *lexicon_));
  r.metrics = article_metrics(doc, r.sentiments);

  r.labels = label_document(doc, model_ ? &*model_ : nullptr);
  r.characters = extract_characters(doc);

  LdaOptions lda;
  lda.topics = run.topics;
  lda.alpha = run.alpha;
  lda.beta = run.beta;
  lda.iterations = run.iterations;
  lda.seed = run.seed;
  const auto docs = paragraph_documents(doc, stopwords());
  const bool has_stems = std::any_of(docs.begin(), docs.end(), [](const auto& d) { return !d.empty(); });
  if (has_stems) {
    r.topic_model = lda_fit(docs, lda);
    r.topics = summarize_topics(*r.topic_model, run.keywords_per_topic);
  }
  r.markers = assign_markers(doc, r.characters, r.topics, stopwords());

  std::vector<DiscourseMode> modes;
  modes.reserve(r.labels.size());
  for (const auto& l : r.labels) modes.push_back(l.mode);
  r.histogram = DiscourseHistogram::from(modes);
  r.radar = radar_data(r.sentiments, r.histogram);
  r.summary = summarize(r.metrics, r.histogram);

  PatternInput in;
  in.sentiments = r.sentiments;
  in.modes = modes;
  in.characters = r.characters;
  in.article_subjectivity = r.metrics.article_subjectivity;
  in.flesch_score = r.metrics.flesch_score;
  r.patterns = detect_patterns(in, thresholds_);

  r.wordcloud = wordcloud_counts(doc, stopwords());

  json discourse = {{"method", model_ ? "model" : "rule-baseline"}, {"feature_version", kFeatureVersion}};
  if (model_) {
    discourse["corpus_hash"] = model_->metadata.corpus_hash;
    discourse["seed"] = model_->metadata.seed;
    discourse["epochs"] = model_->metadata.epochs;
  }
  r.config = {
      {"seed", run.seed},
      {"topics", run.topics},
      {"iterations", run.iterations},
      {"alpha", lda.effective_alpha()},
      {"beta", run.beta},
      {"keywords_per_topic", run.keywords_per_topic},
      {"lexicon", {{"digest", lexicon_->digest}, {"entries", lexicon_->size()}}},
      {"discourse", discourse},
      {"thresholds", thresholds_to_json(thresholds_)},
  };
  r.analysis_id = text::sha256_hex(doc.id + "\n" + doc.title.value_or("") + "\n" + r.config.dump());
  return r;
}

json to_json(const AnalysisResult& r) {
  const Document& doc = r.document;

  std::vector<json> sentence_markers(doc.sentences.size(), json::array());
  for (const auto& m : r.markers) {
    sentence_markers.at(m.sentence).push_back(
        {{"kind", to_string(m.kind)}, {"ref", m.ref_id}, {"stack_position", m.stack_position}});
  }

  json sentences = json::array();
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const auto& s = doc.sentences[i];
    const auto& sent = r.sentiments[i];
    const auto& label = r.labels[i];
    sentences.push_back({
        {"index", s.index},
        {"paragraph", s.paragraph},
        {"span", {s.start, s.end}},
        {"text", doc.sentence_text(s)},
        {"polarity", sent.polarity},
        {"subjectivity", sent.subjectivity},
        {"extreme", sent.extreme},
        {"mode", to_string(label.mode)},
        {"confidence", label.confidence},
        {"markers", std::move(sentence_markers[i])},
    });
  }

  json characters = json::array();
  for (const auto& c : r.characters) {
    characters.push_back(
        {{"id", c.id}, {"name", c.canonical}, {"aliases", c.aliases}, {"sentences", c.mention_sentences}});
  }

  json topics = json::array();
  for (const auto& t : r.topics) {
    json keywords = json::array();
    for (const auto& [stem, weight] : t.keywords) keywords.push_back({{"stem", stem}, {"weight", weight}});
    topics.push_back({{"id", t.id}, {"keywords", keywords}, {"weight", t.weight}});
  }

  json topic_model = nullptr;
  if (r.topic_model) {
    topic_model = {{"topics", r.topic_model->topics},
                   {"vocabulary_size", r.topic_model->vocabulary.size()},
                   {"document_topics", r.topic_model->theta}};
  }

  json histogram = json::object();
  for (auto m : kAllModes) histogram[std::string(to_string(m))] = r.histogram[m];

  json patterns = json::array();
  for (const auto& f : r.patterns.findings) {
    patterns.push_back({{"kind", to_string(f.kind)},
                        {"severity", to_string(f.severity)},
                        {"sentences", f.sentences},
                        {"characters", f.characters},
                        {"detail", f.detail}});
  }

  json wordcloud = json::array();
  for (const auto& [stem, count] : r.wordcloud) wordcloud.push_back({{"stem", stem}, {"count", count}});

  return {
      {"schema_version", kSchemaVersion},
      {"analysis_id", r.analysis_id},
      {"document",
       {{"id", doc.id},
        {"title", doc.title ? json(*doc.title) : json(nullptr)},
        {"word_count", doc.word_count},
        {"sentence_count", doc.sentences.size()},
        {"paragraph_count", doc.paragraphs.size()},
        {"syllable_count", doc.syllable_count}}},
      {"sentences", std::move(sentences)},
      {"characters", std::move(characters)},
      {"topics", std::move(topics)},
      {"topic_model", std::move(topic_model)},
      {"stats",
       {{"article_polarity", r.metrics.article_polarity},
        {"article_subjectivity", r.metrics.article_subjectivity},
        {"flesch_score", r.metrics.flesch_score},
        {"histogram", std::move(histogram)},
        {"radar", {{"sentiment", r.radar.sentiment_axes}, {"discourse", modes_object(r.radar.discourse_axes)}}}}},
      {"summary",
       {{"writing_style", graded(to_string(r.summary.writing_style.level), r.summary.writing_style.grade)},
        {"sentiment", graded(to_string(r.summary.sentiment.level), r.summary.sentiment.grade)},
        {"readability", graded(to_string(r.summary.readability.level), r.summary.readability.grade)},
        {"reliability", graded(to_string(r.summary.reliability.level), r.summary.reliability.grade)}}},
      {"patterns", std::move(patterns)},
      {"wordcloud", std::move(wordcloud)},
      {"config", r.config},
  };
}

std::string dump_analysis(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Validation

namespace {

class Checker {
 public:
  std::vector<std::string> problems;

  bool require(const json& obj, const char* key, json::value_t type, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(where + ": missing '" + key + "'");
      return false;
    }
    const json& v = obj[key];
    const bool ok = type == json::value_t::number_float ? v.is_number()
                    : type == json::value_t::number_unsigned ? v.is_number_unsigned()
                    : type == json::value_t::number_integer  ? v.is_number_integer()
                                                             : v.type() == type;
    if (!ok) problems.push_back(where + "." + key + ": wrong type");
    return ok;
  }

  void expect(bool cond, const std::string& message) {
    if (!cond) problems.push_back(message);
  }
};

constexpr auto kObj = json::value_t::object;
constexpr auto kArr = json::value_t::array;
constexpr auto kStr = json::value_t::string;
constexpr auto kNum = json::value_t::number_float;
constexpr auto kUint = json::value_t::number_unsigned;
constexpr auto kInt = json::value_t::number_integer;
constexpr auto kBool = json::value_t::boolean;

template <typename Level>
std::string level_name(Level l) {
  return std::string(to_string(l));
}

}  // namespace

std::vector<std::string> validate_analysis_json(const json& j) {
  Checker c;
  if (!j.is_object()) return {"analysis is not an object"};
  for (const char* key : {"sentences", "characters", "topics", "patterns", "wordcloud"}) c.require(j, key, kArr, "$");
  for (const char* key : {"document", "stats", "summary", "config"}) c.require(j, key, kObj, "$");
  c.require(j, "analysis_id", kStr, "$");
  if (c.require(j, "schema_version", kInt, "$")) c.expect(j["schema_version"] == kSchemaVersion, "$.schema_version: unsupported");
  if (!c.problems.empty()) return c.problems;

  const json& sentences = j["sentences"];
  const json& document = j["document"];
  const json& stats = j["stats"];
  const std::size_t n = sentences.size();

  c.require(document, "id", kStr, "$.document");
  for (const char* key : {"word_count", "sentence_count", "paragraph_count", "syllable_count"}) {
    c.require(document, key, kUint, "$.document");
  }
  if (document.contains("sentence_count") && document["sentence_count"].is_number_unsigned()) {
    c.expect(document["sentence_count"].get<std::size_t>() == n, "document.sentence_count != sentences.length");
  }

  std::set<int> character_ids;
  for (std::size_t i = 0; i < j["characters"].size(); ++i) {
    const json& ch = j["characters"][i];
    const std::string where = "$.characters[" + std::to_string(i) + "]";
    if (c.require(ch, "id", kInt, where)) character_ids.insert(ch["id"].get<int>());
    c.require(ch, "name", kStr, where);
    c.require(ch, "aliases", kArr, where);
    if (c.require(ch, "sentences", kArr, where)) {
      for (const auto& s : ch["sentences"]) c.expect(s.is_number_unsigned() && s.get<std::size_t>() < n, where + ": bad sentence ref");
    }
  }
  std::set<int> topic_ids;
  for (std::size_t i = 0; i < j["topics"].size(); ++i) {
    const json& t = j["topics"][i];
    const std::string where = "$.topics[" + std::to_string(i) + "]";
    if (c.require(t, "id", kInt, where)) topic_ids.insert(t["id"].get<int>());
    c.require(t, "keywords", kArr, where);
    c.require(t, "weight", kNum, where);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const json& s = sentences[i];
    const std::string where = "$.sentences[" + std::to_string(i) + "]";
    if (c.require(s, "index", kUint, where)) c.expect(s["index"].get<std::size_t>() == i, where + ": index out of order");
    c.require(s, "paragraph", kUint, where);
    c.require(s, "span", kArr, where);
    c.require(s, "text", kStr, where);
    if (c.require(s, "polarity", kNum, where)) {
      const double p = s["polarity"].get<double>();
      c.expect(p >= -1.0 && p <= 1.0, where + ": polarity out of range");
      if (c.require(s, "extreme", kBool, where)) {
        c.expect(s["extreme"].get<bool>() == (std::abs(p) > kExtremePolarity), where + ": extreme flag disagrees with polarity");
      }
    }
    if (c.require(s, "subjectivity", kNum, where)) {
      const double v = s["subjectivity"].get<double>();
      c.expect(v >= 0.0 && v <= 1.0, where + ": subjectivity out of range");
    }
    if (c.require(s, "mode", kStr, where)) c.expect(parse_mode(s["mode"].get<std::string>()).has_value(), where + ": unknown mode");
    c.require(s, "confidence", kNum, where);
    if (c.require(s, "markers", kArr, where)) {
      for (const auto& m : s["markers"]) {
        if (!c.require(m, "kind", kStr, where + ".markers") || !c.require(m, "ref", kInt, where + ".markers")) continue;
        c.require(m, "stack_position", kInt, where + ".markers");
        const std::string kind = m["kind"].get<std::string>();
        const int ref = m["ref"].get<int>();
        if (kind == "character") {
          c.expect(character_ids.contains(ref), where + ": marker refers to unknown character");
        } else if (kind == "keyword") {
          c.expect(topic_ids.contains(ref), where + ": marker refers to unknown topic");
        } else {
          c.expect(false, where + ": unknown marker kind");
        }
      }
    }
  }

  for (const char* key : {"article_polarity", "article_subjectivity", "flesch_score"}) c.require(stats, key, kNum, "$.stats");
  if (c.require(stats, "histogram", kObj, "$.stats")) {
    std::size_t total = 0;
    for (auto m : kAllModes) {
      const std::string name(to_string(m));
      if (!c.require(stats["histogram"], name.c_str(), kUint, "$.stats.histogram")) continue;
      const std::size_t count = stats["histogram"][name].get<std::size_t>();
      total += count;
      const auto tally = static_cast<std::size_t>(std::count_if(sentences.begin(), sentences.end(), [&](const json& s) {
        return s.contains("mode") && s["mode"] == name;
      }));
      c.expect(tally == count, "stats.histogram." + name + " disagrees with sentence modes");
    }
    c.expect(total == n, "histogram total != sentences.length");
  }
  if (c.require(stats, "radar", kObj, "$.stats") && c.require(stats["radar"], "sentiment", kArr, "$.stats.radar")) {
    std::size_t total = 0;
    for (const auto& v : stats["radar"]["sentiment"]) total += v.is_number_unsigned() ? v.get<std::size_t>() : 0;
    c.expect(stats["radar"]["sentiment"].size() == kSentimentBins, "radar sentiment must have 5 bins");
    c.expect(total == n, "radar sentiment total != sentences.length");
    c.require(stats["radar"], "discourse", kObj, "$.stats.radar");
  }

  // Summary levels must follow from the stats and histogram.
  const json& summary = j["summary"];
  if (c.problems.empty()) {
    DiscourseHistogram h;
    for (auto m : kAllModes) h.counts[index_of(m)] = stats["histogram"][std::string(to_string(m))].get<std::size_t>();
    ArticleMetrics metrics{stats["article_polarity"].get<double>(), stats["article_subjectivity"].get<double>(),
                           stats["flesch_score"].get<double>()};
    const ArticleSummary expected = summarize(metrics, h);
    const auto check = [&](const char* key, const std::string& level, double grade) {
      if (!c.require(summary, key, kObj, "$.summary")) return;
      const json& g = summary[key];
      if (!c.require(g, "level", kStr, std::string("$.summary.") + key) ||
          !c.require(g, "grade", kNum, std::string("$.summary.") + key)) {
        return;
      }
      c.expect(g["level"] == level, std::string("summary.") + key + ".level is not re-derivable from stats");
      c.expect(g["grade"].get<double>() == grade, std::string("summary.") + key + ".grade is not re-derivable from stats");
    };
    check("writing_style", level_name(expected.writing_style.level), expected.writing_style.grade);
    check("sentiment", level_name(expected.sentiment.level), expected.sentiment.grade);
    check("readability", level_name(expected.readability.level), expected.readability.grade);
    check("reliability", level_name(expected.reliability.level), expected.reliability.grade);
  }

  for (std::size_t i = 0; i < j["patterns"].size(); ++i) {
    const json& p = j["patterns"][i];
    const std::string where = "$.patterns[" + std::to_string(i) + "]";
    c.require(p, "kind", kStr, where);
    if (c.require(p, "severity", kStr, where)) {
      const auto sev = p["severity"].get<std::string>();
      c.expect(sev == "info" || sev == "warning" || sev == "alert", where + ": unknown severity");
    }
    if (c.require(p, "sentences", kArr, where)) {
      for (const auto& s : p["sentences"]) c.expect(s.is_number_unsigned() && s.get<std::size_t>() < n, where + ": bad sentence ref");
    }
    if (c.require(p, "characters", kArr, where)) {
      for (const auto& id : p["characters"]) c.expect(id.is_number_integer() && character_ids.contains(id.get<int>()), where + ": bad character ref");
    }
  }
  c.expect(j["wordcloud"].size() <= 50, "wordcloud holds more than 50 stems");
  for (const char* key : {"seed", "topics"}) c.require(j["config"], key, kInt, "$.config");
  if (c.require(j["config"], "thresholds", kObj, "$.config")) c.require(j["config"]["thresholds"], "version", kInt, "$.config.thresholds");
  return c.problems;
}

}  // namespace sirenless
