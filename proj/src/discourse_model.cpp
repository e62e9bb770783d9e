#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "rng.hpp"
#include "sirenless/discourse.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/text.hpp"

namespace sirenless {

namespace {

using nlohmann::json;

constexpr std::string_view kModelFormat = "sirenless-discourse-model";
constexpr int kModelVersion = 1;

std::array<double, kModeCount> scores(std::span<const double> x, const DiscourseModel& m) {
  std::array<double, kModeCount> s{};
  for (std::size_t c = 0; c < kModeCount; ++c) {
    double v = m.bias[c];
    for (std::size_t d = 0; d < x.size(); ++d) v += m.weights[c][d] * x[d];
    s[c] = v;
  }
  return s;
}

// Highest score; ties go to the earliest mode in kTieBreakOrder.
std::size_t argmax(const std::array<double, kModeCount>& s) {
  std::size_t best = index_of(kTieBreakOrder[0]);
  for (auto m : kTieBreakOrder) {
    if (s[index_of(m)] > s[best]) best = index_of(m);
  }
  return best;
}

// Visits corpus sentences grouped by doc and ordered by index. `step`
// receives the corpus position and the context, and returns the mode to
// feed forward as the next sentence's previous label.
template <typename Step>
void walk_corpus(std::span<const LabeledSentence> corpus, const DiscourseCues& cues, Step&& step) {
  std::map<std::string, std::vector<std::size_t>> docs;
  for (std::size_t i = 0; i < corpus.size(); ++i) docs[corpus[i].doc].push_back(i);

  for (auto& [name, members] : docs) {
    std::stable_sort(members.begin(), members.end(),
                     [&](std::size_t a, std::size_t b) { return corpus[a].index < corpus[b].index; });
    WordSet prior;
    std::optional<DiscourseMode> previous;
    for (std::size_t rank = 0; rank < members.size(); ++rank) {
      const std::size_t i = members[rank];
      const auto tokens = tokenize(corpus[i].text);
      SentenceContext ctx;
      ctx.previous = previous;
      ctx.position = members.size() > 1 ? static_cast<double>(rank) /
                                              static_cast<double>(members.size() - 1)
                                        : 0.0;
      ctx.prior_entities = &prior;
      previous = step(i, tokens, ctx);
      for (auto& w : entity_words(tokens, cues)) prior.insert(std::move(w));
    }
  }
}

}  // namespace

DiscourseModel DiscourseModel::zeros() {
  DiscourseModel m;
  m.feature_names = FeatureVector::names();
  for (auto& w : m.weights) w.assign(m.feature_names.size(), 0.0);
  return m;
}

DiscourseLabel classify(std::span<const double> x, const DiscourseModel& model) {
  if (x.size() != model.feature_names.size()) {
    throw ModelError("feature dimension mismatch: got " + std::to_string(x.size()) + ", model has " +
                     std::to_string(model.feature_names.size()));
  }
  for (const auto& w : model.weights) {
    if (w.size() != x.size()) throw ModelError("model weight vectors have inconsistent dimensions");
  }
  const auto s = scores(x, model);
  const std::size_t best = argmax(s);
  const double top = *std::max_element(s.begin(), s.end());
  double z = 0.0;
  for (double v : s) z += std::exp(v - top);
  return {kAllModes[best], std::exp(s[best] - top) / z, LabelSource::Model};
}

DiscourseLabel classify(const FeatureVector& f, const DiscourseModel& model) {
  if (model.feature_names != FeatureVector::names()) {
    throw ModelError("model features do not match feature extractor version " +
                     std::to_string(kFeatureVersion));
  }
  const auto x = f.dense();
  return classify(std::span<const double>(x), model);
}

DiscourseModel train(std::span<const LabeledSentence> corpus, const TrainOptions& options,
                     const DiscourseCues& cues) {
  if (corpus.empty()) throw TrainError("training corpus is empty");
  std::set<DiscourseMode> labels;
  for (const auto& s : corpus) labels.insert(s.mode);
  if (labels.size() < 2) throw TrainError("training corpus needs at least two distinct modes");
  if (options.epochs < 1) throw TrainError("epochs must be >= 1");

  std::vector<std::vector<double>> xs(corpus.size());
  std::vector<std::size_t> ys(corpus.size());
  walk_corpus(corpus, cues, [&](std::size_t i, const std::vector<Token>& tokens, const SentenceContext& ctx) {
    xs[i] = extract_features(tokens, ctx, cues).dense();
    ys[i] = index_of(corpus[i].mode);
    return corpus[i].mode;  // gold context
  });

  DiscourseModel model = DiscourseModel::zeros();
  const std::size_t dim = model.feature_names.size();
  std::array<std::vector<double>, kModeCount> acc;
  for (auto& a : acc) a.assign(dim, 0.0);
  std::array<double, kModeCount> acc_bias{};
  double counter = 1.0;

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  detail::Rng rng(options.seed);

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t i : order) {
      const auto& x = xs[i];
      const std::size_t gold = ys[i];
      const std::size_t pred = argmax(scores(x, model));
      if (pred != gold) {
        for (std::size_t d = 0; d < dim; ++d) {
          model.weights[gold][d] += x[d];
          model.weights[pred][d] -= x[d];
          acc[gold][d] += counter * x[d];
          acc[pred][d] -= counter * x[d];
        }
        model.bias[gold] += 1.0;
        model.bias[pred] -= 1.0;
        acc_bias[gold] += counter;
        acc_bias[pred] -= counter;
      }
      counter += 1.0;
    }
  }

  for (std::size_t c = 0; c < kModeCount; ++c) {
    for (std::size_t d = 0; d < dim; ++d) model.weights[c][d] -= acc[c][d] / counter;
    model.bias[c] -= acc_bias[c] / counter;
  }
  model.metadata.seed = options.seed;
  model.metadata.epochs = options.epochs;
  model.metadata.examples = corpus.size();
  model.metadata.corpus_hash = text::sha256_hex(corpus_to_jsonl(corpus));
  return model;
}

std::vector<DiscourseLabel> label_document(const Document& doc, const DiscourseModel* model,
                                           const DiscourseCues& cues) {
  std::vector<DiscourseLabel> labels;
  labels.reserve(doc.sentences.size());
  WordSet prior;
  std::optional<DiscourseMode> previous;
  const std::size_t n = doc.sentences.size();
  for (const auto& s : doc.sentences) {
    SentenceContext ctx;
    ctx.previous = previous;
    ctx.position = n > 1 ? static_cast<double>(s.index) / static_cast<double>(n - 1) : 0.0;
    ctx.prior_entities = &prior;
    const FeatureVector f = extract_features(s.tokens, ctx, cues);
    labels.push_back(model ? classify(f, *model) : rule_baseline(f));
    previous = labels.back().mode;
    for (auto& w : entity_words(s.tokens, cues)) prior.insert(std::move(w));
  }
  return labels;
}

std::vector<DiscourseLabel> label_corpus(std::span<const LabeledSentence> corpus,
                                         const DiscourseModel* model, const DiscourseCues& cues) {
  std::vector<DiscourseLabel> out(corpus.size());
  walk_corpus(corpus, cues, [&](std::size_t i, const std::vector<Token>& tokens, const SentenceContext& ctx) {
    const FeatureVector f = extract_features(tokens, ctx, cues);
    out[i] = model ? classify(f, *model) : rule_baseline(f);
    return out[i].mode;
  });
  return out;
}

EvalReport evaluate_predictions(std::span<const DiscourseMode> gold,
                                std::span<const DiscourseMode> predicted) {
  if (gold.empty()) throw EvalError("evaluation corpus is empty");
  if (gold.size() != predicted.size()) throw EvalError("gold and predicted lengths differ");

  EvalReport r;
  r.total = gold.size();
  std::array<std::size_t, kModeCount> tp{};
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++r.per_class[index_of(gold[i])].support;
    ++r.per_class[index_of(predicted[i])].predicted;
    if (gold[i] == predicted[i]) {
      ++tp[index_of(gold[i])];
      ++correct;
    }
  }
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < kModeCount; ++c) {
    auto& m = r.per_class[c];
    m.absent_from_gold = m.support == 0;
    m.precision = m.predicted ? static_cast<double>(tp[c]) / static_cast<double>(m.predicted) : 0.0;
    m.recall = m.support ? static_cast<double>(tp[c]) / static_cast<double>(m.support) : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    if (m.absent_from_gold) m.f1 = 0.0;
    f1_sum += m.f1;
  }
  r.macro_f1 = f1_sum / static_cast<double>(kModeCount);
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
  return r;
}

EvalReport evaluate(const DiscourseModel& model, std::span<const LabeledSentence> corpus,
                    const DiscourseCues& cues) {
  if (corpus.empty()) throw EvalError("evaluation corpus is empty");
  const auto labels = label_corpus(corpus, &model, cues);
  std::vector<DiscourseMode> gold;
  std::vector<DiscourseMode> pred;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    gold.push_back(corpus[i].mode);
    pred.push_back(labels[i].mode);
  }
  return evaluate_predictions(gold, pred);
}

std::vector<LabeledSentence> parse_corpus(std::string_view jsonl, const std::string& source) {
  std::vector<LabeledSentence> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string_view line = text::trim(jsonl.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError(source, line_no, "not a JSON object");
    LabeledSentence s;
    if (!j.contains("text") || !j["text"].is_string()) throw ParseError(source, line_no, "missing string 'text'");
    if (!j.contains("mode") || !j["mode"].is_string()) throw ParseError(source, line_no, "missing string 'mode'");
    s.text = j["text"].get<std::string>();
    auto mode = parse_mode(j["mode"].get<std::string>());
    if (!mode) throw ParseError(source, line_no, "unknown mode '" + j["mode"].get<std::string>() + "'");
    s.mode = *mode;
    if (j.contains("doc")) {
      if (j["doc"].is_string()) s.doc = j["doc"].get<std::string>();
      else if (j["doc"].is_number_integer()) s.doc = std::to_string(j["doc"].get<long long>());
      else throw ParseError(source, line_no, "'doc' must be a string or integer");
    }
    if (j.contains("index")) {
      if (!j["index"].is_number_unsigned()) throw ParseError(source, line_no, "'index' must be a non-negative integer");
      s.index = j["index"].get<std::size_t>();
    } else {
      s.index = out.size();
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LabeledSentence> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

std::string corpus_to_jsonl(std::span<const LabeledSentence> corpus) {
  std::string out;
  for (const auto& s : corpus) {
    json j = {{"text", s.text}, {"mode", to_string(s.mode)}, {"doc", s.doc}, {"index", s.index}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

json model_to_json(const DiscourseModel& model) {
  json weights = json::object();
  json bias = json::object();
  json classes = json::array();
  for (auto m : kAllModes) {
    const std::string name(to_string(m));
    classes.push_back(name);
    weights[name] = model.weights[index_of(m)];
    bias[name] = model.bias[index_of(m)];
  }
  return {{"format", kModelFormat},
          {"version", kModelVersion},
          {"feature_version", kFeatureVersion},
          {"feature_names", model.feature_names},
          {"classes", classes},
          {"weights", weights},
          {"bias", bias},
          {"metadata",
           {{"seed", model.metadata.seed},
            {"epochs", model.metadata.epochs},
            {"corpus_hash", model.metadata.corpus_hash},
            {"examples", model.metadata.examples}}}};
}

DiscourseModel model_from_json(const json& j) {
  try {
    if (j.at("format").get<std::string>() != kModelFormat) throw ModelError("not a discourse model");
    if (j.at("version").get<int>() != kModelVersion) {
      throw ModelError("unsupported model version " + j.at("version").dump());
    }
    DiscourseModel m;
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    if (m.feature_names != FeatureVector::names()) {
      throw ModelError("model features do not match this feature extractor (version " +
                       std::to_string(kFeatureVersion) + ")");
    }
    for (auto mode : kAllModes) {
      const std::string name(to_string(mode));
      m.weights[index_of(mode)] = j.at("weights").at(name).get<std::vector<double>>();
      m.bias[index_of(mode)] = j.at("bias").at(name).get<double>();
      if (m.weights[index_of(mode)].size() != m.feature_names.size()) {
        throw ModelError("weight vector for '" + name + "' has the wrong dimension");
      }
    }
    const json& meta = j.at("metadata");
    m.metadata.seed = meta.at("seed").get<std::uint64_t>();
    m.metadata.epochs = meta.at("epochs").get<int>();
    m.metadata.corpus_hash = meta.at("corpus_hash").get<std::string>();
    m.metadata.examples = meta.at("examples").get<std::size_t>();
    return m;
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
}

void save_model(const DiscourseModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << model_to_json(model).dump(2) << '\n';
  if (!out) throw IoError("error writing " + path.string());
}

DiscourseModel load_model(const std::filesystem::path& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw ModelError(path.string() + ": not valid JSON");
  return model_from_json(j);
}

}  // namespace sirenless
