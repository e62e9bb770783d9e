#include "sirenless/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "sirenless/errors.hpp"
#include "sirenless/resources.hpp"

namespace sirenless {

namespace {

using nlohmann::json;

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

double share(std::size_t part, std::size_t whole) {
  return whole ? static_cast<double>(part) / static_cast<double>(whole) : 0.0;
}

template <typename Fn>
void for_each_threshold(Thresholds& t, Fn&& fn) {
  fn("emotional_cutoff", t.emotional_cutoff);
  fn("min_emotional", t.min_emotional);
  fn("dominance_share", t.dominance_share);
  fn("oscillation_share", t.oscillation_share);
  fn("subjectivity_warning", t.subjectivity_warning);
  fn("subjectivity_alert", t.subjectivity_alert);
  fn("easy_read_score", t.easy_read_score);
  fn("argument_share", t.argument_share);
  fn("min_character_mentions", t.min_character_mentions);
  fn("character_bias", t.character_bias);
  fn("min_quotes", t.min_quotes);
  fn("emotional_quote_share", t.emotional_quote_share);
}

}  // namespace

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::SentimentDominance: return "SentimentDominance";
    case PatternKind::SentimentOscillation: return "SentimentOscillation";
    case PatternKind::HighSubjectivity: return "HighSubjectivity";
    case PatternKind::EasyRead: return "EasyRead";
    case PatternKind::ArgumentHeavy: return "ArgumentHeavy";
    case PatternKind::CharacterSentimentBias: return "CharacterSentimentBias";
    case PatternKind::EmotionalQuotes: return "EmotionalQuotes";
  }
  return "";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Alert: return "alert";
  }
  return "info";
}

json thresholds_to_json(const Thresholds& t) {
  json values = json::object();
  Thresholds copy = t;
  for_each_threshold(copy, [&](const char* name, auto& v) { values[name] = v; });
  return {{"version", t.version}, {"thresholds", values}};
}

Thresholds thresholds_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("threshold config must be a JSON object");
  Thresholds t;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()) throw ConfigError("threshold 'version' must be an integer");
    t.version = j["version"].get<int>();
  }
  const json values = j.value("thresholds", json::object());
  if (!values.is_object()) throw ConfigError("'thresholds' must be an object");
  std::set<std::string> known;
  for_each_threshold(t, [&](const char* name, auto& field) {
    known.insert(name);
    if (!values.contains(name)) return;
    const json& v = values[name];
    if (!v.is_number()) throw ConfigError(std::string("threshold '") + name + "' must be a number");
    using T = std::decay_t<decltype(field)>;
    if constexpr (std::is_same_v<T, std::size_t>) {
      if (!v.is_number_unsigned()) throw ConfigError(std::string("threshold '") + name + "' must be a non-negative integer");
      field = v.get<std::size_t>();
    } else {
      field = v.get<double>();
    }
  });
  for (const auto& [name, _] : values.items()) {
    if (!known.contains(name)) throw ConfigError("unknown threshold '" + name + "'");
  }
  return t;
}

Thresholds load_thresholds(const std::filesystem::path& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw ConfigError(path.string() + ": not valid JSON");
  return thresholds_from_json(j);
}

const Finding* PatternReport::find(PatternKind kind) const {
  for (const auto& f : findings) {
    if (f.kind == kind) return &f;
  }
  return nullptr;
}

PatternReport detect_patterns(const PatternInput& in, const Thresholds& t) {
  const std::size_t n = in.sentiments.size();
  if (in.modes.size() != n) throw std::invalid_argument("detect_patterns: modes and sentiments differ in length");

  PatternReport report;

  // Emotional sentences split by sign.
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = in.sentiments[i].polarity;
    if (std::abs(p) >= t.emotional_cutoff) (p > 0.0 ? positive : negative).push_back(i);
  }
  const std::size_t emotional = positive.size() + negative.size();

  if (emotional >= t.min_emotional && emotional > 0) {
    const bool pos_major = positive.size() >= negative.size();
    const auto& major = pos_major ? positive : negative;
    if (share(major.size(), emotional) >= t.dominance_share) {
      report.findings.push_back(
          {PatternKind::SentimentDominance, Severity::Alert, major, {},
           fmt("%.0f of %.0f emotional sentences share one sign", static_cast<double>(major.size()),
               static_cast<double>(emotional)) +
               (pos_major ? " (positive)" : " (negative)")});
    }
  }

  if (emotional >= t.min_emotional && emotional > 0 && share(positive.size(), emotional) >= t.oscillation_share &&
      share(negative.size(), emotional) >= t.oscillation_share) {
    std::vector<std::size_t> evidence = positive;
    evidence.insert(evidence.end(), negative.begin(), negative.end());
    std::sort(evidence.begin(), evidence.end());
    report.findings.push_back({PatternKind::SentimentOscillation, Severity::Alert, evidence, {},
                               fmt("%.0f positive and %.0f negative emotional sentences",
                                   static_cast<double>(positive.size()), static_cast<double>(negative.size()))});
  }

  if (in.article_subjectivity >= t.subjectivity_warning) {
    std::vector<std::size_t> evidence;
    for (std::size_t i = 0; i < n; ++i) {
      if (in.sentiments[i].subjectivity >= t.subjectivity_warning) evidence.push_back(i);
    }
    const Severity sev = in.article_subjectivity >= t.subjectivity_alert ? Severity::Alert : Severity::Warning;
    report.findings.push_back({PatternKind::HighSubjectivity, sev, evidence, {},
                               fmt("article subjectivity %.3f", in.article_subjectivity)});
  }

  if (in.flesch_score > t.easy_read_score) {
    report.findings.push_back({PatternKind::EasyRead, Severity::Info, {}, {},
                               fmt("Flesch reading ease %.1f (above %.0f)", in.flesch_score, t.easy_read_score)});
  }

  {
    std::vector<std::size_t> arguments;
    for (std::size_t i = 0; i < n; ++i) {
      if (in.modes[i] == DiscourseMode::Argument) arguments.push_back(i);
    }
    if (n > 0 && share(arguments.size(), n) >= t.argument_share) {
      report.findings.push_back({PatternKind::ArgumentHeavy, Severity::Warning, arguments, {},
                                 fmt("%.0f%% of sentences are argument", 100.0 * share(arguments.size(), n))});
    }
  }

  {
    std::vector<int> biased;
    std::set<std::size_t> sentences;
    bool any_pos = false;
    bool any_neg = false;
    std::string detail;
    for (const auto& c : in.characters) {
      std::vector<std::size_t> mentions;
      for (std::size_t s : c.mention_sentences) {
        if (s < n) mentions.push_back(s);
      }
      if (mentions.size() < t.min_character_mentions) continue;
      double sum = 0.0;
      for (std::size_t s : mentions) sum += in.sentiments[s].polarity;
      const double mean = sum / static_cast<double>(mentions.size());
      if (std::abs(mean) < t.character_bias) continue;
      biased.push_back(c.id);
      sentences.insert(mentions.begin(), mentions.end());
      (mean > 0.0 ? any_pos : any_neg) = true;
      if (!detail.empty()) detail += "; ";
      detail += c.canonical + fmt(" %+.2f", mean);
    }
    if (!biased.empty()) {
      std::sort(biased.begin(), biased.end());
      report.findings.push_back({PatternKind::CharacterSentimentBias,
                                 any_pos && any_neg ? Severity::Alert : Severity::Warning,
                                 {sentences.begin(), sentences.end()}, biased,
                                 "mean polarity around characters: " + detail});
    }
  }

  {
    std::size_t quotes = 0;
    std::vector<std::size_t> extreme;
    for (std::size_t i = 0; i < n; ++i) {
      if (in.modes[i] != DiscourseMode::Quote) continue;
      ++quotes;
      if (in.sentiments[i].extreme) extreme.push_back(i);
    }
    if (quotes >= t.min_quotes && quotes > 0 && share(extreme.size(), quotes) >= t.emotional_quote_share) {
      report.findings.push_back({PatternKind::EmotionalQuotes, Severity::Alert, extreme, {},
                                 fmt("%.0f of %.0f quotes carry extreme sentiment",
                                     static_cast<double>(extreme.size()), static_cast<double>(quotes))});
    }
  }

  return report;
}

}  // namespace sirenless
