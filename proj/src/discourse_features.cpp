#include "sirenless/discourse.hpp"

#include <algorithm>

#include "sirenless/text.hpp"

namespace sirenless {

namespace {

bool is_double_quote(const Token& t) {
  return t.kind == TokenKind::QuoteMark && (t.surface == "\"" || t.surface == "\xC2\xAB" ||
                                            t.surface == "\xC2\xBB");
}

bool capitalized(const Token& t) { return t.is_word() && text::is_upper(t.surface.front()); }

// "Becker's" and "Becker" name the same entity.
std::string entity_key(const Token& t) {
  std::string_view w = t.lower;
  if (w.size() > 2 && w.ends_with("'s")) w.remove_suffix(2);
  return std::string(w);
}

bool is_year(const Token& t) {
  std::string_view s = t.lower;
  if (t.is_word() && s.size() == 5 && s.back() == 's') s.remove_suffix(1);  // 1990s
  else if (t.kind != TokenKind::Number) return false;
  if (s.size() != 4 || !std::all_of(s.begin(), s.end(), text::is_digit)) return false;
  const int year = std::stoi(std::string(s));
  return year >= 1500 && year <= 2099;
}

const WordSet kFirstPerson = {"i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves"};

// Per-token flags shared by feature extraction and entity tracking.
struct Scan {
  std::vector<bool> quoted;   // inside a balanced pair of double quotes
  std::vector<bool> initial;  // first word of the sentence or of a quotation
};

Scan scan(std::span<const Token> tokens) {
  Scan s;
  s.quoted.assign(tokens.size(), false);
  s.initial.assign(tokens.size(), false);

  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_double_quote(tokens[i])) marks.push_back(i);
  }
  for (std::size_t p = 0; p + 1 < marks.size(); p += 2) {
    for (std::size_t i = marks[p] + 1; i < marks[p + 1]; ++i) s.quoted[i] = true;
  }

  bool expect_initial = true;
  std::size_t quote_marks = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_double_quote(tokens[i])) {
      if (++quote_marks % 2 == 1) expect_initial = true;
      continue;
    }
    if (tokens[i].is_content()) {
      s.initial[i] = expect_initial;
      expect_initial = false;
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(DiscourseMode mode) {
  switch (mode) {
    case DiscourseMode::Narration: return "narration";
    case DiscourseMode::Argument: return "argument";
    case DiscourseMode::Quote: return "quote";
    case DiscourseMode::Description: return "description";
    case DiscourseMode::Background: return "background";
  }
  return "narration";
}

std::optional<DiscourseMode> parse_mode(std::string_view name) {
  const std::string lower = text::to_lower(name);
  for (auto m : kAllModes) {
    if (to_string(m) == lower) return m;
  }
  return std::nullopt;
}

const DiscourseCues& DiscourseCues::bundled() {
  static const DiscourseCues cues{
      bundled_word_list("reporting_verbs.txt"),    bundled_word_list("opinion_cues.txt"),
      bundled_word_list("modals.txt"),             bundled_word_list("sensory_adjectives.txt"),
      bundled_word_list("past_tense.txt"),         bundled_word_list("calendar.txt"),
      bundled_word_list("stopwords.txt")};
  return cues;
}

const std::vector<std::string>& FeatureVector::names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"quoted_token_fraction", "has_reporting_verb", "first_person",
                                  "opinion_cue_count",     "modal_count",        "past_tense_fraction",
                                  "date_or_year_present",  "numeric_density",    "sentence_position",
                                  "token_count",           "sensory_cue_count",  "refers_prior_entity"};
    for (auto m : kAllModes) n.push_back("prev_mode=" + std::string(to_string(m)));
    return n;
  }();
  return names;
}

std::vector<double> FeatureVector::dense() const {
  std::vector<double> v = {quoted_token_fraction,
                           has_reporting_verb ? 1.0 : 0.0,
                           first_person ? 1.0 : 0.0,
                           static_cast<double>(opinion_cue_count),
                           static_cast<double>(modal_count),
                           past_tense_fraction,
                           date_or_year_present ? 1.0 : 0.0,
                           numeric_density,
                           sentence_position,
                           std::min(static_cast<double>(token_count) / 40.0, 2.0),
                           static_cast<double>(sensory_cue_count),
                           refers_prior_entity ? 1.0 : 0.0};
  for (auto m : kAllModes) v.push_back(previous == m ? 1.0 : 0.0);
  return v;
}

std::vector<std::string> entity_words(std::span<const Token> tokens, const DiscourseCues& cues) {
  const Scan s = scan(tokens);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!capitalized(t) || s.initial[i]) continue;
    const std::string key = entity_key(t);
    if (cues.stopwords.contains(key) || cues.calendar.contains(key)) continue;
    out.push_back(key);
  }
  return out;
}

FeatureVector extract_features(std::span<const Token> tokens, const SentenceContext& context,
                               const DiscourseCues& cues) {
  FeatureVector f;
  const Scan s = scan(tokens);

  std::vector<std::size_t> content;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_content()) content.push_back(i);
  }
  if (content.empty()) return f;

  std::size_t quoted = 0;
  std::size_t numbers = 0;
  std::size_t words = 0;
  std::size_t past = 0;
  for (std::size_t c = 0; c < content.size(); ++c) {
    const std::size_t i = content[c];
    const Token& t = tokens[i];
    if (s.quoted[i]) ++quoted;
    if (t.kind == TokenKind::Number) ++numbers;
    if (is_year(t)) f.date_or_year_present = true;

    if (!t.is_word()) continue;
    ++words;
    const std::string& w = t.lower;
    if (cues.past_tense.contains(w) || (w.size() >= 4 && w.ends_with("ed"))) ++past;

    bool month_name = false;
    if (capitalized(t) && cues.calendar.contains(w)) {
      // "May" and "March" double as ordinary words; require a nearby number.
      if (w != "may" && w != "march") {
        month_name = true;
      } else {
        const bool prev_num = c > 0 && tokens[content[c - 1]].kind == TokenKind::Number;
        const bool next_num = c + 1 < content.size() && tokens[content[c + 1]].kind == TokenKind::Number;
        month_name = prev_num || next_num;
      }
      if (month_name) f.date_or_year_present = true;
    }
    if (context.prior_entities && capitalized(t) && !cues.stopwords.contains(w) &&
        context.prior_entities->contains(entity_key(t))) {
      f.refers_prior_entity = true;
    }

    if (s.quoted[i]) continue;
    if (cues.reporting_verbs.contains(w)) f.has_reporting_verb = true;
    if (kFirstPerson.contains(w)) f.first_person = true;
    if (cues.opinion_cues.contains(w)) ++f.opinion_cue_count;
    if (cues.modals.contains(w) && !month_name) ++f.modal_count;
    if (cues.sensory_adjectives.contains(w)) ++f.sensory_cue_count;
  }

  const double n = static_cast<double>(content.size());
  f.quoted_token_fraction = static_cast<double>(quoted) / n;
  f.numeric_density = static_cast<double>(numbers) / n;
  f.past_tense_fraction = words ? static_cast<double>(past) / static_cast<double>(words) : 0.0;
  f.sentence_position = std::clamp(context.position, 0.0, 1.0);
  f.token_count = static_cast<int>(content.size());
  f.previous = context.previous;
  return f;
}

DiscourseLabel rule_baseline(const FeatureVector& f, const RuleThresholds& t) {
  auto label = [](DiscourseMode m) { return DiscourseLabel{m, 1.0, LabelSource::Rule}; };
  if (f.quoted_token_fraction >= t.quote_fraction ||
      (f.quoted_token_fraction > 0.0 && f.has_reporting_verb)) {
    return label(DiscourseMode::Quote);
  }
  if (f.opinion_cue_count >= 1 || f.first_person || f.modal_count >= t.modal_count) {
    return label(DiscourseMode::Argument);
  }
  if (f.date_or_year_present && f.refers_prior_entity) return label(DiscourseMode::Background);
  if (f.numeric_density >= t.numeric_density || f.sensory_cue_count >= 1) {
    return label(DiscourseMode::Description);
  }
  return label(DiscourseMode::Narration);
}

}  // namespace sirenless
