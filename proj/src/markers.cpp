#include "sirenless/markers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sirenless {

std::string_view to_string(MarkerKind kind) {
  return kind == MarkerKind::Character ? "character" : "keyword";
}

std::vector<Marker> assign_markers(const Document& doc, std::span<const Character> characters,
                                   std::span<const Topic> topics, const WordSet& stopwords) {
  std::vector<Character> chars(characters.begin(), characters.end());
  std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) { return a.id < b.id; });
  std::vector<Topic> tops(topics.begin(), topics.end());
  std::sort(tops.begin(), tops.end(), [](const Topic& a, const Topic& b) { return a.id < b.id; });

  std::vector<Marker> out;
  for (const auto& s : doc.sentences) {
    int stack = 0;
    for (const auto& c : chars) {
      const bool hit = std::any_of(c.aliases.begin(), c.aliases.end(),
                                   [&](const std::string& a) { return alias_matches(s.tokens, a); });
      if (hit) out.push_back({s.index, MarkerKind::Character, c.id, stack++});
    }
    const auto stems = content_stems(s.tokens, stopwords);
    const std::set<std::string> present(stems.begin(), stems.end());
    for (const auto& t : tops) {
      const bool hit = std::any_of(t.keywords.begin(), t.keywords.end(),
                                   [&](const auto& kw) { return present.contains(kw.first); });
      if (hit) out.push_back({s.index, MarkerKind::Keyword, t.id, stack++});
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> wordcloud_counts(const Document& doc,
                                                                  const WordSet& stopwords,
                                                                  std::size_t limit) {
  std::map<std::string, std::size_t> counts;
  for (const auto& s : doc.sentences) {
    for (auto& stem_word : content_stems(s.tokens, stopwords)) ++counts[stem_word];
  }
  std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (out.size() > limit) out.resize(limit);
  return out;
}

}  // namespace sirenless
