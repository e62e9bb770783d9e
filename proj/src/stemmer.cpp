#include "sirenless/stemmer.hpp"

#include <array>

namespace sirenless {

namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  std::size_t min_stem;
  bool undouble;
};

// Sorted by suffix length, longest first.
constexpr std::array<Rule, 9> kRules = {{
    {"tions", "t", 3, false},
    {"ingly", "", 3, true},
    {"tion", "t", 3, false},
    {"edly", "", 3, true},
    {"ies", "y", 3, false},
    {"ing", "", 3, true},
    {"ed", "", 3, true},
    {"ly", "", 4, false},
    {"s", "", 3, false},
}};

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

}  // namespace

std::string stem(std::string_view word) {
  std::string w(word);
  if (w == "news" || w == "series" || w == "species") return w;

  for (const Rule& r : kRules) {
    if (w.size() < r.suffix.size() + r.min_stem || !w.ends_with(r.suffix)) continue;
    std::string base = w.substr(0, w.size() - r.suffix.size());
    if (r.suffix == "s" && (base.ends_with("s") || base.ends_with("u") || base.ends_with("i"))) {
      return w;  // "class", "status", "analysis"
    }
    if (r.suffix == "ly" && is_vowel(base.back())) return w;
    if (r.undouble && base.size() >= 2 && base.back() == base[base.size() - 2] &&
        !is_vowel(base.back()) && base.back() != 'l' && base.back() != 's' && base.back() != 'z') {
      base.pop_back();
    }
    return base + std::string(r.replacement);
  }
  return w;
}

}  // namespace sirenless
