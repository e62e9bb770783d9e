#pragma once

#include <string>
#include <vector>

#include "sirenless/ingest.hpp"
#include "sirenless/resources.hpp"

namespace sirenless {

/// A person or organisation named in the article (the "who").
struct Character {
  int id = 0;
  std::string canonical;             // longest mention
  std::vector<std::string> aliases;  // distinct mention forms, sorted; includes canonical
  std::vector<std::size_t> mention_sentences;  // ascending
};

struct EntityLists {
  WordSet honorifics;
  WordSet stopwords;
  WordSet calendar;

  static const EntityLists& bundled();
};

/// Capitalization-based character extraction.
///
/// Candidates are maximal runs of adjacent capitalized words (stopwords and
/// month/day names excluded). Honorifics are stripped from the front of a run
/// and everything up to the last honorific inside it is dropped, so
/// "Chinese President Xi Jinping" yields "Xi Jinping". A run that starts a
/// sentence (or a quotation) keeps its first word only if that word also
/// appears capitalized mid-sentence elsewhere; otherwise the word is dropped
/// and the rest of the run is kept. Mentions whose words form a contiguous
/// piece of a longer mention merge into it. Single-word characters mentioned
/// once are dropped unless an honorific introduced them. Ids follow first
/// mention order; mention_sentences lists every sentence where an alias
/// occurs as a contiguous word sequence.
std::vector<Character> extract_characters(const Document& doc,
                                          const EntityLists& lists = EntityLists::bundled());

/// True if `alias` (space separated words) occurs as a contiguous run of word
/// tokens in `tokens`, case-sensitively. A possessive 's on a token is ignored.
bool alias_matches(const std::vector<Token>& tokens, const std::string& alias);

}  // namespace sirenless
