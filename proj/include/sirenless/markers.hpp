#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sirenless/entities.hpp"
#include "sirenless/ingest.hpp"
#include "sirenless/topics.hpp"

namespace sirenless {

enum class MarkerKind { Character, Keyword };

std::string_view to_string(MarkerKind kind);

/// A glyph stacked above a sentence in the explorer: a circle per character,
/// a triangle per topic.
struct Marker {
  std::size_t sentence = 0;
  MarkerKind kind = MarkerKind::Character;
  int ref_id = 0;
  int stack_position = 0;

  bool operator==(const Marker&) const = default;
};

/// At most one marker per (sentence, kind, ref). Within a sentence the stack
/// is characters by id, then topics by id, numbered from 0.
std::vector<Marker> assign_markers(const Document& doc, std::span<const Character> characters,
                                   std::span<const Topic> topics, const WordSet& stopwords);

/// Stemmed content-word counts, sorted by count descending then stem, at
/// most `limit` entries.
std::vector<std::pair<std::string, std::size_t>> wordcloud_counts(const Document& doc,
                                                                  const WordSet& stopwords,
                                                                  std::size_t limit = 50);

}  // namespace sirenless
