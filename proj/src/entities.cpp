#include "sirenless/entities.hpp"

#include <algorithm>
#include <map>

#include "sirenless/text.hpp"

namespace sirenless {

namespace {

struct Mention {
  std::vector<std::string> words;
  std::size_t offset = 0;
  bool rescued = false;
};

struct Group {
  std::vector<std::string> canonical;
  std::vector<std::string> forms;
  std::size_t count = 0;
  std::size_t first_offset = 0;
  bool rescued = false;
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool contains_run(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

// Possessive "Lyle's" names the same person as "Lyle".
std::string_view bare(std::string_view surface) {
  if (surface.size() > 2 && surface.ends_with("'s")) surface.remove_suffix(2);
  return surface;
}

// First content word of the sentence, or of a quotation inside it.
std::vector<bool> initial_flags(const std::vector<Token>& tokens) {
  std::vector<bool> flags(tokens.size(), false);
  bool expect = true;
  std::size_t quotes = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::QuoteMark && tokens[i].surface == "\"") {
      if (++quotes % 2 == 1) expect = true;
    } else if (tokens[i].is_content()) {
      flags[i] = expect;
      expect = false;
    }
  }
  return flags;
}

}  // namespace

const EntityLists& EntityLists::bundled() {
  static const EntityLists lists{bundled_word_list("honorifics.txt"), bundled_word_list("stopwords.txt"),
                                 bundled_word_list("calendar.txt")};
  return lists;
}

bool alias_matches(const std::vector<Token>& tokens, const std::string& alias) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= alias.size()) {
    std::size_t sp = alias.find(' ', pos);
    if (sp == std::string::npos) sp = alias.size();
    if (sp > pos) words.push_back(alias.substr(pos, sp - pos));
    pos = sp + 1;
  }
  if (words.empty() || words.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < words.size() && ok; ++k) {
      ok = tokens[i + k].is_word() && bare(tokens[i + k].surface) == words[k];
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Character> extract_characters(const Document& doc, const EntityLists& lists) {
  auto candidate = [&](const Token& t) {
    return t.is_word() && text::is_upper(t.surface.front()) && !lists.stopwords.contains(t.lower) &&
           !lists.calendar.contains(t.lower);
  };
  auto honorific = [&](const Token& t) { return candidate(t) && lists.honorifics.contains(t.lower); };

  std::vector<std::vector<bool>> initial;
  WordSet mid_sentence_caps;
  for (const auto& s : doc.sentences) {
    initial.push_back(initial_flags(s.tokens));
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (candidate(s.tokens[i]) && !initial.back()[i]) mid_sentence_caps.emplace(bare(s.tokens[i].surface));
    }
  }

  std::vector<Mention> mentions;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& toks = doc.sentences[si].tokens;
    std::size_t a = 0;
    while (a < toks.size()) {
      if (!candidate(toks[a])) {
        ++a;
        continue;
      }
      std::size_t b = a;
      while (b < toks.size() && candidate(toks[b])) ++b;

      Mention m;
      // "Mr. Lee": the period splits the run from its title.
      m.rescued = a >= 2 && toks[a - 1].surface == "." && honorific(toks[a - 2]);
      std::size_t first = a;
      for (std::size_t k = a; k < b; ++k) {
        if (honorific(toks[k])) first = k + 1;
      }
      if (first > a) {
        m.rescued = true;
      } else if (initial[si][a] && !mid_sentence_caps.contains(bare(toks[a].surface))) {
        first = a + 1;
      }
      for (std::size_t k = first; k < b; ++k) m.words.emplace_back(bare(toks[k].surface));
      if (!m.words.empty()) {
        m.offset = toks[first].start;
        mentions.push_back(std::move(m));
      }
      a = b;
    }
  }

  // Distinct forms, longest first, so each group's canonical is its longest.
  std::map<std::string, Group> forms;
  for (const auto& m : mentions) {
    auto [it, fresh] = forms.try_emplace(join(m.words));
    Group& g = it->second;
    if (fresh) {
      g.canonical = m.words;
      g.first_offset = m.offset;
    }
    ++g.count;
    g.first_offset = std::min(g.first_offset, m.offset);
    g.rescued = g.rescued || m.rescued;
  }
  std::vector<Group> ordered;
  for (auto& [_, g] : forms) ordered.push_back(std::move(g));
  std::sort(ordered.begin(), ordered.end(), [](const Group& x, const Group& y) {
    if (x.canonical.size() != y.canonical.size()) return x.canonical.size() > y.canonical.size();
    return x.first_offset < y.first_offset;
  });

  std::vector<Group> groups;
  for (auto& form : ordered) {
    Group* target = nullptr;
    for (auto& g : groups) {
      if (contains_run(g.canonical, form.canonical) &&
          (!target || g.first_offset < target->first_offset)) {
        target = &g;
      }
    }
    if (target) {
      target->forms.push_back(join(form.canonical));
      target->count += form.count;
      target->first_offset = std::min(target->first_offset, form.first_offset);
      target->rescued = target->rescued || form.rescued;
    } else {
      form.forms.push_back(join(form.canonical));
      groups.push_back(std::move(form));
    }
  }

  std::erase_if(groups, [](const Group& g) { return g.count == 1 && g.canonical.size() == 1 && !g.rescued; });
  std::sort(groups.begin(), groups.end(),
            [](const Group& x, const Group& y) { return x.first_offset < y.first_offset; });

  std::vector<Character> out;
  for (auto& g : groups) {
    Character c;
    c.id = static_cast<int>(out.size());
    c.canonical = join(g.canonical);
    c.aliases = std::move(g.forms);
    std::sort(c.aliases.begin(), c.aliases.end());
    for (const auto& s : doc.sentences) {
      if (std::any_of(c.aliases.begin(), c.aliases.end(),
                      [&](const std::string& a) { return alias_matches(s.tokens, a); })) {
        c.mention_sentences.push_back(s.index);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sirenless
