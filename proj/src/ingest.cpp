#include "sirenless/ingest.hpp"

#include <algorithm>

#include "sirenless/errors.hpp"
#include "sirenless/text.hpp"

namespace sirenless {

namespace {

enum class CharClass { Space, Alnum, Quote, Punct };

CharClass classify(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    if (text::is_space(c)) return CharClass::Space;
    if (text::is_alpha(c) || text::is_digit(c)) return CharClass::Alnum;
    if (c == '"' || c == '\'' || c == '`') return CharClass::Quote;
    return CharClass::Punct;
  }
  if (cp == 0xAB || cp == 0xBB || cp == 0x2039 || cp == 0x203A) return CharClass::Quote;
  // Latin-1 symbols, general punctuation, arrows/math/dingbats, CJK and
  // full-width punctuation.
  if ((cp >= 0xA0 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 || (cp >= 0x2000 && cp <= 0x206F) ||
      (cp >= 0x20A0 && cp <= 0x20CF) || (cp >= 0x2100 && cp <= 0x2BFF) ||
      (cp >= 0x3000 && cp <= 0x303F) || (cp >= 0xFE30 && cp <= 0xFE4F) ||
      (cp >= 0xFF00 && cp <= 0xFF0F)) {
    return CharClass::Punct;
  }
  return CharClass::Alnum;
}

// Codepoint at pos; input is already validated so malformed bytes are
// treated as single opaque letters.
text::CodePoint at(std::string_view s, std::size_t pos) {
  if (auto cp = text::decode_utf8(s, pos)) return *cp;
  return {static_cast<unsigned char>(s[pos]), 1};
}

bool alnum_at(std::string_view s, std::size_t pos) {
  return pos < s.size() && classify(at(s, pos).value) == CharClass::Alnum;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Number: return "number";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::QuoteMark: return "quote-mark";
  }
  return "punctuation";
}

std::size_t SentenceSpan::word_count() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word(); }));
}

std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t pos = 0;
  while (pos < raw.size()) {
    auto cp = text::decode_utf8(raw, pos);
    if (!cp) throw IngestError("invalid UTF-8 at byte " + std::to_string(pos));
    switch (cp->value) {
      case 0x2018: case 0x2019: case 0x201A: case 0x201B:
        out.push_back('\'');
        break;
      case 0x201C: case 0x201D: case 0x201E: case 0x201F:
        out.push_back('"');
        break;
      case '\r':
        if (pos + 1 < raw.size() && raw[pos + 1] == '\n') break;  // CRLF -> LF
        out.push_back('\r');
        break;
      default:
        out.append(raw.substr(pos, cp->length));
    }
    pos += cp->length;
  }
  return out;
}

std::vector<ParagraphSpan> split_paragraphs(std::string_view text) {
  std::vector<ParagraphSpan> out;
  std::optional<std::size_t> open;  // start of the paragraph being built
  std::size_t last_content = 0;     // one past the last non-whitespace byte
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    std::string_view trimmed = text::trim(line);
    if (trimmed.empty()) {
      if (open) {
        out.push_back({out.size(), *open, last_content});
        open.reset();
      }
    } else {
      const std::size_t first = pos + static_cast<std::size_t>(trimmed.data() - line.data());
      if (!open) open = first;
      last_content = first + trimmed.size();
    }
    pos = nl + 1;
  }
  if (open) out.push_back({out.size(), *open, last_content});
  return out;
}

std::vector<Token> tokenize(std::string_view s, std::size_t base) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto cp = at(s, i);
    const CharClass cls = classify(cp.value);
    if (cls == CharClass::Space) {
      i += cp.length;
      continue;
    }
    Token tok;
    tok.start = base + i;
    if (cls == CharClass::Alnum) {
      std::size_t j = i;
      bool numeric = true;
      while (j < s.size()) {
        const auto c = at(s, j);
        if (classify(c.value) == CharClass::Alnum) {
          if (!(c.value < 0x80 && text::is_digit(static_cast<char>(c.value)))) numeric = false;
          j += c.length;
        } else if ((s[j] == '\'' || s[j] == '-') && alnum_at(s, j + 1)) {
          numeric = false;
          j += 1;
        } else if (numeric && (s[j] == '.' || s[j] == ',') && j + 1 < s.size() &&
                   text::is_digit(s[j + 1])) {
          j += 1;  // 3.5, 1,000
        } else {
          break;
        }
      }
      tok.surface = std::string(s.substr(i, j - i));
      tok.kind = numeric ? TokenKind::Number : TokenKind::Word;
      i = j;
    } else {
      tok.surface = std::string(s.substr(i, cp.length));
      tok.kind = cls == CharClass::Quote ? TokenKind::QuoteMark : TokenKind::Punctuation;
      i += cp.length;
    }
    tok.end = base + i;
    tok.lower = text::to_lower(tok.surface);
    tok.syllables = tok.kind == TokenKind::Word ? count_syllables(tok.lower) : 0;
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

int count_syllables(std::string_view word) {
  std::string w;
  for (char c : word) {
    if (text::is_alpha(c)) w.push_back(text::is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
  }
  if (w.empty()) return 1;

  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = w.size();
  // Silent final e: "make", "the". Never drop the last syllable.
  if (n >= 2 && w[n - 1] == 'e' && !is_vowel(w[n - 2]) && groups > 1) --groups;
  // "-le" after a consonant is its own syllable: "table", "little".
  if (n >= 3 && w[n - 1] == 'e' && w[n - 2] == 'l' && !is_vowel(w[n - 3])) ++groups;
  return std::max(groups, 1);
}

SentenceSegmenter::SentenceSegmenter() {
  static const SentenceSegmenter bundled_segmenter = from_list(bundled("abbreviations.txt"));
  *this = bundled_segmenter;
}

SentenceSegmenter::SentenceSegmenter(WordSet abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

SentenceSegmenter SentenceSegmenter::from_list(std::string_view list) {
  SentenceSegmenter s{WordSet{}};
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t nl = list.find('\n', pos);
    if (nl == std::string_view::npos) nl = list.size();
    const std::string_view line = text::trim(list.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    (text::is_upper(line.front()) ? s.capitalized_ : s.abbreviations_).insert(text::to_lower(line));
  }
  return s;
}

bool SentenceSegmenter::is_abbreviation(std::string_view p, std::size_t period) const {
  std::size_t ws = period;
  while (ws > 0 && !text::is_space(p[ws - 1])) --ws;
  std::string_view word = p.substr(ws, period + 1 - ws);
  while (!word.empty() && (word.front() == '"' || word.front() == '\'' || word.front() == '(' ||
                           word.front() == '[')) {
    word.remove_prefix(1);
  }
  if (word.size() == 2 && text::is_upper(word[0])) return true;  // initial: "J."
  const std::string lower = text::to_lower(word);
  if (abbreviations_.contains(lower)) return true;
  return !word.empty() && text::is_upper(word.front()) && capitalized_.contains(lower);
}

std::vector<SentenceSpan> SentenceSegmenter::segment(std::string_view p, std::size_t base) const {
  std::vector<SentenceSpan> out;
  std::size_t start = 0;
  while (start < p.size() && text::is_space(p[start])) ++start;
  if (start == p.size()) return out;

  auto emit = [&](std::size_t from, std::size_t to) {
    SentenceSpan span;
    span.start = base + from;
    span.end = base + to;
    span.tokens = tokenize(p.substr(from, to - from), base + from);
    out.push_back(std::move(span));
  };

  bool in_quote = false;
  std::size_t i = start;
  while (i < p.size()) {
    const char c = p[i];
    if (c == '"') {
      in_quote = !in_quote;
      ++i;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < p.size() && is_terminator(p[j])) ++j;
    while (j < p.size() && is_closer(p[j])) {
      if (p[j] == '"') in_quote = !in_quote;
      ++j;
    }
    if (j < p.size() && text::is_space(p[j])) {
      std::size_t k = j;
      while (k < p.size() && text::is_space(p[k])) ++k;
      const bool opens = k < p.size() && (text::is_upper(p[k]) || p[k] == '"' || p[k] == '\'');
      if (opens && !in_quote && !(c == '.' && is_abbreviation(p, i))) {
        emit(start, j);
        start = k;
      }
    }
    i = j;
  }

  std::size_t end = p.size();
  while (end > start && text::is_space(p[end - 1])) --end;
  if (end > start) emit(start, end);
  return out;
}

Document ingest(std::string_view raw, std::optional<std::string> title,
                const SentenceSegmenter& segmenter) {
  Document doc;
  doc.text = normalize_text(raw);
  doc.id = text::sha256_hex(doc.text);
  doc.title = std::move(title);
  doc.paragraphs = split_paragraphs(doc.text);

  const std::string_view full(doc.text);
  for (const auto& para : doc.paragraphs) {
    auto spans = segmenter.segment(full.substr(para.start, para.end - para.start), para.start);
    for (auto& s : spans) {
      s.index = doc.sentences.size();
      s.paragraph = para.index;
      for (const auto& t : s.tokens) {
        if (t.is_word()) {
          ++doc.word_count;
          doc.syllable_count += static_cast<std::size_t>(t.syllables);
        }
      }
      doc.sentences.push_back(std::move(s));
    }
  }
  return doc;
}

}  // namespace sirenless
