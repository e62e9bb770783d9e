#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sirenless::text {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};

/// Decodes one UTF-8 sequence at `pos`. Returns nullopt for malformed input
/// (overlong forms, surrogates and truncated sequences included).
std::optional<CodePoint> decode_utf8(std::string_view s, std::size_t pos);

bool is_valid_utf8(std::string_view s);

/// ASCII whitespace: space, \t, \n, \v, \f, \r.
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha(char c) { return is_upper(c) || is_lower(c); }

/// ASCII lowercase; bytes outside A-Z pass through untouched.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace sirenless::text
