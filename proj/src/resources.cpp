#include "sirenless/resources.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "sirenless/errors.hpp"
#include "sirenless/text.hpp"

namespace sirenless {

std::string_view bundled(std::string_view name) {
  for (const auto& file : detail::bundled_files()) {
    if (file.name == name) return file.content;
  }
  throw IoError("no bundled data file named '" + std::string(name) + "'");
}

WordSet parse_word_list(std::string_view content) {
  WordSet words;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (!line.empty()) words.insert(text::to_lower(line));
  }
  return words;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buf.str();
}

WordSet load_word_list(const std::filesystem::path& path) {
  return parse_word_list(read_file(path));
}

const WordSet& bundled_word_list(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, WordSet, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto [it, _] = cache.emplace(std::string(name), parse_word_list(bundled(name)));
  return it->second;
}

}  // namespace sirenless
