#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sirenless {

/// Case-folded set of single-entry-per-line words.
using WordSet = std::set<std::string, std::less<>>;

namespace detail {
struct BundledFile {
  std::string_view name;
  std::string_view content;
};
const std::vector<BundledFile>& bundled_files();
}  // namespace detail

/// Contents of a data file compiled into the library (e.g. "stopwords.txt").
/// Throws IoError if no such file was bundled.
std::string_view bundled(std::string_view name);

/// Parses a one-entry-per-line list. Blank lines and '#' comments are skipped;
/// entries are trimmed and lowercased.
WordSet parse_word_list(std::string_view text);

/// Reads and parses a word list from disk.
WordSet load_word_list(const std::filesystem::path& path);

/// Bundled word list by file name, parsed once and cached.
const WordSet& bundled_word_list(std::string_view name);

/// Whole file as a string. Throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace sirenless
