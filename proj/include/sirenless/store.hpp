#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sirenless {

/// One JSON file per analysis under `<root>/analyses/`, plus `<root>/index.json`
/// listing id, title and creation time. Files are written to a temporary name
/// and renamed into place; the index is rewritten under a mutex.
class AnalysisStore {
 public:
  struct Entry {
    std::string id;
    std::optional<std::string> title;
    std::string created;  // ISO-8601 UTC
    std::uint64_t sequence = 0;
  };

  /// Creates the directory if needed and loads an existing index. Throws
  /// IoError if the directory cannot be created or the index is unreadable.
  explicit AnalysisStore(std::filesystem::path root);

  /// Stores `analysis` under its analysis_id and returns the id. Storing the
  /// same id again overwrites the file and keeps the original creation time.
  std::string put(const nlohmann::json& analysis);

  /// The stored bytes, verbatim. Empty for unknown or malformed ids.
  std::optional<std::string> get(const std::string& id) const;

  /// Entries sorted by creation order.
  std::vector<Entry> list() const;

  const std::filesystem::path& root() const { return root_; }

  /// 64 lowercase hex digits.
  static bool valid_id(const std::string& id);

 private:
  std::filesystem::path file_for(const std::string& id) const;
  void write_index_locked() const;

  std::filesystem::path root_;
  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
  std::uint64_t next_sequence_ = 0;
};

/// Writes `content` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sirenless
