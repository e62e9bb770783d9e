#include "sirenless/store.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "sirenless/analysis.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/resources.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace sirenless {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

}  // namespace

void write_file_atomic(const fs::path& path, const std::string& content) {
  static std::atomic<std::uint64_t> counter{0};
  std::ostringstream name;
  name << "." << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
       << "." << counter++;
  const fs::path tmp = path.parent_path() / name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

bool AnalysisStore::valid_id(const std::string& id) {
  return id.size() == 64 &&
         std::all_of(id.begin(), id.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

AnalysisStore::AnalysisStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_ / "analyses", ec);
  if (ec) throw IoError("cannot create store directory " + root_.string() + ": " + ec.message());

  const fs::path index = root_ / "index.json";
  if (!fs::exists(index)) return;
  const json j = json::parse(read_file(index), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw IoError(index.string() + ": malformed store index");
  }
  for (const auto& e : j["entries"]) {
    Entry entry;
    entry.id = e.value("id", "");
    if (!valid_id(entry.id)) continue;
    if (e.contains("title") && e["title"].is_string()) entry.title = e["title"].get<std::string>();
    entry.created = e.value("created", "");
    entry.sequence = e.value("sequence", std::uint64_t{0});
    next_sequence_ = std::max(next_sequence_, entry.sequence + 1);
    entries_.push_back(std::move(entry));
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& a, const Entry& b) { return a.sequence < b.sequence; });
}

fs::path AnalysisStore::file_for(const std::string& id) const { return root_ / "analyses" / (id + ".json"); }

std::string AnalysisStore::put(const json& analysis) {
  const std::string id = analysis.value("analysis_id", "");
  if (!valid_id(id)) throw IoError("analysis has no valid analysis_id");
  std::optional<std::string> title;
  if (analysis.contains("document") && analysis["document"].contains("title") &&
      analysis["document"]["title"].is_string()) {
    title = analysis["document"]["title"].get<std::string>();
  }

  std::lock_guard lock(mutex_);
  write_file_atomic(file_for(id), dump_analysis(analysis));
  const auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.id == id; });
  if (it == entries_.end()) {
    entries_.push_back({id, title, utc_now(), next_sequence_++});
    write_index_locked();
  }
  return id;
}

std::optional<std::string> AnalysisStore::get(const std::string& id) const {
  if (!valid_id(id)) return std::nullopt;
  std::lock_guard lock(mutex_);
  const fs::path path = file_for(id);
  if (!fs::exists(path)) return std::nullopt;
  return read_file(path);
}

std::vector<AnalysisStore::Entry> AnalysisStore::list() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

void AnalysisStore::write_index_locked() const {
  json entries = json::array();
  for (const auto& e : entries_) {
    entries.push_back({{"id", e.id},
                       {"title", e.title ? json(*e.title) : json(nullptr)},
                       {"created", e.created},
                       {"sequence", e.sequence}});
  }
  write_file_atomic(root_ / "index.json", json{{"entries", entries}}.dump(2) + "\n");
}

}  // namespace sirenless
