#include <fstream>
#include <set>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "oracles.hpp"
#include "sirenless/analysis.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/server.hpp"
#include "sirenless/store.hpp"

using namespace sirenless;
using nlohmann::json;

namespace {

const Analyzer& analyzer() {
  static const Analyzer a;
  return a;
}

std::string article() { return read_file(oracle::fixture("article/river_dam.txt")); }
const std::string kTitle = "Valley towns split over plan to raise the Harlow Dam";

// A Service on an ephemeral port, torn down with the object.
struct Running {
  AnalysisStore store;
  Service service;
  int port;
  std::thread thread;

  explicit Running(const std::filesystem::path& dir, ServerOptions o = {})
      : store(dir), service(analyzer(), store, [&] { o.port = 0; return o; }()), port(service.bind()),
        thread([this] { service.run(); }) {
    service.wait_until_ready();
  }
  ~Running() {
    service.stop();
    thread.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(30);
    return c;
  }
};

std::string error_code(const httplib::Result& r) { return json::parse(r->body)["error"]["code"]; }

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("empty text is rejected") {
    CHECK_THROWS_AS(analyzer().analyze(""), AnalyzeError);
    CHECK_THROWS_AS(analyzer().analyze(" \n\t \r\n"), AnalyzeError);
    CHECK_THROWS_AS(analyzer().analyze("... !!! 42"), AnalyzeError);
    CHECK_THROWS_AS(analyzer().analyze("bad \xFF"), IngestError);
  }

  TEST_CASE("missing resources") {
    AnalysisConfig c;
    c.lexicon = "/nonexistent/lexicon.tsv";
    CHECK_THROWS_AS(Analyzer{c}, IoError);
    AnalysisConfig m;
    m.model = "/nonexistent/model.json";
    CHECK_THROWS_AS(Analyzer{m}, IoError);
  }

  TEST_CASE("fixture article matches the committed expectation") {
    const auto got = dump_analysis(to_json(analyzer().analyze(article(), kTitle)));
    CHECK(got == read_file(oracle::fixture("article/river_dam.expected.json")));
  }

  TEST_CASE("result invariants") {
    const auto r = analyzer().analyze(article(), kTitle);
    const auto j = to_json(r);
    CHECK(validate_analysis_json(j).empty());
    const std::size_t n = r.document.sentences.size();
    CHECK(r.sentiments.size() == n);
    CHECK(r.labels.size() == n);
    CHECK(r.histogram.total() == n);
    std::size_t radar = 0;
    for (auto c : r.radar.sentiment_axes) radar += c;
    CHECK(radar == n);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["config"]["seed"] == 0);
    CHECK(j["config"]["topics"] == 3);
    double sum = 0;
    for (const auto& s : r.sentiments) sum += s.polarity;
    CHECK(std::abs(r.metrics.article_polarity - sum / static_cast<double>(n)) < 1e-12);
  }

  TEST_CASE("seed and options change the id") {
    RunOptions run;
    const auto a = analyzer().analyze("The mill closed. Workers left the valley.", std::nullopt, run);
    run.seed = 1;
    const auto b = analyzer().analyze("The mill closed. Workers left the valley.", std::nullopt, run);
    CHECK(a.analysis_id != b.analysis_id);
    CHECK(a.document.id == b.document.id);
    const auto c = analyzer().analyze("The mill closed. Workers left the valley.", std::string("T"), run);
    CHECK(c.analysis_id != b.analysis_id);
  }

  TEST_CASE("text without content stems has no topic model") {
    const auto r = analyzer().analyze("It was. They are.");
    CHECK_FALSE(r.topic_model);
    CHECK(r.topics.empty());
    CHECK(validate_analysis_json(to_json(r)).empty());
    CHECK(to_json(r)["topic_model"].is_null());
  }

  TEST_CASE("validator catches inconsistent results") {
    const auto good = to_json(analyzer().analyze(article(), kTitle));
    auto bad = good;
    bad["summary"]["sentiment"]["level"] = "Emotional";
    CHECK_FALSE(validate_analysis_json(bad).empty());
    bad = good;
    bad["sentences"][0]["markers"].push_back({{"kind", "character"}, {"ref", 99}, {"stack_position", 9}});
    CHECK_FALSE(validate_analysis_json(bad).empty());
    bad = good;
    bad["stats"]["histogram"]["narration"] = 0;
    CHECK_FALSE(validate_analysis_json(bad).empty());
    bad = good;
    bad["sentences"][3]["extreme"] = !bad["sentences"][3]["extreme"].get<bool>();
    CHECK_FALSE(validate_analysis_json(bad).empty());
    bad = good;
    bad.erase("config");
    CHECK_FALSE(validate_analysis_json(bad).empty());
    CHECK_FALSE(validate_analysis_json(json::array()).empty());
  }

  TEST_CASE("run options from JSON") {
    RunOptions r;
    r.merge_json({{"seed", 9}, {"topics", 2}});
    CHECK(r.seed == 9);
    CHECK(r.topics == 2);
    CHECK(r.iterations == 500);
    CHECK_THROWS_AS(r.merge_json({{"topics", 0}}), ConfigError);
    CHECK_THROWS_AS(r.merge_json({{"topics", "3"}}), ConfigError);
    CHECK_THROWS_AS(r.merge_json({{"lexicon", "/etc/passwd"}}), ConfigError);
    CHECK_THROWS_AS(r.merge_json(json::array()), ConfigError);
  }
}

TEST_SUITE("store") {
  TEST_CASE("round trip, overwrite and reload") {
    const auto dir = oracle::scratch_dir("store");
    const auto j = to_json(analyzer().analyze("The mill closed. Workers left the valley.", std::string("Mill")));
    std::string id;
    std::string created;
    {
      AnalysisStore store(dir);
      id = store.put(j);
      CHECK(id == j["analysis_id"]);
      CHECK(store.get(id) == dump_analysis(j));
      REQUIRE(store.list().size() == 1);
      created = store.list()[0].created;
      CHECK(store.list()[0].title == std::optional<std::string>("Mill"));
      CHECK(store.put(j) == id);
      CHECK(store.list().size() == 1);
      CHECK(store.list()[0].created == created);
    }
    AnalysisStore reopened(dir);
    REQUIRE(reopened.list().size() == 1);
    CHECK(reopened.list()[0].created == created);
    CHECK(reopened.get(id) == dump_analysis(j));
    CHECK_FALSE(reopened.get(std::string(64, 'a')));
    CHECK_FALSE(reopened.get("../index"));
    CHECK_FALSE(AnalysisStore::valid_id("ABC"));
    CHECK(AnalysisStore::valid_id(id));
    auto broken = j;
    broken["analysis_id"] = "../../etc";
    CHECK_THROWS(reopened.put(broken));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("listing follows creation order") {
    const auto dir = oracle::scratch_dir("order");
    AnalysisStore store(dir);
    std::vector<std::string> ids;
    for (const char* t : {"Zeta lake froze.", "Alpha mill closed.", "Mid river rose."}) {
      ids.push_back(store.put(to_json(analyzer().analyze(t))));
    }
    std::vector<std::string> listed;
    for (const auto& e : store.list()) listed.push_back(e.id);
    CHECK(listed == ids);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("atomic writes leave no temporaries") {
    const auto dir = oracle::scratch_dir("atomic");
    write_file_atomic(dir / "f.txt", "one");
    write_file_atomic(dir / "f.txt", "two");
    CHECK(read_file(dir / "f.txt") == "two");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
  }
}

TEST_SUITE("server") {
  TEST_CASE("post then get returns the stored JSON") {
    const auto dir = oracle::scratch_dir("srv");
    {
      Running srv(dir);
      auto cli = srv.client();
      const auto health = cli.Get("/api/health");
      REQUIRE(health);
      CHECK(health->status == 200);
      CHECK(json::parse(health->body)["status"] == "ok");

      const json body = {{"text", article()}, {"title", kTitle}};
      const auto post = cli.Post("/api/analyze", body.dump(), "application/json");
      REQUIRE(post);
      CHECK(post->status == 201);
      const std::string id = json::parse(post->body)["id"];
      CHECK(post->get_header_value("Location") == "/api/analyses/" + id);

      const auto get = cli.Get("/api/analyses/" + id);
      REQUIRE(get);
      CHECK(get->status == 200);
      CHECK(get->body == read_file(oracle::fixture("article/river_dam.expected.json")));
      CHECK(get->get_header_value("Content-Type") == "application/json");

      const auto list = cli.Get("/api/analyses");
      REQUIRE(list);
      const auto entries = json::parse(list->body)["analyses"];
      REQUIRE(entries.size() == 1);
      CHECK(entries[0]["id"] == id);
      CHECK(entries[0]["title"] == kTitle);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("request errors") {
    const auto dir = oracle::scratch_dir("srv-err");
    {
      ServerOptions o;
      o.max_body = 4096;
      Running srv(dir, o);
      auto cli = srv.client();

      auto r = cli.Get("/api/analyses/" + std::string(64, '0'));
      REQUIRE(r);
      CHECK(r->status == 404);
      CHECK(error_code(r) == "not_found");
      r = cli.Get("/api/nowhere");
      REQUIRE(r);
      CHECK(r->status == 404);

      const std::vector<std::pair<std::string, std::string>> cases = {
          {"{not json", "invalid_json"},
          {"[1, 2]", "invalid_body"},
          {"{}", "missing_text"},
          {R"({"text": 5})", "missing_text"},
          {R"({"text": "Hi there.", "title": 7})", "invalid_title"},
          {R"({"text": "Hi there.", "extra": 1})", "unknown_field"},
          {R"({"text": "Hi there.", "config": {"topics": 0}})", "invalid_config"},
          {R"({"text": "Hi there.", "config": {"lexicon": "/tmp/x"}})", "invalid_config"},
          {R"({"text": "   "})", "empty_text"},
      };
      for (const auto& [body, code] : cases) {
        r = cli.Post("/api/analyze", body, "application/json");
        REQUIRE(r);
        CHECK_MESSAGE(r->status == 400, body);
        CHECK_MESSAGE(error_code(r) == code, body);
      }

      const json big = {{"text", std::string(8000, 'a')}};
      r = cli.Post("/api/analyze", big.dump(), "application/json");
      REQUIRE(r);
      CHECK(r->status == 413);

      const json ok = {{"text", "Short one."}, {"config", {{"seed", 3}, {"topics", 1}}}};
      r = cli.Post("/api/analyze", ok.dump(), "application/json");
      REQUIRE(r);
      CHECK(r->status == 201);
      const auto stored = json::parse(cli.Get("/api/analyses/" + json::parse(r->body)["id"].get<std::string>())->body);
      CHECK(stored["config"]["seed"] == 3);
      CHECK(stored["config"]["topics"] == 1);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("concurrent posts keep the store consistent") {
    const auto dir = oracle::scratch_dir("srv-conc");
    {
      Running srv(dir);
      std::vector<std::string> ids(16);
      std::vector<std::string> failures(16);
      std::vector<std::thread> threads;
      for (int i = 0; i < 16; ++i) {
        threads.emplace_back([&, i] {
          auto cli = srv.client();
          const json body = {{"text", "Report " + std::to_string(i) + " from the valley. The river rose again."},
                             {"config", {{"iterations", 50}}}};
          const auto r = cli.Post("/api/analyze", body.dump(), "application/json");
          if (r && r->status == 201) {
            ids[i] = json::parse(r->body)["id"];
          } else {
            failures[i] = r ? std::to_string(r->status) + " " + r->body : httplib::to_string(r.error());
          }
        });
      }
      for (auto& t : threads) t.join();
      for (const auto& f : failures) CHECK_MESSAGE(f.empty(), f);
      const std::set<std::string> unique(ids.begin(), ids.end());
      CHECK(unique.size() == 16);
      CHECK(unique.count("") == 0);
      auto cli = srv.client();
      CHECK(json::parse(cli.Get("/api/analyses")->body)["analyses"].size() == 16);
      for (const auto& id : ids) {
        const auto r = cli.Get("/api/analyses/" + id);
        REQUIRE(r);
        CHECK(validate_analysis_json(json::parse(r->body)).empty());
      }
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("static assets") {
    const auto dir = oracle::scratch_dir("srv-static");
    std::filesystem::create_directories(dir / "ui");
    std::ofstream(dir / "ui" / "index.html") << "<p>explorer</p>";
    {
      ServerOptions o;
      o.static_dir = dir / "ui";
      Running srv(dir / "data", o);
      auto cli = srv.client();
      const auto r = cli.Get("/index.html");
      REQUIRE(r);
      CHECK(r->status == 200);
      CHECK(r->body == "<p>explorer</p>");
      CHECK(cli.Get("/api/health")->status == 200);
    }
    std::filesystem::remove_all(dir);
  }
}
