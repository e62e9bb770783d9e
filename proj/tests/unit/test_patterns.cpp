#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/patterns.hpp"

using namespace sirenless;

namespace {

struct Doc {
  std::vector<SentenceSentiment> s;
  std::vector<DiscourseMode> m;
  std::vector<Character> c;
  double subjectivity = 0;
  double flesch = 0;

  Doc& add(double p, DiscourseMode mode = DiscourseMode::Narration, double subj = 0.0) {
    s.push_back({p, subj, std::abs(p) > 0.5});
    m.push_back(mode);
    return *this;
  }
  PatternReport run(const Thresholds& t = {}) const { return detect_patterns({s, m, c, subjectivity, flesch}, t); }
};

}  // namespace

TEST_SUITE("patterns") {
  TEST_CASE("calm article has no findings") {
    Doc d;
    for (int i = 0; i < 6; ++i) d.add(0.0);
    CHECK(d.run().findings.empty());
  }

  TEST_CASE("sentiment dominance") {
    Doc d;
    for (int i = 0; i < 6; ++i) d.add(0.6);
    const auto r = d.run();
    const auto* f = r.find(PatternKind::SentimentDominance);
    REQUIRE(f);
    CHECK(f->severity == Severity::Alert);
    CHECK(f->sentences == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(r.find(PatternKind::SentimentOscillation));

    Doc few;  // four emotional sentences are not enough
    for (int i = 0; i < 4; ++i) few.add(0.6);
    CHECK_FALSE(few.run().find(PatternKind::SentimentDominance));

    Doc neg;  // 3 of 4 negative among 8 emotional is not 75% of either sign
    for (int i = 0; i < 5; ++i) neg.add(-0.4);
    for (int i = 0; i < 3; ++i) neg.add(0.4);
    CHECK_FALSE(neg.run().find(PatternKind::SentimentDominance));
  }

  TEST_CASE("sentiment oscillation") {
    Doc d;
    for (int i = 0; i < 8; ++i) d.add(i % 2 ? -0.5 : 0.5);
    const auto r = d.run();
    const auto* f = r.find(PatternKind::SentimentOscillation);
    REQUIRE(f);
    CHECK(f->severity == Severity::Alert);
    CHECK(f->sentences.size() == 8);

    Doc lopsided;
    for (int i = 0; i < 9; ++i) lopsided.add(0.5);
    lopsided.add(-0.5);
    CHECK_FALSE(lopsided.run().find(PatternKind::SentimentOscillation));
  }

  TEST_CASE("high subjectivity") {
    Doc d;
    d.add(0, DiscourseMode::Narration, 0.5).add(0, DiscourseMode::Narration, 0.1);
    d.subjectivity = 0.3;
    auto r = d.run();
    REQUIRE(r.find(PatternKind::HighSubjectivity));
    CHECK(r.find(PatternKind::HighSubjectivity)->severity == Severity::Warning);
    CHECK(r.find(PatternKind::HighSubjectivity)->sentences == std::vector<std::size_t>{0});
    d.subjectivity = 0.4;
    CHECK(d.run().find(PatternKind::HighSubjectivity)->severity == Severity::Alert);
    d.subjectivity = 0.19;
    CHECK_FALSE(d.run().find(PatternKind::HighSubjectivity));
  }

  TEST_CASE("easy read") {
    Doc d;
    d.add(0);
    d.flesch = 30.5;
    REQUIRE(d.run().find(PatternKind::EasyRead));
    CHECK(d.run().find(PatternKind::EasyRead)->severity == Severity::Info);
    d.flesch = 30.0;
    CHECK_FALSE(d.run().find(PatternKind::EasyRead));
  }

  TEST_CASE("argument heavy") {
    Doc d;
    d.add(0, DiscourseMode::Argument).add(0).add(0).add(0);
    const auto r = d.run();
    REQUIRE(r.find(PatternKind::ArgumentHeavy));
    CHECK(r.find(PatternKind::ArgumentHeavy)->sentences == std::vector<std::size_t>{0});
    d.add(0);
    CHECK_FALSE(d.run().find(PatternKind::ArgumentHeavy));
  }

  TEST_CASE("character sentiment bias") {
    Doc d;
    for (int i = 0; i < 6; ++i) d.add(i < 3 ? 0.4 : -0.4);
    d.c = {{0, "Ann Ray", {"Ann Ray"}, {0, 1, 2}}, {1, "Bo Li", {"Bo Li"}, {3, 4, 5}}, {2, "Cy", {"Cy"}, {0, 3}}};
    auto r = d.run();
    const auto* f = r.find(PatternKind::CharacterSentimentBias);
    REQUIRE(f);
    CHECK(f->severity == Severity::Alert);
    CHECK(f->characters == std::vector<int>{0, 1});
    CHECK(f->sentences == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});

    d.c.resize(1);
    r = d.run();
    REQUIRE(r.find(PatternKind::CharacterSentimentBias));
    CHECK(r.find(PatternKind::CharacterSentimentBias)->severity == Severity::Warning);

    // Mixed mentions average out.
    d.c = {{0, "Ann Ray", {"Ann Ray"}, {0, 3, 4, 1}}};
    std::sort(d.c[0].mention_sentences.begin(), d.c[0].mention_sentences.end());
    CHECK_FALSE(d.run().find(PatternKind::CharacterSentimentBias));
    // Too few mentions.
    d.c = {{0, "Ann Ray", {"Ann Ray"}, {0, 1}}};
    CHECK_FALSE(d.run().find(PatternKind::CharacterSentimentBias));
  }

  TEST_CASE("emotional quotes") {
    Doc d;
    for (int i = 0; i < 5; ++i) d.add(i < 2 ? -0.8 : 0.0, DiscourseMode::Quote);
    const auto r = d.run();
    const auto* f = r.find(PatternKind::EmotionalQuotes);
    REQUIRE(f);
    CHECK(f->sentences == std::vector<std::size_t>{0, 1});

    Doc four;
    for (int i = 0; i < 4; ++i) four.add(-0.8, DiscourseMode::Quote);
    CHECK_FALSE(four.run().find(PatternKind::EmotionalQuotes));

    Doc calm;
    for (int i = 0; i < 6; ++i) calm.add(i == 0 ? 0.9 : 0.5, DiscourseMode::Quote);
    CHECK_FALSE(calm.run().find(PatternKind::EmotionalQuotes));
  }

  TEST_CASE("mismatched inputs are rejected") {
    const std::vector<SentenceSentiment> s(2);
    const std::vector<DiscourseMode> m(3);
    CHECK_THROWS_AS(detect_patterns({s, m, {}, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("engine agrees with the brute-force oracle") {
    std::mt19937_64 rng(424242);
    std::array<int, kPatternKinds> fired{};
    for (int iter = 0; iter < 3000; ++iter) {
      const auto d = oracle::random_doc(rng);
      const auto got = detect_patterns(d.input());
      const auto want = oracle::expected_patterns(d.polarity(), d.subjectivity(), d.modes, d.characters,
                                                  d.article_subjectivity, d.flesch);
      REQUIRE_MESSAGE(oracle::compare_patterns(got, want).empty(), "iteration " << iter << ": "
                                                                   << oracle::compare_patterns(got, want));
      for (const auto& f : got.findings) {
        ++fired[static_cast<std::size_t>(f.kind)];
        for (auto s : f.sentences) REQUIRE(s < d.sentiments.size());
      }
    }
    // The generator must exercise every detector.
    for (std::size_t k = 0; k < kPatternKinds; ++k) CHECK(fired[k] > 20);
  }

  TEST_CASE("dominance survives raising magnitudes of emotional sentences") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 2000; ++iter) {
      auto d = oracle::random_doc(rng);
      if (!detect_patterns(d.input()).find(PatternKind::SentimentDominance)) continue;
      const double bump = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
      for (auto& s : d.sentiments) {
        if (std::abs(s.polarity) < 0.3) continue;
        s.polarity = std::clamp(s.polarity + (s.polarity > 0 ? bump : -bump), -1.0, 1.0);
        s.extreme = std::abs(s.polarity) > 0.5;
      }
      REQUIRE(detect_patterns(d.input()).find(PatternKind::SentimentDominance));
    }
  }

  TEST_CASE("threshold config") {
    const Thresholds t;
    CHECK(thresholds_from_json(thresholds_to_json(t)) == t);
    const auto j = nlohmann::json::parse(R"({"version": 2, "thresholds": {"argument_share": 0.5, "min_quotes": 3}})");
    const auto u = thresholds_from_json(j);
    CHECK(u.version == 2);
    CHECK(u.argument_share == 0.5);
    CHECK(u.min_quotes == 3);
    CHECK(u.emotional_cutoff == t.emotional_cutoff);
    CHECK_THROWS_AS(thresholds_from_json(nlohmann::json::parse(R"({"version": 1, "thresholds": {"nope": 1}})")), ConfigError);
    CHECK_THROWS_AS(thresholds_from_json(nlohmann::json::parse(R"({"version": 1, "thresholds": {"min_quotes": "x"}})")), ConfigError);
    CHECK_THROWS_AS(thresholds_from_json(nlohmann::json::parse(R"({"version": 1, "thresholds": {"min_quotes": -2}})")), ConfigError);

    const auto dir = oracle::scratch_dir("thresholds");
    std::ofstream(dir / "t.json") << j.dump();
    CHECK(load_thresholds(dir / "t.json") == u);
    std::filesystem::remove_all(dir);

    Doc d;
    d.add(0, DiscourseMode::Argument).add(0).add(0).add(0);
    CHECK_FALSE(d.run(u).find(PatternKind::ArgumentHeavy));
  }
}
