#include <cmath>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/resources.hpp"
#include "sirenless/sentiment.hpp"

using namespace sirenless;

namespace {

SentenceSentiment score(const std::string& sentence, const SentimentLexicon& lex) {
  return sentence_sentiment(tokenize(sentence), lex);
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("lexicon rows") {
    const auto lex = parse_lexicon("# comment\ngood\t0.7\t0.6\n\nbad\t-0.7\t0.66\n");
    REQUIRE(lex.size() == 2);
    REQUIRE(lex.lookup("good") != nullptr);
    CHECK(lex.lookup("good")->polarity == 0.7);
    CHECK(lex.lookup("good")->subjectivity == 0.6);
    CHECK(parse_lexicon("").size() == 0);

    const auto dup = parse_lexicon("good\t0.7\t0.6\ngood\t0.2\t0.1\n");
    CHECK(dup.duplicate_count == 1);
    CHECK(dup.lookup("good")->polarity == 0.2);
  }

  TEST_CASE("lexicon errors carry the line number") {
    try {
      parse_lexicon("fine\t0.1\t0.1\ngood\t1.5\t0.6\n", "lex.tsv");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("lex.tsv:2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_lexicon("good\t0.7\n"), ParseError);
    CHECK_THROWS_AS(parse_lexicon("good\t0.7\t1.2\n"), ParseError);
    CHECK_THROWS_AS(parse_lexicon("good\tabc\t0.2\n"), ParseError);
    CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.tsv"), IoError);
  }

  TEST_CASE("load_lexicon from disk") {
    const auto dir = oracle::scratch_dir("lex");
    std::ofstream(dir / "l.tsv") << "calm\t0.1\t0.2\n";
    const auto lex = load_lexicon(dir / "l.tsv");
    CHECK(lex.size() == 1);
    CHECK_FALSE(lex.digest.empty());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("sentence sentiment examples") {
    const auto lex = parse_lexicon("good\t0.7\t0.6\n");
    const auto a = score("This is good", lex);
    CHECK(a.polarity == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(a.subjectivity == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(score("This is not good", lex).polarity == doctest::Approx(-0.35).epsilon(1e-12));
    const auto none = score("The report arrived", lex);
    CHECK(none.polarity == 0.0);
    CHECK(none.subjectivity == 0.0);
    CHECK_FALSE(none.extreme);
    // The window is two word tokens; a third word back is out of reach.
    CHECK(score("not really good", lex).polarity < 0);
    CHECK(score("not so very good", lex).polarity > 0);
    // Light suffix fallback.
    CHECK(score("goods", lex).polarity == doctest::Approx(0.7));
  }

  TEST_CASE("extreme flag follows the 0.5 threshold") {
    const auto lex = parse_lexicon("half\t0.5\t0.5\nmore\t0.5000001\t0.5\nless\t-0.5000001\t0.5\nneg\t-0.5\t0.5\n");
    CHECK_FALSE(score("half", lex).extreme);
    CHECK_FALSE(score("neg", lex).extreme);
    CHECK(score("more", lex).extreme);
    CHECK(score("less", lex).extreme);
  }

  TEST_CASE("bundled lexicon is large and in range") {
    const auto& lex = default_lexicon();
    CHECK(lex.size() >= 2000);
    for (const auto& [w, e] : lex.entries()) {
      REQUIRE(e.polarity >= -1.0);
      REQUIRE(e.polarity <= 1.0);
      REQUIRE(e.subjectivity >= 0.0);
      REQUIRE(e.subjectivity <= 1.0);
      REQUIRE_FALSE(lex.is_negator(w));
    }
    for (const auto& [w, m] : lex.intensifiers()) {
      REQUIRE_FALSE(lex.is_negator(w));
      REQUIRE(m > 0.0);
      REQUIRE(m <= 2.0);
    }
  }

  TEST_CASE("negation flips the sign of single-match sentences") {
    const auto& lex = default_lexicon();
    int checked = 0;
    for (const auto& [w, e] : lex.entries()) {
      if (e.polarity == 0.0 || lex.intensifier(w) > 0.0) continue;
      if (w.find_first_not_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos) continue;
      const auto plain = score("it was " + w, lex);
      const auto negated = score("it was not " + w, lex);
      if (plain.polarity == 0.0) continue;
      REQUIRE_MESSAGE(plain.polarity * negated.polarity < 0, w);
      CHECK(negated.polarity == doctest::Approx(-0.5 * plain.polarity).epsilon(1e-12));
      ++checked;
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("randomized sentiment agrees with a direct evaluation of the rule") {
    std::mt19937_64 rng(99);
    const auto& negators = bundled_word_list("negators.txt");
    const std::vector<std::string> negs(negators.begin(), negators.end());
    std::uniform_real_distribution<double> pol(-1.0, 1.0);
    std::uniform_real_distribution<double> subj(0.0, 1.0);
    for (int iter = 0; iter < 10000; ++iter) {
      // Fresh lexicon of made-up words; none ends in a fallback suffix.
      std::unordered_map<std::string, LexiconEntry> entries;
      std::vector<std::string> words;
      const int size = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < size; ++i) {
        const std::string w = "lw" + std::string(1, static_cast<char>('a' + i));
        const double p = rng() % 5 == 0 ? (rng() % 2 ? 1.0 : -1.0) : pol(rng);
        entries[w] = {p, subj(rng)};
        words.push_back(w);
      }
      std::map<std::string, double, std::less<>> intens = {{"zvery", 1.0 + subj(rng)}, {"zbit", 0.5}};
      const SentimentLexicon lex(entries, negators, intens);

      std::vector<std::string> sentence;
      const int len = static_cast<int>(rng() % 12);
      for (int i = 0; i < len; ++i) {
        switch (rng() % 5) {
          case 0: sentence.push_back(negs[rng() % negs.size()]); break;
          case 1: sentence.push_back(rng() % 2 ? "zvery" : "zbit"); break;
          case 2: sentence.push_back("filler"); break;
          default: sentence.push_back(words[rng() % words.size()]);
        }
      }
      std::string text;
      for (const auto& w : sentence) text += w + " ";

      double psum = 0, ssum = 0;
      int hits = 0;
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        auto it = entries.find(sentence[i]);
        if (it == entries.end()) continue;
        double p = it->second.polarity;
        const bool negated = (i >= 1 && negators.contains(sentence[i - 1])) || (i >= 2 && negators.contains(sentence[i - 2]));
        if (negated) p *= -0.5;
        if (i >= 1 && intens.count(sentence[i - 1])) p *= intens[sentence[i - 1]];
        psum += p;
        ssum += it->second.subjectivity;
        ++hits;
      }
      const double want_p = hits ? std::clamp(psum / hits, -1.0, 1.0) : 0.0;
      const double want_s = hits ? ssum / hits : 0.0;

      const auto got = score(text, lex);
      REQUIRE(got.polarity >= -1.0);
      REQUIRE(got.polarity <= 1.0);
      REQUIRE(got.subjectivity >= 0.0);
      REQUIRE(got.subjectivity <= 1.0);
      REQUIRE(got.extreme == (std::fabs(got.polarity) > 0.5));
      REQUIRE_MESSAGE(std::fabs(got.polarity - want_p) < 1e-12, text);
      REQUIRE_MESSAGE(std::fabs(got.subjectivity - want_s) < 1e-12, text);
    }
  }

  TEST_CASE("lexicon rejects a word that is both negator and intensifier") {
    CHECK_THROWS_AS(SentimentLexicon({}, WordSet{"not"}, {{"not", 1.5}}), ConfigError);
  }

  TEST_CASE("Flesch formula") {
    CHECK(std::fabs(flesch_raw(6, 1, 6) - 116.145) < 1e-9);
    CHECK(flesch_reading_ease(6, 1, 6) == 100.0);
    CHECK(std::fabs(flesch_reading_ease(100, 5, 150) - 59.635) < 1e-9);
    CHECK(flesch_reading_ease(10, 1, 40) == 0.0);
    CHECK_THROWS_AS(flesch_reading_ease(1, 0, 1), MetricError);
    CHECK_THROWS_AS(flesch_reading_ease(0, 1, 0), MetricError);
    for (std::size_t sy = 10; sy < 200; ++sy) REQUIRE(flesch_raw(50, 3, sy + 1) < flesch_raw(50, 3, sy));
  }

  TEST_CASE("article aggregates are plain means") {
    const Document doc = ingest("One. Two. Three.");
    const std::vector<SentenceSentiment> s = {{0.3, 0.1, false}, {-0.9, 0.5, true}, {0.0, 0.0, false}};
    const auto m = article_metrics(doc, s);
    CHECK(std::fabs(m.article_polarity - (0.3 - 0.9 + 0.0) / 3) < 1e-12);
    CHECK(std::fabs(m.article_subjectivity - 0.2) < 1e-12);
    CHECK(m.flesch_score >= 0.0);
    CHECK(m.flesch_score <= 100.0);
  }
}
