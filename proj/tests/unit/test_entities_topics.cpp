#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "sirenless/entities.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/markers.hpp"
#include "sirenless/resources.hpp"
#include "sirenless/stemmer.hpp"
#include "sirenless/topics.hpp"

using namespace sirenless;

namespace {

std::map<std::string, std::vector<std::string>> by_name(const std::vector<Character>& cs) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& c : cs) out[c.canonical] = c.aliases;
  return out;
}

const WordSet& stopwords() { return bundled_word_list("stopwords.txt"); }

Topic topic(int id, std::vector<std::string> stems) {
  Topic t;
  t.id = id;
  t.weight = 0.5;
  double w = 1.0;
  for (auto& s : stems) t.keywords.emplace_back(std::move(s), w /= 2);
  return t;
}

}  // namespace

TEST_SUITE("entities") {
  TEST_CASE("character examples") {
    const auto a = extract_characters(ingest("President Donald Trump met Xi Jinping. Trump smiled."));
    using V = std::vector<std::string>;
    CHECK(by_name(a) == std::map<std::string, V>{{"Donald Trump", V{"Donald Trump", "Trump"}},
                                                  {"Xi Jinping", V{"Xi Jinping"}}});
    REQUIRE(a.size() == 2);
    CHECK(a[0].canonical == "Donald Trump");
    CHECK(a[0].mention_sentences == std::vector<std::size_t>{0, 1});

    CHECK(extract_characters(ingest("the cat sat on the mat")).empty());

    const auto c = extract_characters(ingest("London called. Mr. Lee replied."));
    REQUIRE(c.size() == 1);
    CHECK(c[0].canonical == "Lee");
  }

  TEST_CASE("honorifics inside a run and possessives") {
    const auto cs = extract_characters(
        ingest("Chinese President Xi Jinping arrived. Officials greeted Xi Jinping. Jinping's aides waited."));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].canonical == "Xi Jinping");
    CHECK(cs[0].mention_sentences == std::vector<std::size_t>{0, 1, 2});

    const auto lyle = extract_characters(ingest("They met Margaret Lyle there. Lyle's house is old."));
    REQUIRE(lyle.size() == 1);
    CHECK(lyle[0].mention_sentences == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("single-word names mentioned once are dropped") {
    CHECK(extract_characters(ingest("The ship left for Lisbon yesterday.")).empty());
    CHECK(extract_characters(ingest("We sailed to Lisbon. Crowds in Lisbon cheered.")).size() == 1);
    // Month and day names never start a character.
    CHECK(extract_characters(ingest("It happened on Monday. Then on Monday again in May.")).empty());
  }

  TEST_CASE("character invariants on the fixture article") {
    const Document doc = ingest(read_file(oracle::fixture("article/river_dam.txt")));
    const auto cs = extract_characters(doc);
    REQUIRE(cs.size() >= 5);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      CHECK(c.id == static_cast<int>(i));
      CHECK(std::is_sorted(c.mention_sentences.begin(), c.mention_sentences.end()));
      CHECK(std::adjacent_find(c.aliases.begin(), c.aliases.end()) == c.aliases.end());
      CHECK(std::find(c.aliases.begin(), c.aliases.end(), c.canonical) != c.aliases.end());
      // Every alias occurs in one of the mention sentences, and every mention sentence has an alias.
      for (const auto& alias : c.aliases) {
        bool seen = false;
        for (auto s : c.mention_sentences) seen = seen || alias_matches(doc.sentences[s].tokens, alias);
        CHECK_MESSAGE(seen, alias);
      }
      for (auto s : c.mention_sentences) {
        bool any = false;
        for (const auto& alias : c.aliases) any = any || alias_matches(doc.sentences[s].tokens, alias);
        CHECK(any);
      }
    }
    const auto names = by_name(cs);
    for (const char* who : {"Helen Marsh", "Daniel Price", "Robert Ellis", "Grace Okoye", "Lyle"}) {
      CHECK_MESSAGE(names.count(who) == 1, who);
    }
  }

  TEST_CASE("alias matching") {
    const auto t = tokenize("Yesterday Helen Marsh's aide spoke.");
    CHECK(alias_matches(t, "Helen Marsh"));
    CHECK(alias_matches(t, "Marsh"));
    CHECK_FALSE(alias_matches(t, "Helen Aide"));
    CHECK_FALSE(alias_matches(t, "helen"));
  }
}

TEST_SUITE("topics") {
  TEST_CASE("stemmer rules") {
    CHECK(stem("protests") == "protest");
    CHECK(stem("protested") == "protest");
    CHECK(stem("protesting") == "protest");
    CHECK(stem("stopped") == "stop");
    CHECK(stem("elections") == "elect");
    CHECK(stem("nations") == "nation");  // too short for -tions
    CHECK(stem("families") == "family");
    CHECK(stem("quickly") == "quick");
    CHECK(stem("bus") == "bus");
    CHECK(stem("red") == "red");
  }

  TEST_CASE("single topic is the smoothed word frequency") {
    const std::vector<std::vector<std::string>> docs = {{"a", "b", "a"}, {"c", "a"}};
    LdaOptions o;
    o.topics = 1;
    o.iterations = 20;
    const auto m = lda_fit(docs, o);
    REQUIRE(m.vocabulary == std::vector<std::string>{"a", "b", "c"});
    for (const auto& row : m.theta) CHECK(row == std::vector<double>{1.0});
    const double beta = o.beta;
    const double denom = 5 + 3 * beta;
    CHECK(std::fabs(m.phi[0][0] - (3 + beta) / denom) < 1e-12);
    CHECK(std::fabs(m.phi[0][1] - (1 + beta) / denom) < 1e-12);
    CHECK(std::fabs(m.phi[0][2] - (1 + beta) / denom) < 1e-12);
  }

  TEST_CASE("determinism and normalization") {
    const auto c = oracle::synthetic_corpus(3, 30, 25, 5);
    LdaOptions o;
    o.seed = 7;
    o.iterations = 100;
    const auto a = lda_fit(c.docs, o);
    const auto b = lda_fit(c.docs, o);
    CHECK(a.phi == b.phi);
    CHECK(a.theta == b.theta);
    for (const auto* rows : {&a.phi, &a.theta}) {
      for (const auto& row : *rows) {
        double sum = 0;
        for (double v : row) {
          CHECK(v >= 0.0);
          sum += v;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-9);
      }
    }
    o.seed = 8;
    CHECK(lda_fit(c.docs, o).phi != a.phi);
    CHECK(a.alpha == doctest::Approx(50.0 / 3));
  }

  TEST_CASE("synthetic recovery") {
    const auto c = oracle::synthetic_corpus(2, 50, 30, 11);
    LdaOptions o;
    o.topics = 2;
    o.iterations = 200;
    const auto m = lda_fit(c.docs, o);
    std::vector<std::vector<std::string>> kw = {top_keywords(m, 0, 5), top_keywords(m, 1, 5)};
    CHECK(oracle::keyword_purity(kw, c.vocabularies) >= 0.8);
  }

  TEST_CASE("lda errors") {
    LdaOptions o;
    CHECK_THROWS_AS(lda_fit({}, o), TopicError);
    CHECK_THROWS_AS(lda_fit({{}, {}}, o), TopicError);
    o.topics = 0;
    CHECK_THROWS_AS(lda_fit({{"a"}}, o), TopicError);
    o.topics = 2;
    o.iterations = 0;
    CHECK_THROWS_AS(lda_fit({{"a"}}, o), TopicError);
  }

  TEST_CASE("top keywords ordering and truncation") {
    TopicModel m;
    m.topics = 2;
    m.vocabulary = {"alpha", "bravo", "charlie", "delta"};
    m.phi = {{0.25, 0.25, 0.25, 0.25}, {0.1, 0.1, 0.7, 0.1}};
    CHECK(top_keywords(m, 0, 2) == std::vector<std::string>{"alpha", "bravo"});
    CHECK(top_keywords(m, 1, 1) == std::vector<std::string>{"charlie"});
    CHECK(top_keywords(m, 1, 10).size() == 4);
    CHECK_THROWS_AS(top_keywords(m, 2, 1), TopicError);
    CHECK_THROWS_AS(top_keywords(m, -1, 1), TopicError);
    CHECK_THROWS_AS(top_keywords(m, 0, 0), TopicError);
  }

  TEST_CASE("topic summaries are sorted") {
    const auto c = oracle::synthetic_corpus(2, 20, 20, 3);
    LdaOptions o;
    o.topics = 2;
    o.iterations = 50;
    const auto topics = summarize_topics(lda_fit(c.docs, o), 6);
    REQUIRE(topics.size() == 2);
    for (const auto& t : topics) {
      CHECK(t.keywords.size() == 6);
      CHECK(t.weight > 0.0);
      for (std::size_t i = 1; i < t.keywords.size(); ++i) CHECK(t.keywords[i - 1].second >= t.keywords[i].second);
    }
  }

  TEST_CASE("paragraph pseudo-documents") {
    const Document doc = ingest("The rivers flooded. Farmers waited.\n\nThe 3 bridges closed.");
    const auto docs = paragraph_documents(doc, stopwords());
    REQUIRE(docs.size() == 2);
    CHECK(docs[0] == std::vector<std::string>{"river", "flood", "farmer", "wait"});
    CHECK(docs[1] == std::vector<std::string>{"bridge", "clos"});
  }
}

TEST_SUITE("markers") {
  TEST_CASE("stacking order") {
    const Document doc = ingest("Helen Marsh and Tom Briggs discussed the dam. Nothing else happened. Tom Briggs left, and Tom Briggs returned.");
    std::vector<Character> cs(2);
    cs[0] = {0, "Helen Marsh", {"Helen Marsh"}, {0}};
    cs[1] = {1, "Tom Briggs", {"Tom Briggs"}, {0, 2}};
    const std::vector<Topic> topics = {topic(0, {"dam"})};
    const auto ms = assign_markers(doc, cs, topics, stopwords());
    const std::vector<Marker> want = {{0, MarkerKind::Character, 0, 0},
                                      {0, MarkerKind::Character, 1, 1},
                                      {0, MarkerKind::Keyword, 0, 2},
                                      {2, MarkerKind::Character, 1, 0}};
    CHECK(ms == want);
  }

  TEST_CASE("topic keywords match stemmed tokens") {
    const Document doc = ingest("Protesters protested. The vote failed.");
    const std::vector<Topic> topics = {topic(1, {"vote"}), topic(0, {"protest"})};
    const auto ms = assign_markers(doc, {}, topics, stopwords());
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].sentence == 0);
    CHECK(ms[0].ref_id == 0);
    CHECK(ms[1].sentence == 1);
    CHECK(ms[1].ref_id == 1);
  }

  TEST_CASE("markers agree with character mentions on the fixture") {
    const Document doc = ingest(read_file(oracle::fixture("article/river_dam.txt")));
    const auto cs = extract_characters(doc);
    const auto ms = assign_markers(doc, cs, {}, stopwords());
    for (const auto& c : cs) {
      std::vector<std::size_t> marked;
      for (const auto& m : ms)
        if (m.kind == MarkerKind::Character && m.ref_id == c.id) marked.push_back(m.sentence);
      CHECK_MESSAGE(marked == c.mention_sentences, c.canonical);
    }
  }

  TEST_CASE("word cloud counts") {
    const auto wc = wordcloud_counts(ingest("protest protests protested"), stopwords());
    REQUIRE(wc.size() == 1);
    CHECK(wc[0] == std::pair<std::string, std::size_t>{"protest", 3});
    CHECK(wordcloud_counts(ingest("the and of it was"), stopwords()).empty());
    const auto ties = wordcloud_counts(ingest("zebra apple mango apple zebra 42"), stopwords());
    using P = std::pair<std::string, std::size_t>;
    CHECK(ties == std::vector<P>{{"apple", 2}, {"zebra", 2}, {"mango", 1}});

    std::string many;
    for (int i = 0; i < 80; ++i) many += "w" + std::string(1, char('a' + i % 26)) + std::string(1, char('a' + i / 26)) + "x ";
    CHECK(wordcloud_counts(ingest(many), stopwords()).size() == 50);
    CHECK(wordcloud_counts(ingest(many), stopwords(), 5).size() == 5);
  }
}
