#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sirenless/analysis.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/topics.hpp"

namespace py = pybind11;
using namespace sirenless;

namespace {

AnalysisConfig make_config(std::optional<std::string> lexicon, std::optional<std::string> model,
                           std::optional<std::string> thresholds) {
  AnalysisConfig c;
  if (lexicon) c.lexicon = *lexicon;
  if (model) c.model = *model;
  if (thresholds) c.thresholds = *thresholds;
  return c;
}

std::string analyze_with(const Analyzer& analyzer, const std::string& text, std::optional<std::string> title,
                         std::uint64_t seed, int topics, int iterations, std::size_t keywords) {
  RunOptions run;
  run.seed = seed;
  run.topics = topics;
  run.iterations = iterations;
  run.keywords_per_topic = keywords;
  py::gil_scoped_release release;
  return dump_analysis(to_json(analyzer.analyze(text, std::move(title), run)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the sirenless news-article analyzer";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  auto base = py::register_exception<Error>(m, "SirenlessError", PyExc_RuntimeError);
  py::register_exception<AnalyzeError>(m, "AnalyzeError", base.ptr());
  py::register_exception<IngestError>(m, "IngestError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ModelError>(m, "ModelError", base.ptr());
  py::register_exception<MetricError>(m, "MetricError", base.ptr());

  py::class_<Analyzer>(m, "Analyzer", "Pipeline with its resources loaded once; safe to share across threads.")
      .def(py::init([](std::optional<std::string> lexicon, std::optional<std::string> model,
                       std::optional<std::string> thresholds) {
             return std::make_unique<Analyzer>(make_config(lexicon, model, thresholds));
           }),
           py::arg("lexicon") = py::none(), py::arg("model") = py::none(), py::arg("thresholds") = py::none())
      .def("analyze_json", &analyze_with, py::arg("text"), py::arg("title") = py::none(), py::arg("seed") = 0,
           py::arg("topics") = 3, py::arg("iterations") = 500, py::arg("keywords_per_topic") = 8,
           "Runs the full pipeline and returns the canonical analysis JSON text.");

  m.def(
      "validate_json",
      [](const std::string& text) {
        const auto j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) return std::vector<std::string>{"not valid JSON"};
        return validate_analysis_json(j);
      },
      py::arg("text"), "Cross-field checks on an analysis; returns a list of problems.");

  m.def(
      "sentences",
      [](const std::string& text) {
        const Document doc = ingest(text);
        std::vector<std::string> out;
        for (const auto& s : doc.sentences) out.emplace_back(doc.sentence_text(s));
        return out;
      },
      py::arg("text"));

  m.def(
      "sentiment",
      [](const std::string& sentence) {
        const auto s = sentence_sentiment(tokenize(normalize_text(sentence)), default_lexicon());
        return py::make_tuple(s.polarity, s.subjectivity, s.extreme);
      },
      py::arg("sentence"), "(polarity, subjectivity, extreme) of one sentence with the bundled lexicon.");

  m.def("count_syllables", [](const std::string& word) { return count_syllables(word); }, py::arg("word"));
  m.def("flesch_reading_ease", &flesch_reading_ease, py::arg("words"), py::arg("sentences"), py::arg("syllables"));

  m.def(
      "discourse_modes",
      [](const std::string& text, std::optional<std::string> model_path) {
        std::optional<DiscourseModel> model;
        if (model_path) model = load_model(*model_path);
        std::vector<std::string> out;
        for (const auto& l : label_document(ingest(text), model ? &*model : nullptr)) {
          out.emplace_back(to_string(l.mode));
        }
        return out;
      },
      py::arg("text"), py::arg("model") = py::none());

  m.def(
      "label_corpus",
      [](const std::string& corpus_path, std::optional<std::string> model_path) {
        std::optional<DiscourseModel> model;
        if (model_path) model = load_model(*model_path);
        std::vector<std::string> out;
        for (const auto& l : label_corpus(load_corpus(corpus_path), model ? &*model : nullptr)) {
          out.emplace_back(to_string(l.mode));
        }
        return out;
      },
      py::arg("corpus"), py::arg("model") = py::none(),
      "Greedy labels for every line of a JSONL corpus, in file order.");

  m.def(
      "train_discourse",
      [](const std::string& corpus, const std::string& out, std::uint64_t seed, int epochs) {
        TrainOptions opts;
        opts.seed = seed;
        opts.epochs = epochs;
        save_model(train(load_corpus(corpus), opts), out);
      },
      py::arg("corpus"), py::arg("out"), py::arg("seed") = 0, py::arg("epochs") = 10);
}
