// sirenless command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 runtime error.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <pthread.h>
#include <thread>

#include "CLI11.hpp"
#include "sirenless/analysis.hpp"
#include "sirenless/discourse.hpp"
#include "sirenless/errors.hpp"
#include "sirenless/server.hpp"
#include "sirenless/store.hpp"

namespace fs = std::filesystem;
using namespace sirenless;

namespace {

struct ResourceFlags {
  std::string lexicon;
  std::string model;
  std::string thresholds;

  void add(CLI::App* cmd) {
    cmd->add_option("--lexicon", lexicon, "Sentiment lexicon TSV (default: bundled)")->check(CLI::ExistingFile);
    cmd->add_option("--model", model, "Trained discourse model JSON (default: rule baseline)")->check(CLI::ExistingFile);
    cmd->add_option("--thresholds", thresholds, "Pattern threshold JSON (default: built-in)")->check(CLI::ExistingFile);
  }

  AnalysisConfig config() const {
    AnalysisConfig c;
    if (!lexicon.empty()) c.lexicon = lexicon;
    if (!model.empty()) c.model = model;
    if (!thresholds.empty()) c.thresholds = thresholds;
    return c;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
}

std::string render_summary(const AnalysisResult& r) {
  char line[256];
  std::string out;
  if (r.document.title) out += *r.document.title + "\n";
  std::snprintf(line, sizeof line, "%zu words, %zu sentences, %zu paragraphs\n\n", r.document.word_count,
                r.document.sentences.size(), r.document.paragraphs.size());
  out += line;
  const auto& s = r.summary;
  std::snprintf(line, sizeof line, "Writing style  %-10s %.3f\n", std::string(to_string(s.writing_style.level)).c_str(),
                s.writing_style.grade);
  out += line;
  std::snprintf(line, sizeof line, "Sentiment      %-10s %.3f\n", std::string(to_string(s.sentiment.level)).c_str(),
                s.sentiment.grade);
  out += line;
  std::snprintf(line, sizeof line, "Readability    %-10s %.1f\n", std::string(to_string(s.readability.level)).c_str(),
                s.readability.grade);
  out += line;
  std::snprintf(line, sizeof line, "Reliability    %-10s %.1f\n", std::string(to_string(s.reliability.level)).c_str(),
                s.reliability.grade);
  out += line;

  out += "\nFindings:";
  if (r.patterns.findings.empty()) return out + " none\n";
  out += "\n";
  for (const auto& f : r.patterns.findings) {
    out += "  [" + std::string(to_string(f.severity)) + "] " + std::string(to_string(f.kind)) + ": " + f.detail;
    if (!f.sentences.empty()) {
      out += " (sentences";
      for (std::size_t i = 0; i < f.sentences.size(); ++i) out += (i ? ", " : " ") + std::to_string(f.sentences[i]);
      out += ")";
    }
    out += "\n";
  }
  return out;
}

fs::path data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SIRENLESS_DATA"); env && *env) return env;
  return "sirenless-data";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"News-article discourse, sentiment and pattern analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sirenless 0.3.0");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze one article");
  std::string in_path;
  std::string format = "json";
  std::string out_path;
  std::string title;
  RunOptions run;
  ResourceFlags analyze_res;
  analyze->add_option("file", in_path, "Article text file, or - for stdin")->required();
  analyze->add_option("--format", format, "json or summary")->check(CLI::IsMember({"json", "summary"}));
  analyze->add_option("--seed", run.seed, "LDA seed");
  analyze->add_option("--topics", run.topics, "Number of topics")->check(CLI::Range(1, 50));
  analyze->add_option("--iterations", run.iterations, "Gibbs sweeps")->check(CLI::Range(1, 5000));
  analyze->add_option("--keywords", run.keywords_per_topic, "Keywords per topic")->check(CLI::Range(1, 100));
  analyze->add_option("--title", title, "Article title");
  analyze->add_option("--out", out_path, "Write output here instead of stdout");
  analyze_res.add(analyze);

  // train-discourse
  auto* train_cmd = app.add_subcommand("train-discourse", "Train the discourse classifier");
  std::string corpus_path;
  std::string model_out;
  TrainOptions train_opts;
  train_cmd->add_option("corpus", corpus_path, "Labeled JSONL corpus")->required();
  train_cmd->add_option("--out", model_out, "Model output path")->required();
  train_cmd->add_option("--seed", train_opts.seed, "Shuffle seed");
  train_cmd->add_option("--epochs", train_opts.epochs, "Training epochs")->check(CLI::Range(1, 1000));

  // eval-discourse
  auto* eval_cmd = app.add_subcommand("eval-discourse", "Per-class F1 of a model on a labeled corpus");
  std::string eval_model;
  std::string eval_corpus;
  eval_cmd->add_option("model", eval_model, "Model JSON, or 'rules' for the rule baseline")->required();
  eval_cmd->add_option("corpus", eval_corpus, "Labeled JSONL corpus")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  ServerOptions server_opts;
  std::string data_flag;
  std::string static_dir;
  ResourceFlags serve_res;
  serve->add_option("--port", server_opts.port, "TCP port (0 picks one)")->check(CLI::Range(0, 65535));
  serve->add_option("--bind", server_opts.bind, "Bind address");
  serve->add_option("--data", data_flag, "Store directory (default: $SIRENLESS_DATA or ./sirenless-data)");
  serve->add_option("--static", static_dir, "Directory of UI assets to serve")->check(CLI::ExistingDirectory);
  serve->add_option("--max-body", server_opts.max_body, "Request body limit in bytes");
  serve_res.add(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      const Analyzer analyzer(analyze_res.config());
      const auto result = analyzer.analyze(read_input(in_path), title.empty() ? std::nullopt : std::optional(title), run);
      write_output(out_path, format == "json" ? dump_analysis(to_json(result)) : render_summary(result));
    } else if (*train_cmd) {
      const auto corpus = load_corpus(corpus_path);
      const auto model = train(corpus, train_opts);
      save_model(model, model_out);
      std::cerr << "trained on " << model.metadata.examples << " sentences, " << train_opts.epochs
                << " epochs, corpus " << model.metadata.corpus_hash.substr(0, 12) << "\n";
    } else if (*eval_cmd) {
      const auto corpus = load_corpus(eval_corpus);
      std::optional<DiscourseModel> model;
      if (eval_model != "rules") model = load_model(eval_model);
      const auto labels = label_corpus(corpus, model ? &*model : nullptr);
      std::vector<DiscourseMode> gold;
      std::vector<DiscourseMode> predicted;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        gold.push_back(corpus[i].mode);
        predicted.push_back(labels[i].mode);
      }
      const auto report = evaluate_predictions(gold, predicted);
      std::printf("%-12s %9s %9s %9s %8s\n", "mode", "precision", "recall", "f1", "support");
      for (auto m : kAllModes) {
        const auto& c = report.per_class[index_of(m)];
        std::printf("%-12s %9.3f %9.3f %9.3f %8zu\n", std::string(to_string(m)).c_str(), c.precision, c.recall,
                    c.f1, c.support);
      }
      std::printf("macro-F1 %.3f  accuracy %.3f  n=%zu\n", report.macro_f1, report.accuracy, report.total);
    } else if (*serve) {
      if (!static_dir.empty()) server_opts.static_dir = static_dir;
      const Analyzer analyzer(serve_res.config());
      AnalysisStore store(data_dir(data_flag));

      // Handle SIGINT/SIGTERM on a dedicated thread so the server can stop cleanly.
      sigset_t signals;
      sigemptyset(&signals);
      sigaddset(&signals, SIGINT);
      sigaddset(&signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &signals, nullptr);

      Service service(analyzer, store, server_opts);
      const int port = service.bind();
      std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        service.stop();
      });
      waiter.detach();
      std::cerr << "listening on http://" << server_opts.bind << ":" << port << " (store " << store.root().string()
                << ")\n";
      service.run();
    }
  } catch (const std::exception& e) {
    std::cerr << "sirenless: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
