// Copyright 2026 The Datesynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "datesynth_cli/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "datesynth/bank.h"
#include "datesynth/corpus.h"
#include "datesynth/evaluation.h"
#include "datesynth/extraction.h"
#include "datesynth/ingestion.h"
#include "datesynth/preprocess.h"
#include "datesynth/records.h"
#include "datesynth/synthesis.h"

namespace datesynth::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void Close(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

CivilDate ParseDate(const std::string& text) {
  const auto d = parse_iso(text);
  if (!d) throw std::invalid_argument("not a valid ISO date: " + text);
  return *d;
}

RegexBank LoadBank(const std::string& spec) {
  if (spec == "community") return builtin_community_bank();
  if (spec == "bespoke") return builtin_bespoke_bank();
  auto in = OpenIn(spec);
  return read_bank(in);
}

// A pages file, or any other file taken as the text of a single page.
std::vector<Page> LoadPages(const std::string& path) {
  auto in = OpenIn(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  const std::string header = HeaderLine(RecordKind::kPages);
  if (content.rfind(header, 0) == 0) {
    std::istringstream records(content);
    return read_pages(records);
  }
  Page page;
  page.document_id = std::filesystem::path(path).filename().string();
  page.page_id = page.document_id;
  page.raw_text = content;
  page.preprocessed_text = preprocess_text(content);
  return {page};
}

std::vector<Detection> ScanPages(const std::vector<Page>& pages,
                                 const CompiledBank& bank, ScanStats* stats) {
  std::vector<Detection> out;
  for (const auto& page : pages) {
    auto dets = scan_page(page, bank, stats);
    out.insert(out.end(), std::make_move_iterator(dets.begin()),
               std::make_move_iterator(dets.end()));
  }
  return out;
}

MatchMode ModeFor(const std::string& flag, Provenance provenance) {
  if (flag == "auto") {
    return provenance == Provenance::kCommunity ? MatchMode::kSpan
                                                : MatchMode::kTimestamp;
  }
  const auto mode = ParseMatchMode(flag);
  if (!mode) throw std::invalid_argument("unknown match mode " + flag);
  return *mode;
}

struct GenArgs {
  std::string from = "1900-01-01";
  std::string to = "2100-12-31";
  std::vector<std::string> families;
  std::string out;
  std::string pages_out;
  std::string annotations_out;
  std::uint64_t seed = 20240501;
  std::size_t per_page = 6;
};

GenerationConfig GenConfigOf(const GenArgs& a) {
  GenerationConfig cfg;
  cfg.start_date = ParseDate(a.from);
  cfg.end_date = ParseDate(a.to);
  if (!a.families.empty()) {
    cfg.families.clear();
    for (const auto& name : a.families) {
      const auto f = ParseFamily(name);
      if (!f) throw std::invalid_argument("unknown family " + name);
      cfg.families.push_back(*f);
    }
  }
  cfg.Validate();
  return cfg;
}

void CmdGenCorpus(const GenArgs& a, std::ostream& out) {
  const GenerationConfig cfg = GenConfigOf(a);
  const bool noise = !a.pages_out.empty() || !a.annotations_out.empty();
  if (noise && (a.pages_out.empty() || a.annotations_out.empty())) {
    throw std::invalid_argument(
        "--pages-out and --annotations-out must be given together");
  }
  auto file = OpenOut(a.out);
  std::size_t count = 0;
  if (!noise) {
    file << HeaderLine(RecordKind::kCorpus) << '\n';
    for_each_example(cfg, [&](const RenderedExample& ex) {
      file << EncodeExample(ex) << '\n';
      ++count;
    });
  } else {
    const Corpus corpus = build_training_corpus(cfg);
    write_corpus(file, corpus);
    count = corpus.size();
    const EvaluationCorpus ev = inject_noise(corpus, a.seed, a.per_page);
    auto pages = OpenOut(a.pages_out);
    write_pages(pages, ev.pages);
    Close(pages, a.pages_out);
    auto anns = OpenOut(a.annotations_out);
    write_annotations(anns, ev.annotations);
    Close(anns, a.annotations_out);
    out << "pages: " << ev.pages.size()
        << "\nannotations: " << ev.annotations.size() << '\n';
  }
  Close(file, a.out);
  out << "examples: " << count << '\n';
}

struct SynthArgs {
  std::string corpus;
  std::string out;
  double lambda = 1.0;
  int max_len = 16;
};

void CmdSynth(const SynthArgs& a, std::ostream& out) {
  CostParams params;
  params.lambda = a.lambda;
  params.max_len = a.max_len;
  params.Validate();
  auto in = OpenIn(a.corpus);
  ClusterAccumulator acc;
  for_each_record(in, RecordKind::kCorpus, [&](std::string_view line, std::size_t) {
    acc.Add(DecodeExample(line));
  });
  if (acc.size() == 0) throw std::invalid_argument("corpus " + a.corpus + " is empty");
  const RegexBank bank = synthesize_bank(std::move(acc).Finish(), params);
  auto file = OpenOut(a.out);
  write_bank(file, bank);
  Close(file, a.out);
  for (const auto& e : bank.entries) {
    out << e.priority << '\t' << e.label << '\t' << e.pattern << '\n';
  }
}

struct ExtractArgs {
  std::string bank;
  std::string input;
  std::string out;
};

void CmdExtract(const ExtractArgs& a, std::ostream& out) {
  const CompiledBank bank(LoadBank(a.bank));
  const std::vector<Page> pages = LoadPages(a.input);
  ScanStats stats;
  const auto dets = ScanPages(pages, bank, &stats);
  auto file = OpenOut(a.out);
  write_detections(file, dets, bank.provenance());
  Close(file, a.out);
  out << "detections: " << dets.size() << "\nrejected: " << stats.rejected
      << '\n';
  if (stats.decomposition_errors > 0) {
    out << "decomposition errors: " << stats.decomposition_errors << '\n';
  }
}

struct EvalArgs {
  std::vector<std::string> detections;
  std::string annotations;
  std::string mode = "timestamp";
  std::string out;
  std::string tsv;
};

void CmdEval(const EvalArgs& a, std::ostream& out) {
  const AnnotationLoad load = load_annotations(a.annotations);
  std::vector<BankResult> rows;
  for (const auto& path : a.detections) {
    auto in = OpenIn(path);
    const DetectionFile file = read_detections(in);
    const MatchMode mode = ModeFor(a.mode, file.provenance);
    rows.push_back(
        {file.provenance, mode,
         match_detections(file.detections, load.annotations, mode)});
  }
  const std::string text = report_text(rows);
  out << text;
  if (load.dropped() > 0) {
    out << "annotations dropped: " << load.dropped() << " (missing parts "
        << load.missing_parts << ", flagged " << load.flagged << ", malformed "
        << load.malformed << ")\n";
  }
  if (!a.out.empty()) {
    auto f = OpenOut(a.out);
    f << text;
    Close(f, a.out);
  }
  if (!a.tsv.empty()) {
    auto f = OpenOut(a.tsv);
    f << report_tsv(rows);
    Close(f, a.tsv);
  }
}

struct TranscribeArgs {
  std::string image;
  std::string fixtures;
  std::string endpoint;
  int timeout_ms = 30000;
  int retries = 2;
  int threshold = kDefaultBinarizeThreshold;
  std::string out;
};

void CmdTranscribe(const TranscribeArgs& a, std::ostream& out) {
  TranscriptionConfig cfg;
  if (!a.endpoint.empty()) {
    cfg.endpoint = a.endpoint;
  } else if (const char* env = std::getenv(kEndpointEnv); env && *env) {
    cfg.endpoint = env;
  }
  cfg.timeout = std::chrono::milliseconds(a.timeout_ms);
  cfg.retries = a.retries;
  cfg.binarize_threshold = a.threshold;
  cfg.Validate();

  auto image_in = OpenIn(a.image);
  const GrayscaleImage image = read_pgm(image_in);
  MockTranscriptionClient client(cfg.endpoint);
  if (!a.fixtures.empty()) {
    auto fixtures = OpenIn(a.fixtures);
    client.LoadFixtures(fixtures);
  }
  const TranscriptionResponse r = transcribe(image, client, cfg);
  if (a.out.empty()) {
    out << r.text;
    if (!r.text.empty() && r.text.back() != '\n') out << '\n';
  } else {
    auto f = OpenOut(a.out);
    f << r.text;
    Close(f, a.out);
  }
}

}  // namespace

std::string RunBench(const BenchConfig& cfg) {
  if (cfg.out_dir.empty()) throw std::invalid_argument("bench needs --out-dir");
  const std::filesystem::path dir(cfg.out_dir);
  auto path = [&](const char* name) { return (dir / name).string(); };

  GenerationConfig gen;
  gen.start_date = cfg.from;
  gen.end_date = cfg.to;
  gen.Validate();
  CostParams params;
  params.lambda = cfg.lambda;
  params.Validate();

  const Corpus corpus = build_training_corpus(gen);
  {
    auto f = OpenOut(path("corpus.jsonl"));
    write_corpus(f, corpus);
    Close(f, path("corpus.jsonl"));
  }
  const EvaluationCorpus ev = inject_noise(corpus, cfg.seed);
  {
    auto f = OpenOut(path("pages.jsonl"));
    write_pages(f, ev.pages);
    Close(f, path("pages.jsonl"));
    auto g = OpenOut(path("annotations.jsonl"));
    write_annotations(g, ev.annotations);
    Close(g, path("annotations.jsonl"));
  }
  const RegexBank synthesized = synthesize_bank(corpus, params);
  {
    auto f = OpenOut(path("bank.jsonl"));
    write_bank(f, synthesized);
    Close(f, path("bank.jsonl"));
  }

  std::vector<BankResult> rows;
  for (const RegexBank& bank :
       {builtin_community_bank(), builtin_bespoke_bank(), synthesized}) {
    const CompiledBank compiled(bank);
    const auto dets = ScanPages(ev.pages, compiled, nullptr);
    const std::string name =
        "detections-" + std::string(ToString(bank.provenance)) + ".jsonl";
    auto f = OpenOut(path(name.c_str()));
    write_detections(f, dets, bank.provenance);
    Close(f, path(name.c_str()));
    const MatchMode mode = ModeFor("auto", bank.provenance);
    rows.push_back({bank.provenance, mode,
                    match_detections(dets, ev.annotations, mode)});
  }
  const std::string text = report_text(rows);
  auto f = OpenOut(path("report.txt"));
  f << text;
  Close(f, path("report.txt"));
  auto g = OpenOut(path("report.tsv"));
  g << report_tsv(rows);
  Close(g, path("report.tsv"));
  return text;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Date extraction with synthesised regular expressions",
               "datesynth"};
  app.set_config("--config", "", "INI or TOML file; flags override it");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Render every date in a window");
  gen_cmd->add_option("--from", gen.from, "First date (ISO)")->capture_default_str();
  gen_cmd->add_option("--to", gen.to, "Last date (ISO)")->capture_default_str();
  gen_cmd->add_option("--family", gen.families,
                      "Restrict to these families (repeatable)");
  gen_cmd->add_option("--out", gen.out, "Corpus file")->required();
  gen_cmd->add_option("--pages-out", gen.pages_out, "Noise-injected pages file");
  gen_cmd->add_option("--annotations-out", gen.annotations_out,
                      "Annotations for the noise pages");
  gen_cmd->add_option("--seed", gen.seed, "Noise seed")->capture_default_str();
  gen_cmd->add_option("--examples-per-page", gen.per_page)->capture_default_str();

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesise a bank from a corpus");
  synth_cmd->add_option("--corpus", synth.corpus)->required();
  synth_cmd->add_option("--out", synth.out, "Bank file")->required();
  synth_cmd->add_option("--lambda", synth.lambda, "Generality weight")
      ->capture_default_str();
  synth_cmd->add_option("--max-len", synth.max_len,
                        "Longest string counted in a language")
      ->capture_default_str();

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Scan pages with a bank");
  extract_cmd->add_option("--bank", extract.bank, "community, bespoke or a bank file")
      ->required();
  extract_cmd->add_option("--input", extract.input, "Pages file or plain text")
      ->required();
  extract_cmd->add_option("--out", extract.out, "Detections file")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score detections");
  eval_cmd->add_option("--detections", eval.detections, "Detections files")
      ->required();
  eval_cmd->add_option("--annotations", eval.annotations)->required();
  eval_cmd->add_option("--match-mode", eval.mode,
                       "timestamp, span, or auto (span for community only)")
      ->check(CLI::IsMember({"timestamp", "span", "auto"}))
      ->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "Plain-text report");
  eval_cmd->add_option("--tsv", eval.tsv, "Tab-separated report");

  BenchConfig bench;
  std::string bench_from = "1970-01-01";
  std::string bench_to = "1970-12-31";
  auto* bench_cmd = app.add_subcommand("bench", "End-to-end run with a fixed seed");
  bench_cmd->add_option("--from", bench_from)->capture_default_str();
  bench_cmd->add_option("--to", bench_to)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--lambda", bench.lambda)->capture_default_str();
  bench_cmd->add_option("--out-dir", bench.out_dir)->required();

  TranscribeArgs tr;
  auto* tr_cmd = app.add_subcommand("transcribe", "Transcribe a PGM page image");
  tr_cmd->add_option("--image", tr.image)->required();
  tr_cmd->add_option("--fixtures", tr.fixtures, "Mock fixtures (JSON object)");
  tr_cmd->add_option("--endpoint", tr.endpoint,
                     std::string("Backend endpoint; defaults to $") + kEndpointEnv);
  tr_cmd->add_option("--timeout-ms", tr.timeout_ms)->capture_default_str();
  tr_cmd->add_option("--retries", tr.retries)->capture_default_str();
  tr_cmd->add_option("--threshold", tr.threshold,
                     "Binarisation threshold, negative to skip")
      ->capture_default_str();
  tr_cmd->add_option("--out", tr.out, "Text file (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) CmdGenCorpus(gen, out);
    if (*synth_cmd) CmdSynth(synth, out);
    if (*extract_cmd) CmdExtract(extract, out);
    if (*eval_cmd) CmdEval(eval, out);
    if (*bench_cmd) {
      bench.from = ParseDate(bench_from);
      bench.to = ParseDate(bench_to);
      out << RunBench(bench);
    }
    if (*tr_cmd) CmdTranscribe(tr, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const TranscriptionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace datesynth::cli
