// paclearn command-line front end. Talks to the core exclusively through the
// C API in paclearn.h.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paclearn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct DataFailure {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) { throw DataFailure{message}; }

void check(plc_status status) {
  if (status != PLC_OK) fail(plc_last_error());
}

using ContextPtr = std::unique_ptr<plc_context, decltype(&plc_context_free)>;
using ImplicationsPtr = std::unique_ptr<plc_implications, decltype(&plc_implications_free)>;
using CorpusPtr = std::unique_ptr<plc_corpus, decltype(&plc_corpus_free)>;

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { plc_string_free(data); }
  std::string str() const { return data ? data : ""; }
};

ContextPtr read_context(const std::string& path) {
  plc_context* raw = nullptr;
  check(plc_context_read_file(path.c_str(), &raw));
  return ContextPtr(raw, plc_context_free);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << content;
}

void print_stats(const plc_run_stats& stats) {
  std::printf("# seed=%" PRIu64 "\n", stats.seed);
  std::printf("# epsilon=%g\n", stats.epsilon);
  std::printf("# delta=%g\n", stats.delta);
  std::printf("# i_final=%" PRIu64 "\n", stats.i_final);
  std::printf("# membership_queries=%" PRIu64 "\n", stats.membership_queries);
  std::printf("# samples_drawn=%" PRIu64 "\n", stats.samples_drawn);
  std::printf("# basis_size=%" PRIu64 "\n", stats.basis_size);
}

int run(int argc, char** argv) {
  CLI::App app{"canonical and PAC implication bases of formal contexts"};
  app.require_subcommand(1);

  // canonical-basis
  std::string cb_path;
  auto* cb = app.add_subcommand("canonical-basis",
                                "print the Duquenne-Guigues basis of a context");
  cb->add_option("context", cb_path, "context file (.cxt or .csv)")->required();

  // pac-basis
  std::string pb_path, pb_sampler = "uniform";
  double pb_epsilon = 0.1, pb_delta = 0.1;
  std::uint64_t pb_seed = 0;
  bool pb_stats = false;
  auto* pb = app.add_subcommand("pac-basis", "learn a PAC basis with the sampling oracle");
  pb->add_option("context", pb_path, "context file")->required();
  pb->add_option("--epsilon", pb_epsilon, "accuracy in (0,1]")->required();
  pb->add_option("--delta", pb_delta, "confidence in (0,1]")->required();
  pb->add_option("--seed", pb_seed, "RNG seed")->default_val(0);
  pb->add_option("--sampler", pb_sampler, "uniform | biased:p1,p2,...");
  pb->add_flag("--stats", pb_stats, "append run statistics as # comments");

  // eval
  std::string ev_ctx_path, ev_imps_path;
  std::uint64_t ev_sampled = 0, ev_seed = 0;
  auto* ev = app.add_subcommand("eval",
                                "Horn-distance, precision and recall of an implication file");
  ev->add_option("context", ev_ctx_path, "context file")->required();
  ev->add_option("implications", ev_imps_path, "implication file (one per line)")->required();
  ev->add_option("--sampled", ev_sampled, "Monte-Carlo distance with this many draws");
  ev->add_option("--seed", ev_seed, "seed for --sampled");

  // gen
  std::size_t gen_attributes = 10, gen_count = 1, gen_min_basis = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out_dir, gen_objects = "1:400", gen_density = "0:1";
  auto* gen = app.add_subcommand("gen", "generate an artificial context corpus");
  gen->add_option("--attributes", gen_attributes, "attribute count")->required();
  gen->add_option("--count", gen_count, "number of contexts")->required();
  gen->add_option("--min-basis-size", gen_min_basis, "keep only |Can| >= this");
  gen->add_option("--seed", gen_seed, "master seed")->default_val(0);
  gen->add_option("--out-dir", gen_out_dir, "output directory")->required();
  gen->add_option("--objects", gen_objects, "object count range lo:hi");
  gen->add_option("--density", gen_density, "density range lo:hi");

  // experiment
  std::string ex_spec_path, ex_out_path;
  auto* ex = app.add_subcommand("experiment", "run a sweep or stability experiment");
  ex->require_subcommand(1);
  auto* ex_sweep = ex->add_subcommand("sweep", "epsilon/delta grid over a corpus");
  auto* ex_stab = ex->add_subcommand("stability", "repeated runs on one fixed context");
  for (auto* sub : {ex_sweep, ex_stab}) {
    sub->add_option("--spec", ex_spec_path, "key=value experiment spec file")->required();
    sub->add_option("--out", ex_out_path, "output CSV path")->required();
  }

  // case-study
  std::uint64_t cs_seed = 2002;
  auto* cs = app.add_subcommand("case-study", "Star-Alliance walk-through");
  cs->add_option("--seed", cs_seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cb->parsed()) {
    ContextPtr ctx = read_context(cb_path);
    plc_implications* raw = nullptr;
    check(plc_canonical_basis(ctx.get(), &raw));
    ImplicationsPtr imps(raw, plc_implications_free);
    OwnedString text;
    check(plc_implications_format(imps.get(), &text.data));
    std::fputs(text.str().c_str(), stdout);
  } else if (pb->parsed()) {
    ContextPtr ctx = read_context(pb_path);
    plc_implications* raw = nullptr;
    plc_run_stats stats{};
    check(plc_pac_basis(ctx.get(), pb_epsilon, pb_delta, pb_seed, pb_sampler.c_str(), &raw,
                        &stats));
    ImplicationsPtr imps(raw, plc_implications_free);
    OwnedString text;
    check(plc_implications_format(imps.get(), &text.data));
    std::fputs(text.str().c_str(), stdout);
    if (pb_stats) print_stats(stats);
  } else if (ev->parsed()) {
    ContextPtr ctx = read_context(ev_ctx_path);
    const std::string imps_text = read_file(ev_imps_path);
    plc_implications* raw = nullptr;
    check(plc_implications_parse(ctx.get(), imps_text.c_str(), imps_text.size(), &raw));
    ImplicationsPtr imps(raw, plc_implications_free);
    plc_eval_report report{};
    check(plc_eval(ctx.get(), imps.get(), ev_sampled, ev_seed, &report));
    std::printf("horn_distance=%.6g\n", report.horn_distance);
    if (report.precision_defined)
      std::printf("precision=%.6g\n", report.precision);
    else
      std::printf("precision=undefined\n");
    if (report.recall_defined)
      std::printf("recall=%.6g\n", report.recall);
    else
      std::printf("recall=undefined\n");
    std::printf("basis_size=%" PRIu64 "\n", report.basis_size);
    std::printf("canonical_size=%" PRIu64 "\n", report.canonical_size);
    std::printf("mode=%s\n", report.sampled ? "sampled" : "exact");
  } else if (gen->parsed()) {
    auto parse_range = [](const std::string& text, const char* what) {
      const std::size_t colon = text.find(':');
      if (colon == std::string::npos)
        fail(std::string("expected lo:hi for --") + what + ", got " + text);
      return std::pair<std::string, std::string>(text.substr(0, colon), text.substr(colon + 1));
    };
    auto [obj_lo, obj_hi] = parse_range(gen_objects, "objects");
    auto [den_lo, den_hi] = parse_range(gen_density, "density");
    auto to_u32 = [](const std::string& s) -> std::uint32_t {
      try {
        return static_cast<std::uint32_t>(std::stoul(s));
      } catch (const std::exception&) {
        fail("expected an integer, got \"" + s + "\"");
      }
    };
    auto to_double = [](const std::string& s) -> double {
      try {
        return std::stod(s);
      } catch (const std::exception&) {
        fail("expected a number, got \"" + s + "\"");
      }
    };
    plc_corpus* raw = nullptr;
    check(plc_corpus_generate(gen_attributes, to_u32(obj_lo), to_u32(obj_hi), to_double(den_lo),
                              to_double(den_hi), gen_seed, gen_count, gen_min_basis, &raw));
    CorpusPtr corpus(raw, plc_corpus_free);
    std::filesystem::create_directories(gen_out_dir);
    for (std::size_t i = 0; i < plc_corpus_size(corpus.get()); ++i) {
      OwnedString text;
      check(plc_context_write(plc_corpus_context(corpus.get(), i), PLC_FORMAT_BURMEISTER,
                              &text.data));
      char name[32];
      std::snprintf(name, sizeof name, "ctx_%04zu.cxt", i);
      write_file((std::filesystem::path(gen_out_dir) / name).string(), text.str());
    }
    OwnedString manifest;
    check(plc_corpus_manifest(corpus.get(), &manifest.data));
    write_file((std::filesystem::path(gen_out_dir) / "manifest.csv").string(), manifest.str());
    std::printf("wrote %zu contexts to %s\n", plc_corpus_size(corpus.get()),
                gen_out_dir.c_str());
  } else if (ex->parsed()) {
    const std::string spec_text = read_file(ex_spec_path);
    OwnedString csv;
    if (ex_sweep->parsed())
      check(plc_run_sweep(spec_text.c_str(), &csv.data));
    else
      check(plc_run_stability(spec_text.c_str(), &csv.data));
    write_file(ex_out_path, csv.str());
  } else if (cs->parsed()) {
    OwnedString report;
    check(plc_case_study(cs_seed, &report.data));
    std::fputs(report.str().c_str(), stdout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DataFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
}
