#include "paclearn.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "context_io.hpp"
#include "datagen.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "implication.hpp"
#include "learn.hpp"
#include "metrics.hpp"

struct plc_context {
  fcai::FormalContext ctx;
};

struct plc_implications {
  fcai::ImplicationList list;
};

struct plc_corpus {
  std::vector<std::unique_ptr<plc_context>> entries;
  std::string manifest;
};

namespace {

thread_local std::string g_last_error;

plc_status fail(plc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the core exception taxonomy onto status codes.
template <typename Fn>
plc_status guarded(Fn&& fn) {
  try {
    fn();
    return PLC_OK;
  } catch (const fcai::ParseError& e) {
    return fail(PLC_PARSE_ERROR, e.what());
  } catch (const fcai::CapacityError& e) {
    return fail(PLC_CAPACITY_ERROR, e.what());
  } catch (const fcai::ProtocolError& e) {
    return fail(PLC_PROTOCOL_ERROR, e.what());
  } catch (const fcai::GenerationExhausted& e) {
    return fail(PLC_GENERATION_EXHAUSTED, e.what());
  } catch (const fcai::DataError& e) {
    return fail(PLC_DATA_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PLC_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PLC_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

plc_status require(bool ok, const char* message) {
  return ok ? PLC_OK : fail(PLC_INVALID_ARGUMENT, message);
}

fcai::ContextFormat to_core_format(plc_format format) {
  return format == PLC_FORMAT_BURMEISTER ? fcai::ContextFormat::Burmeister
                                         : fcai::ContextFormat::CsvBinary;
}

}  // namespace

extern "C" {

const char* plc_version(void) { return "paclearn 1.0.0"; }

const char* plc_last_error(void) { return g_last_error.c_str(); }

void plc_string_free(char* s) { std::free(s); }

plc_status plc_context_parse(const char* text, size_t len, plc_format format,
                             plc_context** out) {
  if (plc_status s = require(text && out, "text and out must not be null")) return s;
  return guarded([&] {
    auto ctx = fcai::parse_context(std::string_view(text, len), to_core_format(format));
    *out = new plc_context{std::move(ctx)};
  });
}

plc_status plc_context_read_file(const char* path, plc_context** out) {
  if (plc_status s = require(path && out, "path and out must not be null")) return s;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fcai::DataError(std::string("cannot open ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto ctx = fcai::parse_context(buffer.str(), fcai::guess_format(path));
    *out = new plc_context{std::move(ctx)};
  });
}

plc_status plc_context_write(const plc_context* ctx, plc_format format, char** out) {
  if (plc_status s = require(ctx && out, "ctx and out must not be null")) return s;
  return guarded([&] { *out = copy_string(fcai::write_context(ctx->ctx, to_core_format(format))); });
}

plc_status plc_star_alliance(plc_context** out) {
  if (plc_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] { *out = new plc_context{fcai::star_alliance()}; });
}

void plc_context_free(plc_context* ctx) { delete ctx; }

size_t plc_context_object_count(const plc_context* ctx) {
  return ctx ? ctx->ctx.object_count() : 0;
}

size_t plc_context_attribute_count(const plc_context* ctx) {
  return ctx ? ctx->ctx.attribute_count() : 0;
}

const char* plc_context_object_label(const plc_context* ctx, size_t i) {
  if (!ctx || i >= ctx->ctx.object_count()) return nullptr;
  return ctx->ctx.object_label(i).c_str();
}

const char* plc_context_attribute_name(const plc_context* ctx, size_t i) {
  if (!ctx || i >= ctx->ctx.attribute_count()) return nullptr;
  return ctx->ctx.universe()->name(i).c_str();
}

plc_status plc_canonical_basis(const plc_context* ctx, plc_implications** out) {
  if (plc_status s = require(ctx && out, "ctx and out must not be null")) return s;
  return guarded([&] { *out = new plc_implications{fcai::canonical_basis(ctx->ctx)}; });
}

plc_status plc_pac_basis(const plc_context* ctx, double epsilon, double delta, uint64_t seed,
                         const char* sampler, plc_implications** out, plc_run_stats* stats) {
  if (plc_status s = require(ctx && out, "ctx and out must not be null")) return s;
  return guarded([&] {
    fcai::PacParams params;
    params.epsilon = epsilon;
    params.delta = delta;
    params.seed = seed;
    params.sampler = fcai::SamplerSpec::parse(sampler ? sampler : "uniform");
    fcai::MembershipOracle member = fcai::context_membership_oracle(ctx->ctx);
    auto [basis, run] = fcai::pac_basis(ctx->ctx.universe(), member, params);
    if (stats) {
      stats->seed = run.seed;
      stats->epsilon = run.epsilon;
      stats->delta = run.delta;
      stats->i_final = run.i_final;
      stats->membership_queries = run.membership_queries;
      stats->samples_drawn = run.samples_drawn;
      stats->basis_size = run.basis_size;
    }
    *out = new plc_implications{std::move(basis)};
  });
}

plc_status plc_implications_parse(const plc_context* ctx, const char* text, size_t len,
                                  plc_implications** out) {
  if (plc_status s = require(ctx && text && out, "ctx, text and out must not be null")) return s;
  return guarded([&] {
    auto list = fcai::parse_implications(ctx->ctx.universe(), std::string_view(text, len));
    *out = new plc_implications{std::move(list)};
  });
}

plc_status plc_implications_format(const plc_implications* imps, char** out) {
  if (plc_status s = require(imps && out, "imps and out must not be null")) return s;
  return guarded([&] { *out = copy_string(fcai::format_implications(imps->list)); });
}

size_t plc_implications_size(const plc_implications* imps) {
  return imps ? imps->list.size() : 0;
}

void plc_implications_free(plc_implications* imps) { delete imps; }

plc_status plc_eval(const plc_context* ctx, const plc_implications* imps, uint64_t sampled_n,
                    uint64_t seed, plc_eval_report* out) {
  if (plc_status s = require(ctx && imps && out, "ctx, imps and out must not be null")) return s;
  return guarded([&] {
    fcai::EvalReport report = sampled_n == 0
                                  ? fcai::evaluate(ctx->ctx, imps->list)
                                  : fcai::evaluate_sampled(ctx->ctx, imps->list, sampled_n, seed);
    out->horn_distance = report.horn_distance.value();
    out->precision_defined = report.precision.has_value();
    out->precision = report.precision ? report.precision->value() : 0.0;
    out->recall_defined = report.recall.has_value();
    out->recall = report.recall ? report.recall->value() : 0.0;
    out->basis_size = report.basis_size;
    out->canonical_size = report.canonical_size;
    out->sampled = report.sampled ? 1 : 0;
    out->sample_count = report.sample_n;
    out->seed = report.seed;
  });
}

plc_status plc_corpus_generate(size_t attributes, uint32_t objects_lo, uint32_t objects_hi,
                               double density_lo, double density_hi, uint64_t seed, size_t count,
                               size_t min_basis_size, plc_corpus** out) {
  if (plc_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    fcai::GenSpec spec;
    spec.num_attributes = attributes;
    spec.object_count_range = {objects_lo, objects_hi};
    spec.density_range = {density_lo, density_hi};
    spec.seed = seed;
    auto entries = fcai::corpus(spec, count, min_basis_size);
    auto corpus = std::make_unique<plc_corpus>();
    corpus->manifest = fcai::corpus_manifest_csv(entries);
    for (auto& entry : entries)
      corpus->entries.push_back(
          std::make_unique<plc_context>(plc_context{std::move(entry.context)}));
    *out = corpus.release();
  });
}

size_t plc_corpus_size(const plc_corpus* corpus) { return corpus ? corpus->entries.size() : 0; }

const plc_context* plc_corpus_context(const plc_corpus* corpus, size_t i) {
  if (!corpus || i >= corpus->entries.size()) return nullptr;
  return corpus->entries[i].get();
}

plc_status plc_corpus_manifest(const plc_corpus* corpus, char** csv_out) {
  if (plc_status s = require(corpus && csv_out, "corpus and csv_out must not be null")) return s;
  return guarded([&] { *csv_out = copy_string(corpus->manifest); });
}

void plc_corpus_free(plc_corpus* corpus) { delete corpus; }

plc_status plc_run_sweep(const char* spec_text, char** csv_out) {
  if (plc_status s = require(spec_text && csv_out, "spec_text and csv_out must not be null"))
    return s;
  return guarded([&] {
    *csv_out = copy_string(fcai::run_sweep(fcai::SweepSpec::parse(spec_text)));
  });
}

plc_status plc_run_stability(const char* spec_text, char** csv_out) {
  if (plc_status s = require(spec_text && csv_out, "spec_text and csv_out must not be null"))
    return s;
  return guarded([&] {
    *csv_out = copy_string(fcai::run_stability(fcai::StabilitySpec::parse(spec_text)));
  });
}

plc_status plc_case_study(uint64_t seed, char** report_out) {
  if (plc_status s = require(report_out != nullptr, "report_out must not be null")) return s;
  return guarded([&] { *report_out = copy_string(fcai::case_study(seed)); });
}

}  // extern "C"
