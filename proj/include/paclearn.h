/* paclearn — canonical and probably-approximately-correct implication bases
 * of formal contexts behind a plain C interface.
 *
 * All handles are opaque; functions returning plc_status leave their out-
 * parameters untouched on failure and store a message retrievable with
 * plc_last_error() (thread-local). Strings returned through char** out-
 * parameters are heap-allocated and must be released with plc_string_free().
 */
#ifndef PACLEARN_H
#define PACLEARN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PLC_API __declspec(dllexport)
#else
#define PLC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plc_status {
  PLC_OK = 0,
  PLC_INVALID_ARGUMENT = 1,
  PLC_PARSE_ERROR = 2,       /* malformed context/implication text */
  PLC_CAPACITY_ERROR = 3,    /* 2^|M| enumeration above the cap */
  PLC_PROTOCOL_ERROR = 4,    /* inconsistent oracle pair */
  PLC_GENERATION_EXHAUSTED = 5,
  PLC_DATA_ERROR = 6,        /* bad experiment spec, missing file, ... */
  PLC_INTERNAL_ERROR = 7
} plc_status;

typedef enum plc_format {
  PLC_FORMAT_BURMEISTER = 0, /* .cxt */
  PLC_FORMAT_CSV = 1         /* attribute-name header, 0/1 rows */
} plc_format;

typedef struct plc_context plc_context;
typedef struct plc_implications plc_implications;
typedef struct plc_corpus plc_corpus;

typedef struct plc_run_stats {
  uint64_t seed;
  double epsilon;
  double delta;
  uint64_t i_final;            /* equivalence-oracle calls */
  uint64_t membership_queries;
  uint64_t samples_drawn;
  uint64_t basis_size;
} plc_run_stats;

typedef struct plc_eval_report {
  double horn_distance;
  double precision;            /* meaningful only if precision_defined */
  double recall;               /* meaningful only if recall_defined */
  int precision_defined;
  int recall_defined;
  uint64_t basis_size;
  uint64_t canonical_size;
  int sampled;                 /* 0 exact, 1 Monte-Carlo distance */
  uint64_t sample_count;
  uint64_t seed;
} plc_eval_report;

PLC_API const char* plc_version(void);
PLC_API const char* plc_last_error(void);
PLC_API void plc_string_free(char* s);

/* ---- contexts ---- */
PLC_API plc_status plc_context_parse(const char* text, size_t len, plc_format format,
                                     plc_context** out);
/* format chosen by extension (.cxt/.csv), falling back to content sniffing */
PLC_API plc_status plc_context_read_file(const char* path, plc_context** out);
PLC_API plc_status plc_context_write(const plc_context* ctx, plc_format format, char** out);
PLC_API plc_status plc_star_alliance(plc_context** out);
PLC_API void plc_context_free(plc_context* ctx);
PLC_API size_t plc_context_object_count(const plc_context* ctx);
PLC_API size_t plc_context_attribute_count(const plc_context* ctx);
PLC_API const char* plc_context_object_label(const plc_context* ctx, size_t i);
PLC_API const char* plc_context_attribute_name(const plc_context* ctx, size_t i);

/* ---- implication lists ---- */
PLC_API plc_status plc_canonical_basis(const plc_context* ctx, plc_implications** out);
/* sampler: NULL or "uniform", or "biased:p1,p2,..." with |M| probabilities */
PLC_API plc_status plc_pac_basis(const plc_context* ctx, double epsilon, double delta,
                                 uint64_t seed, const char* sampler, plc_implications** out,
                                 plc_run_stats* stats /* may be NULL */);
PLC_API plc_status plc_implications_parse(const plc_context* ctx, const char* text, size_t len,
                                          plc_implications** out);
PLC_API plc_status plc_implications_format(const plc_implications* imps, char** out);
PLC_API size_t plc_implications_size(const plc_implications* imps);
PLC_API void plc_implications_free(plc_implications* imps);

/* ---- evaluation ---- */
/* sampled_n = 0: exact Horn-distance by enumeration; otherwise Monte-Carlo
 * with sampled_n uniform draws under seed. */
PLC_API plc_status plc_eval(const plc_context* ctx, const plc_implications* imps,
                            uint64_t sampled_n, uint64_t seed, plc_eval_report* out);

/* ---- artificial corpora ---- */
PLC_API plc_status plc_corpus_generate(size_t attributes, uint32_t objects_lo,
                                       uint32_t objects_hi, double density_lo, double density_hi,
                                       uint64_t seed, size_t count, size_t min_basis_size,
                                       plc_corpus** out);
PLC_API size_t plc_corpus_size(const plc_corpus* corpus);
/* borrowed; valid while the corpus lives */
PLC_API const plc_context* plc_corpus_context(const plc_corpus* corpus, size_t i);
PLC_API plc_status plc_corpus_manifest(const plc_corpus* corpus, char** csv_out);
PLC_API void plc_corpus_free(plc_corpus* corpus);

/* ---- experiments (spec_text is the flat key=value experiment spec) ---- */
PLC_API plc_status plc_run_sweep(const char* spec_text, char** csv_out);
PLC_API plc_status plc_run_stability(const char* spec_text, char** csv_out);
PLC_API plc_status plc_case_study(uint64_t seed, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* PACLEARN_H */
