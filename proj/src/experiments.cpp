#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "context_io.hpp"
#include "errors.hpp"
#include "metrics.hpp"

namespace fcai {

namespace {

std::string format_ratio(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct KeyValues {
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    const std::string stripped = trim(line);
    if (!stripped.empty() && stripped[0] != '#') {
      const std::size_t eq = stripped.find('=');
      if (eq == std::string::npos)
        throw DataError("spec line " + std::to_string(line_no) + ": expected key=value, got \"" +
                        stripped + "\"");
      out.entries.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw DataError("spec key " + key + ": expected a number, got \"" + value + "\"");
  }
}

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw DataError("spec key " + key + ": expected a non-negative integer, got \"" + value +
                    "\"");
  }
}

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    const std::string token = trim(std::string_view(value).substr(
        start, comma == std::string::npos ? value.size() - start : comma - start));
    if (!token.empty()) out.push_back(parse_double(token, key));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw DataError("spec key " + key + ": expected a comma-separated list");
  return out;
}

void check_known_keys(const KeyValues& kv, const std::vector<std::string>& known) {
  for (const auto& [k, v] : kv.entries)
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw DataError("unknown spec key \"" + k + "\"");
}

struct NamedContext {
  std::string id;
  FormalContext context;
};

std::vector<NamedContext> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().filename() == "manifest.csv") continue;  // gen's index file
    if (entry.path().extension() == ".cxt" || entry.path().extension() == ".csv")
      files.push_back(entry.path());
  }
  if (ec) throw DataError("cannot read corpus directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<NamedContext> out;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      out.push_back(NamedContext{path.stem().string(),
                                 parse_context(buffer.str(), guess_format(path.string()))});
    } catch (const ParseError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
  }
  if (out.empty()) throw DataError("corpus directory " + dir + " holds no .cxt or .csv files");
  return out;
}

struct CellStats {
  std::vector<double> distances, precisions, recalls;
  std::size_t precision_skipped = 0, recall_skipped = 0;
};

std::string optional_cell(const std::optional<Ratio>& r) {
  return r ? format_ratio(r->value()) : std::string();
}

void append_aggregate_rows(std::string& csv, const std::string& eps_cell,
                           const std::string& delta_cell, const CellStats& cell) {
  auto mean_of = [](const std::vector<double>& v) -> std::string {
    if (v.empty()) return "";
    double sum = 0;
    for (double x : v) sum += x;
    return format_ratio(sum / static_cast<double>(v.size()));
  };
  auto stddev_of = [](const std::vector<double>& v) -> std::string {
    if (v.empty()) return "";
    return format_ratio(population_stddev(v));
  };
  csv += "aggregate," + eps_cell + "," + delta_cell + ",mean,,,," + mean_of(cell.distances) +
         "," + mean_of(cell.precisions) + "," + mean_of(cell.recalls) + ",,\n";
  csv += "aggregate," + eps_cell + "," + delta_cell + ",stddev,,,," + stddev_of(cell.distances) +
         "," + stddev_of(cell.precisions) + "," + stddev_of(cell.recalls) + ",,\n";
  csv += "aggregate," + eps_cell + "," + delta_cell + ",skipped,,,,0," +
         std::to_string(cell.precision_skipped) + "," + std::to_string(cell.recall_skipped) +
         ",,\n";
}

}  // namespace

double population_stddev(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / static_cast<double>(values.size()));
}

double round_to_printed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

SweepSpec SweepSpec::parse(std::string_view text) {
  const KeyValues kv = parse_key_values(text);
  check_known_keys(kv, {"epsilons", "deltas", "repetitions", "seed", "corpus_dir", "attributes",
                        "contexts", "min_basis_size", "objects_min", "objects_max", "density_min",
                        "density_max"});
  SweepSpec spec;
  auto require = [&kv](const char* key) -> const std::string& {
    const std::string* v = kv.find(key);
    if (!v) throw DataError(std::string("spec is missing required key \"") + key + "\"");
    return *v;
  };
  spec.epsilons = parse_double_list(require("epsilons"), "epsilons");
  spec.deltas = parse_double_list(require("deltas"), "deltas");
  if (const auto* v = kv.find("repetitions")) spec.repetitions = parse_u64(*v, "repetitions");
  if (const auto* v = kv.find("seed")) spec.seed = parse_u64(*v, "seed");
  if (const auto* v = kv.find("corpus_dir")) spec.corpus_dir = *v;
  if (spec.corpus_dir.empty()) {
    spec.gen.num_attributes = parse_u64(require("attributes"), "attributes");
    spec.gen_count = parse_u64(require("contexts"), "contexts");
    if (const auto* v = kv.find("min_basis_size"))
      spec.min_basis_size = parse_u64(*v, "min_basis_size");
    if (const auto* v = kv.find("objects_min"))
      spec.gen.object_count_range.first = static_cast<std::uint32_t>(parse_u64(*v, "objects_min"));
    if (const auto* v = kv.find("objects_max"))
      spec.gen.object_count_range.second =
          static_cast<std::uint32_t>(parse_u64(*v, "objects_max"));
    if (const auto* v = kv.find("density_min"))
      spec.gen.density_range.first = parse_double(*v, "density_min");
    if (const auto* v = kv.find("density_max"))
      spec.gen.density_range.second = parse_double(*v, "density_max");
    spec.gen.seed = spec.seed;
  }
  spec.validate();
  return spec;
}

void SweepSpec::validate() const {
  if (epsilons.empty() || deltas.empty()) throw DataError("epsilons and deltas must be nonempty");
  for (double e : epsilons)
    if (!(e > 0.0 && e <= 1.0)) throw DataError("epsilon values must lie in (0, 1]");
  for (double d : deltas)
    if (!(d > 0.0 && d <= 1.0)) throw DataError("delta values must lie in (0, 1]");
  if (repetitions < 1) throw DataError("repetitions must be at least 1");
  if (corpus_dir.empty()) {
    if (gen_count < 1) throw DataError("contexts must be at least 1");
    gen.validate();
  }
}

StabilitySpec StabilitySpec::parse(std::string_view text) {
  const KeyValues kv = parse_key_values(text);
  check_known_keys(kv, {"context", "epsilons", "delta", "runs", "seed"});
  StabilitySpec spec;
  const std::string* ctx = kv.find("context");
  if (!ctx) throw DataError("spec is missing required key \"context\"");
  spec.context_path = *ctx;
  const std::string* eps = kv.find("epsilons");
  if (!eps) throw DataError("spec is missing required key \"epsilons\"");
  spec.epsilons = parse_double_list(*eps, "epsilons");
  if (const auto* v = kv.find("delta")) spec.delta = parse_double(*v, "delta");
  if (const auto* v = kv.find("runs")) spec.runs = parse_u64(*v, "runs");
  if (const auto* v = kv.find("seed")) spec.seed = parse_u64(*v, "seed");
  spec.validate();
  return spec;
}

void StabilitySpec::validate() const {
  if (context_path.empty()) throw DataError("context path must not be empty");
  if (epsilons.empty()) throw DataError("epsilons must be nonempty");
  for (double e : epsilons)
    if (!(e > 0.0 && e <= 1.0)) throw DataError("epsilon values must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw DataError("delta must lie in (0, 1]");
  if (runs < 2) throw DataError("stability needs at least 2 runs");
}

std::string run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<NamedContext> contexts;
  if (!spec.corpus_dir.empty()) {
    contexts = load_corpus_dir(spec.corpus_dir);
  } else {
    std::vector<CorpusEntry> entries = corpus(spec.gen, spec.gen_count, spec.min_basis_size);
    for (std::size_t i = 0; i < entries.size(); ++i)
      contexts.push_back(NamedContext{"gen" + std::to_string(i), std::move(entries[i].context)});
  }

  std::string csv = std::string(kSweepCsvHeader) + "\n";
  // cell -> collected (printed-precision) values, in (epsilon, delta) order
  std::vector<CellStats> cells(spec.epsilons.size() * spec.deltas.size());
  std::uint64_t job = 0;
  for (const auto& named : contexts) {
    const ImplicationList canonical = canonical_basis(named.context);
    MembershipOracle member = context_membership_oracle(named.context);
    for (std::size_t ei = 0; ei < spec.epsilons.size(); ++ei) {
      for (std::size_t di = 0; di < spec.deltas.size(); ++di) {
        CellStats& cell = cells[ei * spec.deltas.size() + di];
        for (std::size_t rep = 0; rep < spec.repetitions; ++rep, ++job) {
          PacParams params;
          params.epsilon = spec.epsilons[ei];
          params.delta = spec.deltas[di];
          params.seed = derive_stream_seed(spec.seed, job);
          auto [basis, stats] = pac_basis(named.context.universe(), member, params);
          EvalReport report = evaluate(named.context, basis);
          const std::string dist_cell = format_ratio(report.horn_distance.value());
          const std::string prec_cell = optional_cell(report.precision);
          const std::string rec_cell = optional_cell(report.recall);
          cell.distances.push_back(std::strtod(dist_cell.c_str(), nullptr));
          if (prec_cell.empty())
            ++cell.precision_skipped;
          else
            cell.precisions.push_back(std::strtod(prec_cell.c_str(), nullptr));
          if (rec_cell.empty())
            ++cell.recall_skipped;
          else
            cell.recalls.push_back(std::strtod(rec_cell.c_str(), nullptr));
          csv += named.id + "," + format_ratio(spec.epsilons[ei]) + "," +
                 format_ratio(spec.deltas[di]) + "," + std::to_string(rep) + "," +
                 std::to_string(stats.seed) + "," + std::to_string(basis.size()) + "," +
                 std::to_string(canonical.size()) + "," + dist_cell + "," + prec_cell + "," +
                 rec_cell + "," + std::to_string(stats.membership_queries) + "," +
                 std::to_string(stats.samples_drawn) + "\n";
        }
      }
    }
  }
  for (std::size_t ei = 0; ei < spec.epsilons.size(); ++ei)
    for (std::size_t di = 0; di < spec.deltas.size(); ++di)
      append_aggregate_rows(csv, format_ratio(spec.epsilons[ei]), format_ratio(spec.deltas[di]),
                            cells[ei * spec.deltas.size() + di]);
  return csv;
}

std::string run_stability(const FormalContext& ctx, const std::string& context_id,
                          const std::vector<double>& epsilons, double delta, std::size_t runs,
                          std::uint64_t master_seed) {
  if (runs < 2) throw DataError("stability needs at least 2 runs");
  if (epsilons.empty()) throw DataError("epsilons must be nonempty");
  const ImplicationList canonical = canonical_basis(ctx);
  MembershipOracle member = context_membership_oracle(ctx);
  std::string csv = std::string(kSweepCsvHeader) + "\n";
  std::vector<CellStats> cells(epsilons.size());
  std::uint64_t job = 0;
  for (std::size_t ei = 0; ei < epsilons.size(); ++ei) {
    CellStats& cell = cells[ei];
    for (std::size_t run = 0; run < runs; ++run, ++job) {
      PacParams params;
      params.epsilon = epsilons[ei];
      params.delta = delta;
      params.seed = derive_stream_seed(master_seed, job);
      auto [basis, stats] = pac_basis(ctx.universe(), member, params);
      EvalReport report = evaluate(ctx, basis);
      const std::string dist_cell = format_ratio(report.horn_distance.value());
      const std::string prec_cell = optional_cell(report.precision);
      const std::string rec_cell = optional_cell(report.recall);
      cell.distances.push_back(std::strtod(dist_cell.c_str(), nullptr));
      if (prec_cell.empty())
        ++cell.precision_skipped;
      else
        cell.precisions.push_back(std::strtod(prec_cell.c_str(), nullptr));
      if (rec_cell.empty())
        ++cell.recall_skipped;
      else
        cell.recalls.push_back(std::strtod(rec_cell.c_str(), nullptr));
      csv += context_id + "," + format_ratio(epsilons[ei]) + "," + format_ratio(delta) + "," +
             std::to_string(run) + "," + std::to_string(stats.seed) + "," +
             std::to_string(basis.size()) + "," + std::to_string(canonical.size()) + "," +
             dist_cell + "," + prec_cell + "," + rec_cell + "," +
             std::to_string(stats.membership_queries) + "," +
             std::to_string(stats.samples_drawn) + "\n";
    }
  }
  for (std::size_t ei = 0; ei < epsilons.size(); ++ei)
    append_aggregate_rows(csv, format_ratio(epsilons[ei]), format_ratio(delta), cells[ei]);
  return csv;
}

std::string run_stability(const StabilitySpec& spec) {
  spec.validate();
  std::ifstream in(spec.context_path, std::ios::binary);
  if (!in) throw DataError("cannot open " + spec.context_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  FormalContext ctx = parse_context(buffer.str(), guess_format(spec.context_path));
  const std::string id = std::filesystem::path(spec.context_path).stem().string();
  return run_stability(ctx, id, spec.epsilons, spec.delta, spec.runs, spec.seed);
}

std::string case_study(std::uint64_t seed) {
  const FormalContext ctx = star_alliance();
  std::string out;
  out += "Star-Alliance context: " + std::to_string(ctx.object_count()) + " objects, " +
         std::to_string(ctx.attribute_count()) + " attributes\n\n";
  const ImplicationList canonical = canonical_basis(ctx);
  out += "canonical basis (" + std::to_string(canonical.size()) + " implications):\n";
  out += format_implications(canonical);

  const std::pair<double, double> settings[] = {{0.1, 0.1}, {0.5, 0.1}};
  int idx = 0;
  for (const auto& [eps, delta] : settings) {
    MembershipOracle member = context_membership_oracle(ctx);
    PacParams params;
    params.epsilon = eps;
    params.delta = delta;
    params.seed = derive_stream_seed(seed, static_cast<std::uint64_t>(idx++));
    auto [basis, stats] = pac_basis(ctx.universe(), member, params);
    EvalReport report = evaluate(ctx, basis);
    char head[128];
    std::snprintf(head, sizeof head, "\npac-basis epsilon=%g delta=%g seed=%llu (%zu implications):\n",
                  eps, delta, static_cast<unsigned long long>(params.seed), basis.size());
    out += head;
    out += format_implications(basis);
    char metrics_line[160];
    std::snprintf(metrics_line, sizeof metrics_line,
                  "horn-distance=%.6g precision=%s recall=%s samples=%llu\n",
                  report.horn_distance.value(),
                  report.precision ? format_ratio(report.precision->value()).c_str() : "undefined",
                  report.recall ? format_ratio(report.recall->value()).c_str() : "undefined",
                  static_cast<unsigned long long>(stats.samples_drawn));
    out += metrics_line;
  }
  return out;
}

}  // namespace fcai
