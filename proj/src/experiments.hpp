#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "context.hpp"
#include "datagen.hpp"
#include "learn.hpp"

namespace fcai {

// Sweep description, read from a flat key=value file:
//   epsilons=0.01,0.1,0.3   deltas=0.1   repetitions=10   seed=42
// plus either corpus_dir=<dir of .cxt files> or generation parameters
//   attributes=10 contexts=200 min_basis_size=10
//   objects_min=1 objects_max=400 density_min=0 density_max=1
struct SweepSpec {
  std::vector<double> epsilons;
  std::vector<double> deltas;
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  std::string corpus_dir;  // empty: generate
  GenSpec gen;
  std::size_t gen_count = 0;
  std::size_t min_basis_size = 0;

  static SweepSpec parse(std::string_view text);
  void validate() const;
};

// Stability description (key=value): context=<path>, epsilons=..., delta=...,
// runs=..., seed=...
struct StabilitySpec {
  std::string context_path;
  std::vector<double> epsilons;
  double delta = 0.1;
  std::size_t runs = 100;
  std::uint64_t seed = 0;

  static StabilitySpec parse(std::string_view text);
  void validate() const;
};

// One data row per (context, epsilon, delta, repetition) followed by three
// aggregate rows per (epsilon, delta) cell (repetition = mean / stddev /
// skipped). Aggregates are computed over the values as printed, so they are
// recomputable from the data rows alone. Fully determined by the master seed.
std::string run_sweep(const SweepSpec& spec);

// Per-epsilon mean and (population) standard deviation of precision/recall
// over `runs` independently seeded pac-basis runs on one fixed context.
std::string run_stability(const FormalContext& ctx, const std::string& context_id,
                          const std::vector<double>& epsilons, double delta, std::size_t runs,
                          std::uint64_t master_seed);
std::string run_stability(const StabilitySpec& spec);

// Star-Alliance walk-through: canonical basis, pac bases at (0.1, 0.1) and
// (0.5, 0.1), their evaluation against the context.
std::string case_study(std::uint64_t seed);

// population standard deviation (divide by n)
double population_stddev(const std::vector<double>& values);
// printed-value rounding used throughout the CSV (6 significant digits)
double round_to_printed(double v);

inline constexpr const char* kSweepCsvHeader =
    "context_id,epsilon,delta,repetition,seed,basis_size,canonical_size,horn_distance,"
    "precision,recall,membership_queries,samples_drawn";

}  // namespace fcai
