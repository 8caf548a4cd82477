#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "context.hpp"
#include "implication.hpp"
#include "lectic.hpp"

namespace fcai {

// Exact fraction; horn distances have den = 2^|M| (or the sample count).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// |Mod(h) triangle Int(ctx)| / 2^|M| by full lectic enumeration (no early
// exit; the exact count is the point). Above the cap, throws CapacityError
// pointing at horn_distance_sampled.
Ratio horn_distance(const ImplicationList& h, const FormalContext& target,
                    std::size_t cap = kDefaultEnumerationCap);
// Same with Mod(target) in place of Int(ctx).
Ratio horn_distance(const ImplicationList& h, const ImplicationList& target,
                    std::size_t cap = kDefaultEnumerationCap);

// Monte-Carlo estimate: fraction of n uniform subsets in the symmetric
// difference; reproducible per seed.
Ratio horn_distance_sampled(const ImplicationList& h, const FormalContext& target,
                            std::uint64_t n, std::uint64_t seed);
Ratio horn_distance_sampled(const ImplicationList& h, const ImplicationList& target,
                            std::uint64_t n, std::uint64_t seed);

// Fraction of h's implications valid in ctx; nullopt when h is empty.
std::optional<Ratio> precision(const FormalContext& ctx, const ImplicationList& h,
                               std::size_t cap = kDefaultEnumerationCap);

// Fraction of canonical-basis implications entailed by h; nullopt when the
// canonical basis is empty.
std::optional<Ratio> recall(const FormalContext& ctx, const ImplicationList& h,
                            std::size_t cap = kDefaultEnumerationCap);

struct EvalReport {
  Ratio horn_distance;
  std::optional<Ratio> precision;
  std::optional<Ratio> recall;
  std::size_t basis_size = 0;
  std::size_t canonical_size = 0;
  bool sampled = false;
  std::uint64_t sample_n = 0;  // sampled mode only
  std::uint64_t seed = 0;      // sampled mode only

  std::string to_key_values() const;
};

EvalReport evaluate(const FormalContext& ctx, const ImplicationList& h,
                    std::size_t cap = kDefaultEnumerationCap);
EvalReport evaluate_sampled(const FormalContext& ctx, const ImplicationList& h, std::uint64_t n,
                            std::uint64_t seed, std::size_t cap = kDefaultEnumerationCap);

}  // namespace fcai
