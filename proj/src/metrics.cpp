#include "metrics.hpp"

#include <cstdio>

#include "errors.hpp"
#include "learn.hpp"

namespace fcai {

namespace {

void require_distance_enumerable(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapacityError("attribute count " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap) + "; use horn_distance_sampled");
}

template <typename InTarget>
Ratio exact_distance(const ImplicationList& h, const UniversePtr& universe, std::size_t cap,
                     InTarget&& in_target) {
  const std::size_t n = universe->size();
  require_distance_enumerable(n, cap);
  const std::uint64_t total = 1ULL << n;
  std::uint64_t mismatches = 0;
  for (std::uint64_t c = 0; c < total; ++c) {
    AttributeSet x = AttributeSet::from_counter(universe, c);
    if (is_model(x, h) != in_target(x)) ++mismatches;
  }
  return Ratio{mismatches, total};
}

template <typename InTarget>
Ratio sampled_distance(const ImplicationList& h, const UniversePtr& universe, std::uint64_t n,
                       std::uint64_t seed, InTarget&& in_target) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  SubsetSampler sampler = uniform_sampler(universe, seed);
  std::uint64_t mismatches = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    AttributeSet x = sampler.draw();
    if (is_model(x, h) != in_target(x)) ++mismatches;
  }
  return Ratio{mismatches, n};
}

}  // namespace

Ratio horn_distance(const ImplicationList& h, const FormalContext& target, std::size_t cap) {
  require_same_universe(h.universe(), target.universe());
  return exact_distance(h, h.universe(), cap,
                        [&target](const AttributeSet& x) { return target.is_intent(x); });
}

Ratio horn_distance(const ImplicationList& h, const ImplicationList& target, std::size_t cap) {
  require_same_universe(h.universe(), target.universe());
  return exact_distance(h, h.universe(), cap,
                        [&target](const AttributeSet& x) { return is_model(x, target); });
}

Ratio horn_distance_sampled(const ImplicationList& h, const FormalContext& target,
                            std::uint64_t n, std::uint64_t seed) {
  require_same_universe(h.universe(), target.universe());
  return sampled_distance(h, h.universe(), n, seed,
                          [&target](const AttributeSet& x) { return target.is_intent(x); });
}

Ratio horn_distance_sampled(const ImplicationList& h, const ImplicationList& target,
                            std::uint64_t n, std::uint64_t seed) {
  require_same_universe(h.universe(), target.universe());
  return sampled_distance(h, h.universe(), n, seed,
                          [&target](const AttributeSet& x) { return is_model(x, target); });
}

std::optional<Ratio> precision(const FormalContext& ctx, const ImplicationList& h,
                               std::size_t cap) {
  require_same_universe(ctx.universe(), h.universe());
  require_enumerable(ctx.attribute_count(), cap);
  if (h.empty()) return std::nullopt;
  std::uint64_t valid = 0;
  for (const auto& imp : h)
    if (is_valid_in(ctx, imp)) ++valid;
  return Ratio{valid, h.size()};
}

namespace {
std::optional<Ratio> recall_from(const ImplicationList& canonical, const ImplicationList& h) {
  if (canonical.empty()) return std::nullopt;
  std::uint64_t entailed = 0;
  for (const auto& imp : canonical)
    if (entails(h, imp)) ++entailed;
  return Ratio{entailed, canonical.size()};
}
}  // namespace

std::optional<Ratio> recall(const FormalContext& ctx, const ImplicationList& h, std::size_t cap) {
  require_same_universe(ctx.universe(), h.universe());
  return recall_from(canonical_basis(ctx, cap), h);
}

namespace {
std::string ratio_cell(const std::optional<Ratio>& r) {
  if (!r) return "undefined";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", r->value());
  return buf;
}
}  // namespace

std::string EvalReport::to_key_values() const {
  char buf[64];
  std::string out;
  std::snprintf(buf, sizeof buf, "horn_distance=%.6g\n", horn_distance.value());
  out += buf;
  out += "precision=" + ratio_cell(precision) + "\n";
  out += "recall=" + ratio_cell(recall) + "\n";
  out += "basis_size=" + std::to_string(basis_size) + "\n";
  out += "canonical_size=" + std::to_string(canonical_size) + "\n";
  if (sampled) {
    out += "mode=sampled\n";
    out += "samples=" + std::to_string(sample_n) + "\n";
    out += "seed=" + std::to_string(seed) + "\n";
  } else {
    out += "mode=exact\n";
  }
  return out;
}

EvalReport evaluate(const FormalContext& ctx, const ImplicationList& h, std::size_t cap) {
  EvalReport report;
  report.horn_distance = horn_distance(h, ctx, cap);
  report.precision = precision(ctx, h, cap);
  const ImplicationList canonical = canonical_basis(ctx, cap);
  report.recall = recall_from(canonical, h);
  report.basis_size = h.size();
  report.canonical_size = canonical.size();
  return report;
}

EvalReport evaluate_sampled(const FormalContext& ctx, const ImplicationList& h, std::uint64_t n,
                            std::uint64_t seed, std::size_t cap) {
  EvalReport report;
  report.sampled = true;
  report.sample_n = n;
  report.seed = seed;
  report.horn_distance = horn_distance_sampled(h, ctx, n, seed);
  report.basis_size = h.size();
  if (ctx.attribute_count() <= cap) {
    report.precision = precision(ctx, h, cap);
    const ImplicationList canonical = canonical_basis(ctx, cap);
    report.recall = recall_from(canonical, h);
    report.canonical_size = canonical.size();
  }
  return report;
}

}  // namespace fcai
