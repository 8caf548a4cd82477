#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "attribute_set.hpp"
#include "context.hpp"
#include "implication.hpp"
#include "lectic.hpp"
#include "rng.hpp"

namespace fcai {

// Answers whether a set is a model of the hidden theory. Deterministic for a
// fixed argument; the counter increments exactly once per query.
class MembershipOracle {
 public:
  using Fn = std::function<bool(const AttributeSet&)>;
  MembershipOracle(UniversePtr universe, Fn fn);

  bool query(const AttributeSet& x);
  std::uint64_t queries() const { return queries_; }
  const UniversePtr& universe() const { return universe_; }

 private:
  UniversePtr universe_;
  Fn fn_;
  std::uint64_t queries_ = 0;
};

// Answers whether a hypothesis is equivalent to the hidden theory, otherwise
// yields a counterexample from the symmetric difference of the model sets.
class EquivalenceOracle {
 public:
  using Fn = std::function<std::optional<AttributeSet>(const ImplicationList&)>;
  EquivalenceOracle(UniversePtr universe, Fn fn);

  std::optional<AttributeSet> query(const ImplicationList& hypothesis);
  std::uint64_t calls() const { return calls_; }
  const UniversePtr& universe() const { return universe_; }

 private:
  UniversePtr universe_;
  Fn fn_;
  std::uint64_t calls_ = 0;
};

// Seeded subset source; the draw sequence is reproducible per seed.
class SubsetSampler {
 public:
  using DrawFn = std::function<AttributeSet(Rng&)>;
  SubsetSampler(UniversePtr universe, std::string descriptor, std::uint64_t seed, DrawFn fn);

  AttributeSet draw();
  std::uint64_t draws() const { return draws_; }
  const std::string& descriptor() const { return descriptor_; }
  const UniversePtr& universe() const { return universe_; }

 private:
  UniversePtr universe_;
  std::string descriptor_;
  Rng rng_;
  DrawFn fn_;
  std::uint64_t draws_ = 0;
};

// Each attribute independently with probability 1/2.
SubsetSampler uniform_sampler(UniversePtr universe, std::uint64_t seed);
// Independent per-attribute inclusion probabilities; probabilities.size()
// must equal |M| and every value lie in [0, 1].
SubsetSampler biased_sampler(UniversePtr universe, std::vector<double> probabilities,
                             std::uint64_t seed);

// How a sampler is to be constructed; round-trips through the descriptor
// strings "uniform" and "biased:p1,p2,...".
struct SamplerSpec {
  enum class Kind { Uniform, Biased };
  Kind kind = Kind::Uniform;
  std::vector<double> probabilities;  // Biased only

  std::string descriptor() const;
  static SamplerSpec parse(std::string_view descriptor);
};

SubsetSampler make_sampler(UniversePtr universe, const SamplerSpec& spec, std::uint64_t seed);

// Accuracy/confidence parameters for pac_basis.
struct PacParams {
  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 0;
  SamplerSpec sampler;

  void validate() const;  // 0 < epsilon <= 1, 0 < delta <= 1
};

// l_i = ceil((1/epsilon) * (i - log2 delta)). Computed in double precision;
// values within 2^-40 above an integer are pulled back before the ceiling so
// float noise cannot add a spurious extra step.
std::uint64_t sample_count(double epsilon, double delta, std::uint64_t i);

// HORN1. With exact oracles the result is the canonical basis of the hidden
// theory. Each counterexample is validated against the membership oracle; an
// inconsistent pair of oracles raises ProtocolError naming the set.
ImplicationList horn1(const UniversePtr& universe, MembershipOracle& member,
                      EquivalenceOracle& equiv);

// Sampling equivalence oracle: on its i-th call it draws l_i subsets and
// returns the first one on which the membership answer and the hypothesis
// disagree. Borrows `member` (one query per draw); the sampler is shared so
// callers can read the total draw count afterwards.
EquivalenceOracle make_sampling_equivalence_oracle(MembershipOracle& member,
                                                   std::shared_ptr<SubsetSampler> sampler,
                                                   double epsilon, double delta);

struct RunStats {
  std::uint64_t seed = 0;
  double epsilon = 0;
  double delta = 0;
  std::uint64_t i_final = 0;  // equivalence oracle calls
  std::uint64_t membership_queries = 0;
  std::uint64_t samples_drawn = 0;
  std::uint64_t basis_size = 0;
  std::string sampler;

  std::string to_key_values() const;  // "seed=..\nepsilon=..\n..."
};

// horn1 driven by the sampling equivalence oracle (Angluin-style PAC basis).
std::pair<ImplicationList, RunStats> pac_basis(const UniversePtr& universe,
                                               MembershipOracle& member, const PacParams& params);

// Membership oracle answering true exactly on the intents of ctx. Holds its
// own copy of the context; memoizes per queried set for small universes.
MembershipOracle context_membership_oracle(const FormalContext& ctx);

// Brute-force exact equivalence oracle for ctx: scans all subsets in lectic
// order and returns the smallest element of Mod(H) triangle Int(ctx).
EquivalenceOracle exact_equivalence_oracle(const FormalContext& ctx,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace fcai
