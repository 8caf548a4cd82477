#include "learn.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "errors.hpp"

namespace fcai {

MembershipOracle::MembershipOracle(UniversePtr universe, Fn fn)
    : universe_(std::move(universe)), fn_(std::move(fn)) {}

bool MembershipOracle::query(const AttributeSet& x) {
  require_same_universe(universe_, x.universe());
  ++queries_;
  return fn_(x);
}

EquivalenceOracle::EquivalenceOracle(UniversePtr universe, Fn fn)
    : universe_(std::move(universe)), fn_(std::move(fn)) {}

std::optional<AttributeSet> EquivalenceOracle::query(const ImplicationList& hypothesis) {
  require_same_universe(universe_, hypothesis.universe());
  ++calls_;
  return fn_(hypothesis);
}

SubsetSampler::SubsetSampler(UniversePtr universe, std::string descriptor, std::uint64_t seed,
                             DrawFn fn)
    : universe_(std::move(universe)), descriptor_(std::move(descriptor)), rng_(seed),
      fn_(std::move(fn)) {}

AttributeSet SubsetSampler::draw() {
  ++draws_;
  return fn_(rng_);
}

SubsetSampler uniform_sampler(UniversePtr universe, std::uint64_t seed) {
  auto u = universe;
  auto draw = [u](Rng& rng) {
    AttributeSet s(u);
    const std::size_t n = u->size();
    for (std::size_t j = 0; j < n; ++j)
      if (rng.next_u64() & 1ULL) s.add(j);
    return s;
  };
  return SubsetSampler(std::move(universe), "uniform", seed, std::move(draw));
}

SubsetSampler biased_sampler(UniversePtr universe, std::vector<double> probabilities,
                             std::uint64_t seed) {
  if (probabilities.size() != universe->size())
    throw std::invalid_argument("need one inclusion probability per attribute");
  for (double p : probabilities)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("inclusion probabilities must lie in [0, 1]");
  std::string descriptor = "biased:";
  for (std::size_t j = 0; j < probabilities.size(); ++j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", probabilities[j]);
    if (j) descriptor += ',';
    descriptor += buf;
  }
  auto u = universe;
  auto probs = std::move(probabilities);
  auto draw = [u, probs](Rng& rng) {
    AttributeSet s(u);
    for (std::size_t j = 0; j < probs.size(); ++j) {
      const double roll = rng.next_double();  // always drawn, keeps streams aligned
      if (roll < probs[j]) s.add(j);
    }
    return s;
  };
  return SubsetSampler(std::move(universe), std::move(descriptor), seed, std::move(draw));
}

std::string SamplerSpec::descriptor() const {
  if (kind == Kind::Uniform) return "uniform";
  std::string out = "biased:";
  for (std::size_t j = 0; j < probabilities.size(); ++j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", probabilities[j]);
    if (j) out += ',';
    out += buf;
  }
  return out;
}

SamplerSpec SamplerSpec::parse(std::string_view descriptor) {
  SamplerSpec spec;
  if (descriptor == "uniform" || descriptor.empty()) return spec;
  constexpr std::string_view prefix = "biased:";
  if (descriptor.substr(0, prefix.size()) != prefix)
    throw std::invalid_argument("unknown sampler descriptor: " + std::string(descriptor));
  spec.kind = Kind::Biased;
  std::string_view rest = descriptor.substr(prefix.size());
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    std::string token(rest.substr(0, comma));
    try {
      std::size_t used = 0;
      spec.probabilities.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad probability in sampler descriptor: " + token);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (spec.probabilities.empty())
    throw std::invalid_argument("biased sampler needs at least one probability");
  return spec;
}

SubsetSampler make_sampler(UniversePtr universe, const SamplerSpec& spec, std::uint64_t seed) {
  if (spec.kind == SamplerSpec::Kind::Uniform) return uniform_sampler(std::move(universe), seed);
  return biased_sampler(std::move(universe), spec.probabilities, seed);
}

void PacParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
}

std::uint64_t sample_count(double epsilon, double delta, std::uint64_t i) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
  if (i < 1) throw std::invalid_argument("equivalence query index starts at 1");
  double v = (static_cast<double>(i) - std::log2(delta)) / epsilon;
  // guard the ceiling: a value within 2^-40 above an integer is float noise
  if (v - std::floor(v) <= 0x1.0p-40) v -= 0x1.0p-40;
  return static_cast<std::uint64_t>(std::ceil(v));
}

ImplicationList horn1(const UniversePtr& universe, MembershipOracle& member,
                      EquivalenceOracle& equiv) {
  require_same_universe(universe, member.universe());
  require_same_universe(universe, equiv.universe());
  const AttributeSet full = AttributeSet::full(universe);
  ImplicationList hypothesis(universe);
  while (auto counterexample = equiv.query(hypothesis)) {
    const AttributeSet& c = *counterexample;
    require_same_universe(universe, c.universe());
    const bool model_of_h = is_model(c, hypothesis);
    if (c == full)
      throw ProtocolError("equivalence oracle returned " + c.to_string() +
                          " = M, which models every implication set");
    const bool model_of_l = member.query(c);
    if (model_of_h == model_of_l)
      throw ProtocolError("equivalence oracle returned " + c.to_string() +
                          ", which is not a counterexample under the membership oracle");
    if (model_of_l) {
      // positive: shrink the conclusion of every implication violated by c
      for (auto& imp : hypothesis)
        if (imp.premise.subset_of(c) && !imp.conclusion.subset_of(c)) imp.conclusion &= c;
    } else {
      // negative: refine the first implication whose premise meets c in a
      // strictly smaller non-model, otherwise record c -> M
      bool replaced = false;
      for (auto& imp : hypothesis) {
        AttributeSet meet = imp.premise & c;
        if (meet != imp.premise && !member.query(meet)) {
          AttributeSet widened = imp.conclusion | (imp.premise - c);
          imp = Implication(std::move(meet), std::move(widened));
          replaced = true;
          break;
        }
      }
      if (!replaced) hypothesis.push_back(Implication(c, full));
    }
  }
  return hypothesis;
}

EquivalenceOracle make_sampling_equivalence_oracle(MembershipOracle& member,
                                                   std::shared_ptr<SubsetSampler> sampler,
                                                   double epsilon, double delta) {
  if (!sampler) throw std::invalid_argument("sampling oracle needs a sampler");
  struct State {
    std::shared_ptr<SubsetSampler> sampler;
    std::uint64_t i = 0;
  };
  auto state = std::make_shared<State>(State{std::move(sampler), 0});
  UniversePtr universe = state->sampler->universe();
  auto fn = [state, &member, epsilon, delta](
                const ImplicationList& hypothesis) -> std::optional<AttributeSet> {
    ++state->i;
    const std::uint64_t draws = sample_count(epsilon, delta, state->i);
    for (std::uint64_t t = 0; t < draws; ++t) {
      AttributeSet x = state->sampler->draw();
      const bool model_of_l = member.query(x);  // single query per draw
      const bool model_of_h = is_model(x, hypothesis);
      if (model_of_l != model_of_h) return x;
    }
    return std::nullopt;
  };
  return EquivalenceOracle(std::move(universe), std::move(fn));
}

std::string RunStats::to_key_values() const {
  char buf[64];
  std::string out;
  out += "seed=" + std::to_string(seed) + "\n";
  std::snprintf(buf, sizeof buf, "epsilon=%.17g\n", epsilon);
  out += buf;
  std::snprintf(buf, sizeof buf, "delta=%.17g\n", delta);
  out += buf;
  out += "i_final=" + std::to_string(i_final) + "\n";
  out += "membership_queries=" + std::to_string(membership_queries) + "\n";
  out += "samples_drawn=" + std::to_string(samples_drawn) + "\n";
  out += "basis_size=" + std::to_string(basis_size) + "\n";
  out += "sampler=" + sampler + "\n";
  return out;
}

std::pair<ImplicationList, RunStats> pac_basis(const UniversePtr& universe,
                                               MembershipOracle& member, const PacParams& params) {
  params.validate();
  auto sampler =
      std::make_shared<SubsetSampler>(make_sampler(universe, params.sampler, params.seed));
  EquivalenceOracle equiv =
      make_sampling_equivalence_oracle(member, sampler, params.epsilon, params.delta);
  const std::uint64_t queries_before = member.queries();
  ImplicationList basis = horn1(universe, member, equiv);
  RunStats stats;
  stats.seed = params.seed;
  stats.epsilon = params.epsilon;
  stats.delta = params.delta;
  stats.i_final = equiv.calls();
  stats.membership_queries = member.queries() - queries_before;
  stats.samples_drawn = sampler->draws();
  stats.basis_size = basis.size();
  stats.sampler = sampler->descriptor();
  return {std::move(basis), std::move(stats)};
}

MembershipOracle context_membership_oracle(const FormalContext& ctx) {
  auto shared = std::make_shared<const FormalContext>(ctx);
  const std::size_t n = shared->attribute_count();
  if (n <= 20) {
    // memoized per subset; the answer is deterministic so only the backing
    // computation is skipped on repeats
    auto cache = std::make_shared<std::vector<signed char>>(std::size_t(1) << n, -1);
    auto fn = [shared, cache](const AttributeSet& x) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < shared->attribute_count(); ++j)
        if (x.contains(j)) key |= 1ULL << j;
      signed char& slot = (*cache)[key];
      if (slot < 0) slot = shared->is_intent(x) ? 1 : 0;
      return slot == 1;
    };
    return MembershipOracle(shared->universe(), std::move(fn));
  }
  auto fn = [shared](const AttributeSet& x) { return shared->is_intent(x); };
  return MembershipOracle(shared->universe(), std::move(fn));
}

EquivalenceOracle exact_equivalence_oracle(const FormalContext& ctx, std::size_t cap) {
  auto shared = std::make_shared<const FormalContext>(ctx);
  auto fn = [shared, cap](const ImplicationList& hypothesis) -> std::optional<AttributeSet> {
    const std::size_t n = shared->attribute_count();
    require_enumerable(n, cap);
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t c = 0; c < total; ++c) {
      AttributeSet x = AttributeSet::from_counter(shared->universe(), c);
      if (shared->is_intent(x) != is_model(x, hypothesis)) return x;
    }
    return std::nullopt;
  };
  return EquivalenceOracle(shared->universe(), std::move(fn));
}

}  // namespace fcai
