#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "lectic.hpp"

namespace fcai {

// Biased-coin context generator parameters.
struct GenSpec {
  std::size_t num_attributes = 10;
  std::pair<std::uint32_t, std::uint32_t> object_count_range{1, 400};
  std::pair<double, double> density_range{0.0, 1.0};
  std::uint64_t seed = 0;

  static constexpr std::uint32_t kMaxObjects = 4096;
  void validate() const;
};

// Object count uniform in range, density uniform in range, each cross an
// independent coin flip; fully determined by the seed. Attributes are named
// a1..aN, objects g1..gK.
FormalContext random_context(const GenSpec& spec);

struct CorpusEntry {
  FormalContext context;
  std::uint64_t seed;     // per-attempt stream seed
  std::uint32_t objects;
  double density;
  std::size_t canonical_size;
};

// Generates until `count` contexts satisfy |Can| >= min_basis_size, deriving
// one stream seed per attempt. Throws GenerationExhausted after
// max_attempts_factor * count failed-through attempts.
std::vector<CorpusEntry> corpus(const GenSpec& spec, std::size_t count,
                                std::size_t min_basis_size,
                                std::size_t cap = kDefaultEnumerationCap,
                                std::size_t max_attempts_factor = 100);

// index,seed,objects,density,canonical_size
std::string corpus_manifest_csv(const std::vector<CorpusEntry>& entries);

// The 13x9 Star-Alliance context (airlines vs. regions served, pre-2002).
FormalContext star_alliance();

}  // namespace fcai
