#include "datagen.hpp"

#include <cstdio>
#include <stdexcept>

#include "errors.hpp"
#include "implication.hpp"
#include "rng.hpp"

namespace fcai {

void GenSpec::validate() const {
  if (num_attributes == 0) throw std::invalid_argument("need at least one attribute");
  if (object_count_range.first < 1)
    throw std::invalid_argument("object count range must start at 1 or above");
  if (object_count_range.second > kMaxObjects)
    throw std::invalid_argument("object count range exceeds the maximum of " +
                                std::to_string(kMaxObjects));
  if (object_count_range.first > object_count_range.second)
    throw std::invalid_argument("empty object count range");
  const auto [lo, hi] = density_range;
  if (!(lo >= 0.0 && lo <= 1.0 && hi >= 0.0 && hi <= 1.0 && lo <= hi))
    throw std::invalid_argument("density range must be an interval within [0, 1]");
}

namespace {

struct Generated {
  FormalContext context;
  std::uint32_t objects;
  double density;
};

Generated generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  const std::uint32_t objects = static_cast<std::uint32_t>(
      rng.next_in_range(spec.object_count_range.first, spec.object_count_range.second));
  const auto [dlo, dhi] = spec.density_range;
  const double density = dlo + rng.next_double() * (dhi - dlo);

  std::vector<std::string> names;
  names.reserve(spec.num_attributes);
  for (std::size_t j = 0; j < spec.num_attributes; ++j)
    names.push_back("a" + std::to_string(j + 1));
  UniversePtr universe = AttributeUniverse::make(std::move(names));

  std::vector<std::string> labels;
  std::vector<AttributeSet> rows;
  labels.reserve(objects);
  rows.reserve(objects);
  for (std::uint32_t g = 0; g < objects; ++g) {
    labels.push_back("g" + std::to_string(g + 1));
    AttributeSet row(universe);
    for (std::size_t j = 0; j < spec.num_attributes; ++j)
      if (rng.next_double() < density) row.add(j);
    rows.push_back(std::move(row));
  }
  return Generated{FormalContext(std::move(universe), std::move(labels), std::move(rows)),
                   objects, density};
}

}  // namespace

FormalContext random_context(const GenSpec& spec) {
  spec.validate();
  return generate(spec).context;
}

std::vector<CorpusEntry> corpus(const GenSpec& spec, std::size_t count,
                                std::size_t min_basis_size, std::size_t cap,
                                std::size_t max_attempts_factor) {
  spec.validate();
  if (count < 1) throw std::invalid_argument("corpus size must be at least 1");
  require_enumerable(spec.num_attributes, cap);
  const std::size_t max_attempts = max_attempts_factor * count;
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts)
      throw GenerationExhausted("gave up after " + std::to_string(max_attempts) +
                                " attempts with only " + std::to_string(out.size()) + " of " +
                                std::to_string(count) + " contexts passing |Can| >= " +
                                std::to_string(min_basis_size));
    GenSpec attempt_spec = spec;
    attempt_spec.seed = derive_stream_seed(spec.seed, attempt);
    Generated g = generate(attempt_spec);
    const std::size_t can_size = canonical_basis(g.context, cap).size();
    if (can_size < min_basis_size) continue;
    out.push_back(
        CorpusEntry{std::move(g.context), attempt_spec.seed, g.objects, g.density, can_size});
  }
  return out;
}

std::string corpus_manifest_csv(const std::vector<CorpusEntry>& entries) {
  std::string out = "index,seed,objects,density,canonical_size\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", entries[i].density);
    out += std::to_string(i) + "," + std::to_string(entries[i].seed) + "," +
           std::to_string(entries[i].objects) + "," + buf + "," +
           std::to_string(entries[i].canonical_size) + "\n";
  }
  return out;
}

FormalContext star_alliance() {
  const std::vector<std::string> attribute_names = {
      "Latin America", "Europe",  "Canada",    "Asia Pacific",  "Middle East",
      "Africa",        "Mexico",  "Caribbean", "United States",
  };
  // rows as X/. strings over the column order above
  const std::vector<std::pair<std::string, std::string>> table = {
      {"Air Canada", "XXXXX.XXX"},
      {"Air New Zealand", ".X.X....X"},
      {"All Nippon Airways", ".X.X....X"},
      {"Ansett Australia", "...X....."},
      {"The Austrian Airlines Group", ".XXXXX..X"},
      {"British Midlands", ".X......."},
      {"Lufthansa", "XXXXXXX.X"},
      {"Mexicana", "X.X...XXX"},
      {"Scandinavian Airlines", "XX.X.X..X"},
      {"Singapore Airlines", ".XXXXX..X"},
      {"Thai Airways International", "XX.X...XX"},
      {"United Airlines", "XXXX..XXX"},
      {"VARIG", "XX.X.XX.X"},
  };
  UniversePtr universe = AttributeUniverse::make(attribute_names);
  std::vector<std::string> labels;
  std::vector<AttributeSet> rows;
  for (const auto& [label, cells] : table) {
    labels.push_back(label);
    AttributeSet row(universe);
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j] == 'X') row.add(j);
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(universe), std::move(labels), std::move(rows));
}

}  // namespace fcai
