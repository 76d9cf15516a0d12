#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "caloss/scm.hpp"

namespace caloss {

enum class DatasetName { Asia, Cancer, Earthquake, Chc };

std::string to_string(DatasetName name);
DatasetName dataset_from_string(const std::string& s);

// Which variables are modeled (targets) vs observed (conditionals) follows
// the usual split for these networks: ASIA (xray, dysp); CANCER (xray,
// dysp); EARTHQUAKE (john_calls, mary_calls); CHC (d1, d2, d3).
struct DatasetSpec {
  DatasetName name;
  std::vector<std::string> variables;     // declared order
  std::vector<std::string> targets;       // ordered subset
  std::vector<std::string> conditionals;  // the rest, declared order
  int samples_per_regime = 100000;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_targets() const { return static_cast<int>(targets.size()); }
  int num_conditionals() const { return static_cast<int>(conditionals.size()); }
  std::vector<int> target_indices() const;
  std::vector<int> conditional_indices() const;
  bool is_continuous() const { return name == DatasetName::Chc; }
};

DatasetSpec make_dataset_spec(DatasetName name, int samples_per_regime);

// The three discrete networks use their standard published CPTs; CHC extends
// the causal-health chain with three one-hot diagnosis indicators.
Scm build_scm(DatasetName name);

struct RegimeData {
  SampleBatch batch;
  std::vector<int> test_rows;  // sorted; the remaining rows are train

  std::vector<int> train_rows() const;
};

struct DatasetBundle {
  DatasetSpec spec;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  std::vector<RegimeData> regimes;  // [0] observational, then one per
                                    // conditional variable in declared order
  std::string fingerprint;

  int num_regimes() const { return static_cast<int>(regimes.size()); }
};

// One observational batch plus one perfect atomic intervention batch per
// conditional variable. All regimes share the base seed so non-intervened
// variables reuse the same noise draws.
DatasetBundle generate_bundle(const DatasetSpec& spec, std::uint64_t seed);

// Directory format: meta.json (spec, seeds, adjacency and split indices per
// regime) plus one CSV per regime with a variable-name header row.
void write_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir);
DatasetBundle read_bundle(const std::filesystem::path& dir);

std::string bundle_fingerprint(const DatasetSpec& spec, std::uint64_t seed,
                               std::uint64_t split_seed);

}  // namespace caloss
