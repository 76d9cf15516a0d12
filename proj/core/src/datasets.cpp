#include "caloss/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "caloss/fingerprint.hpp"
#include "caloss/rng.hpp"

namespace caloss {

std::string to_string(DatasetName name) {
  switch (name) {
    case DatasetName::Asia: return "ASIA";
    case DatasetName::Cancer: return "CANCER";
    case DatasetName::Earthquake: return "EARTHQUAKE";
    case DatasetName::Chc: return "CHC";
  }
  throw std::invalid_argument("bad dataset enum");
}

DatasetName dataset_from_string(const std::string& s) {
  if (s == "ASIA") return DatasetName::Asia;
  if (s == "CANCER") return DatasetName::Cancer;
  if (s == "EARTHQUAKE") return DatasetName::Earthquake;
  if (s == "CHC") return DatasetName::Chc;
  throw std::invalid_argument("unknown dataset: " + s);
}

std::vector<int> DatasetSpec::target_indices() const {
  std::vector<int> out;
  for (const auto& t : targets) {
    const auto it = std::find(variables.begin(), variables.end(), t);
    out.push_back(static_cast<int>(it - variables.begin()));
  }
  return out;
}

std::vector<int> DatasetSpec::conditional_indices() const {
  std::vector<int> out;
  for (const auto& c : conditionals) {
    const auto it = std::find(variables.begin(), variables.end(), c);
    out.push_back(static_cast<int>(it - variables.begin()));
  }
  return out;
}

DatasetSpec make_dataset_spec(DatasetName name, int samples_per_regime) {
  DatasetSpec spec;
  spec.name = name;
  spec.samples_per_regime = samples_per_regime;
  switch (name) {
    case DatasetName::Asia:
      spec.variables = {"asia", "tub",    "smoke", "lung",
                        "bronc", "either", "xray",  "dysp"};
      spec.targets = {"xray", "dysp"};
      break;
    case DatasetName::Cancer:
      spec.variables = {"pollution", "smoker", "cancer", "xray", "dysp"};
      spec.targets = {"xray", "dysp"};
      break;
    case DatasetName::Earthquake:
      spec.variables = {"burglary", "earthquake", "alarm", "john_calls",
                        "mary_calls"};
      spec.targets = {"john_calls", "mary_calls"};
      break;
    case DatasetName::Chc:
      spec.variables = {"age", "food", "health", "mobility", "d1", "d2", "d3"};
      spec.targets = {"d1", "d2", "d3"};
      break;
  }
  for (const auto& v : spec.variables) {
    if (std::find(spec.targets.begin(), spec.targets.end(), v) ==
        spec.targets.end()) {
      spec.conditionals.push_back(v);
    }
  }
  return spec;
}

namespace {

// CPTs for ASIA follow Lauritzen & Spiegelhalter (1988); CANCER and
// EARTHQUAKE follow Korb & Nicholson, "Bayesian Artificial Intelligence".
Scm build_asia() {
  Scm scm;
  scm.graph = Dag({"asia", "tub", "smoke", "lung", "bronc", "either", "xray",
                   "dysp"},
                  {{"asia", "tub"},
                   {"smoke", "lung"},
                   {"smoke", "bronc"},
                   {"tub", "either"},
                   {"lung", "either"},
                   {"either", "xray"},
                   {"either", "dysp"},
                   {"bronc", "dysp"}});
  scm.mechanisms = {
      make_root_bernoulli(0.01),
      make_cpt({"asia"}, {0.01, 0.05}),
      make_root_bernoulli(0.5),
      make_cpt({"smoke"}, {0.01, 0.1}),
      make_cpt({"smoke"}, {0.3, 0.6}),
      make_cpt({"tub", "lung"}, {0.0, 1.0, 1.0, 1.0}),  // logical OR
      make_cpt({"either"}, {0.05, 0.98}),
      make_cpt({"either", "bronc"}, {0.1, 0.7, 0.8, 0.9}),
  };
  return scm;
}

Scm build_cancer() {
  Scm scm;
  scm.graph = Dag({"pollution", "smoker", "cancer", "xray", "dysp"},
                  {{"pollution", "cancer"},
                   {"smoker", "cancer"},
                   {"cancer", "xray"},
                   {"cancer", "dysp"}});
  // pollution = 1 means high.
  scm.mechanisms = {
      make_root_bernoulli(0.1),
      make_root_bernoulli(0.3),
      make_cpt({"pollution", "smoker"}, {0.001, 0.02, 0.03, 0.05}),
      make_cpt({"cancer"}, {0.2, 0.9}),
      make_cpt({"cancer"}, {0.3, 0.65}),
  };
  return scm;
}

Scm build_earthquake() {
  Scm scm;
  scm.graph = Dag({"burglary", "earthquake", "alarm", "john_calls",
                   "mary_calls"},
                  {{"burglary", "alarm"},
                   {"earthquake", "alarm"},
                   {"alarm", "john_calls"},
                   {"alarm", "mary_calls"}});
  scm.mechanisms = {
      make_root_bernoulli(0.01),
      make_root_bernoulli(0.02),
      make_cpt({"burglary", "earthquake"}, {0.001, 0.94, 0.29, 0.95}),
      make_cpt({"alarm"}, {0.05, 0.9}),
      make_cpt({"alarm"}, {0.01, 0.7}),
  };
  return scm;
}

// --- Causal Health Classification -----------------------------------------
//
// Base chain age -> food, (age, food) -> health, health -> mobility with
// Gaussian noises, scaled so the three diagnosis scores fall out at roughly
// 20/37/43 percent. Diagnosis d_i is the indicator of score f_i winning the
// argmax; the three indicators share noise draws, so exactly one is active.

constexpr double kChcAgeLo = 0.0;
constexpr double kChcAgeHi = 100.0;
constexpr double kChcFoodPerAge = 0.5;
constexpr double kChcFoodNoise = 10.0;
constexpr double kChcHealthBase = 80.0;
constexpr double kChcHealthPerAge = -0.5;
constexpr double kChcHealthPerFood = 0.2;
constexpr double kChcHealthNoise = 10.0;
constexpr double kChcMobilityPerHealth = 0.8;
constexpr double kChcMobilityNoise = 10.0;

double chc_f1_mean(double age) {
  if (age <= 45.667) {
    return 0.00108 * age * age * age - 0.08862 * age * age + 1.337 * age + 30.0;
  }
  return 9.09837;
}

double chc_f2_mean(double food, double mobility) {
  return 0.0175 * food + 0.525 * mobility;
}

double chc_f3_mean(double age, double health) {
  return 0.00013857 * age * age * age - 0.0135 * age * age + 0.2025 * age +
         0.2025 * health + 17.1714;
}

Scm build_chc() {
  Scm scm;
  std::vector<std::pair<std::string, std::string>> edges = {
      {"age", "food"}, {"age", "health"}, {"food", "health"},
      {"health", "mobility"}};
  for (const auto* d : {"d1", "d2", "d3"}) {
    for (const auto* p : {"age", "food", "health", "mobility"}) {
      edges.emplace_back(p, d);
    }
  }
  scm.graph = Dag({"age", "food", "health", "mobility", "d1", "d2", "d3"},
                  edges);

  scm.mechanisms.push_back(make_uniform(false, kChcAgeLo, kChcAgeHi));
  scm.mechanisms.push_back(make_continuous(
      {"age"},
      [](std::span<const double> p) { return kChcFoodPerAge * p[0]; },
      kChcFoodNoise));
  scm.mechanisms.push_back(make_continuous(
      {"age", "food"},
      [](std::span<const double> p) {
        return kChcHealthBase + kChcHealthPerAge * p[0] +
               kChcHealthPerFood * p[1];
      },
      kChcHealthNoise));
  scm.mechanisms.push_back(make_continuous(
      {"health"},
      [](std::span<const double> p) { return kChcMobilityPerHealth * p[0]; },
      kChcMobilityNoise));

  // Scores take parent values in declared parent order (age, food, health,
  // mobility). Noise streams sit past the variable streams.
  const std::vector<ArgmaxScore> scores = {
      {[](std::span<const double> p) { return chc_f1_mean(p[0]); },
       [](std::span<const double>) { return 10.0; }},
      {[](std::span<const double> p) { return chc_f2_mean(p[1], p[3]); },
       [](std::span<const double>) { return 5.0; }},
      {[](std::span<const double> p) { return chc_f3_mean(p[0], p[2]); },
       [](std::span<const double> p) { return 0.2 * p[0]; }},
  };
  const std::vector<std::string> d_parents = {"age", "food", "health",
                                              "mobility"};
  for (int i = 0; i < 3; ++i) {
    Mechanism m;
    m.parents = d_parents;
    m.impl = ArgmaxIndicatorMechanism{scores, i, /*noise_stream_base=*/7};
    scm.mechanisms.push_back(std::move(m));
  }
  return scm;
}

}  // namespace

Scm build_scm(DatasetName name) {
  switch (name) {
    case DatasetName::Asia: return build_asia();
    case DatasetName::Cancer: return build_cancer();
    case DatasetName::Earthquake: return build_earthquake();
    case DatasetName::Chc: return build_chc();
  }
  throw std::invalid_argument("bad dataset enum");
}

std::vector<int> RegimeData::train_rows() const {
  std::vector<int> out;
  out.reserve(batch.rows() - test_rows.size());
  std::size_t t = 0;
  for (int r = 0; r < batch.rows(); ++r) {
    if (t < test_rows.size() && test_rows[t] == r) {
      ++t;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

std::string bundle_fingerprint(const DatasetSpec& spec, std::uint64_t seed,
                               std::uint64_t split_seed) {
  std::ostringstream canon;
  canon << "caloss-bundle|v1|" << to_string(spec.name) << "|n="
        << spec.samples_per_regime << "|seed=" << seed
        << "|split=" << split_seed;
  for (const auto& v : spec.variables) canon << "|" << v;
  return fingerprint_of(canon.str());
}

DatasetBundle generate_bundle(const DatasetSpec& spec, std::uint64_t seed) {
  if (spec.samples_per_regime < 1) {
    throw std::invalid_argument("samples_per_regime must be >= 1");
  }
  const Scm scm = build_scm(spec.name);

  // Supports for continuous uniform replacements come from a fixed-size
  // observational probe so they do not depend on the bundle size.
  Eigen::VectorXd probe_lo, probe_hi;
  if (spec.is_continuous()) {
    const SampleBatch probe = sample(scm, 100000, seed);
    probe_lo = probe.values.colwise().minCoeff();
    probe_hi = probe.values.colwise().maxCoeff();
  }

  DatasetBundle bundle;
  bundle.spec = spec;
  bundle.seed = seed;
  bundle.split_seed = seed ^ 0x5c17ab1eULL;
  bundle.fingerprint = bundle_fingerprint(spec, seed, bundle.split_seed);

  std::vector<InterventionRegime> regimes;
  regimes.push_back(InterventionRegime::observational());
  for (const auto& c : spec.conditionals) {
    const int idx = scm.graph.index_of(c);
    const bool discrete = scm.mechanisms[idx].is_discrete();
    if (discrete) {
      regimes.push_back(InterventionRegime::binary_do(c));
    } else {
      regimes.push_back(
          InterventionRegime::uniform_do(c, probe_lo[idx], probe_hi[idx]));
    }
  }

  const StreamRng split_rng(bundle.split_seed);
  for (std::size_t k = 0; k < regimes.size(); ++k) {
    const Scm intervened = apply_intervention(scm, regimes[k]);
    RegimeData rd;
    rd.batch = sample(intervened, spec.samples_per_regime, seed);
    rd.batch.regime = regimes[k];

    std::vector<int> rows(spec.samples_per_regime);
    for (int r = 0; r < spec.samples_per_regime; ++r) rows[r] = r;
    StreamDraw draw(split_rng, k);
    draw.shuffle(rows);
    const int test_count = spec.samples_per_regime / 10;
    rd.test_rows.assign(rows.begin(), rows.begin() + test_count);
    std::sort(rd.test_rows.begin(), rd.test_rows.end());
    bundle.regimes.push_back(std::move(rd));
  }
  return bundle;
}

}  // namespace caloss
