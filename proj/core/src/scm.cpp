#include "caloss/scm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "caloss/rng.hpp"

namespace caloss {

Mechanism make_cpt(std::vector<std::string> parents, std::vector<double> p_one) {
  if (p_one.size() != (std::size_t{1} << parents.size())) {
    throw std::invalid_argument("CPT size does not match parent count");
  }
  for (const double p : p_one) {
    if (p < -1e-9 || p > 1.0 + 1e-9) {
      throw std::invalid_argument("CPT entry outside [0, 1]");
    }
  }
  return Mechanism{std::move(parents), CptMechanism{std::move(p_one)}};
}

Mechanism make_root_bernoulli(double p_one) {
  return make_cpt({}, {p_one});
}

Mechanism make_continuous(std::vector<std::string> parents,
                          std::function<double(std::span<const double>)> mean,
                          double noise_std) {
  return Mechanism{std::move(parents),
                   ContinuousMechanism{std::move(mean),
                                       [noise_std](std::span<const double>) {
                                         return noise_std;
                                       }}};
}

Mechanism make_continuous(std::vector<std::string> parents,
                          std::function<double(std::span<const double>)> mean,
                          std::function<double(std::span<const double>)> stddev) {
  return Mechanism{std::move(parents),
                   ContinuousMechanism{std::move(mean), std::move(stddev)}};
}

Mechanism make_uniform(bool binary, double lo, double hi) {
  return Mechanism{{}, UniformMechanism{binary, lo, hi}};
}

bool Scm::all_discrete() const {
  return std::all_of(mechanisms.begin(), mechanisms.end(),
                     [](const Mechanism& m) { return m.is_discrete(); });
}

void Scm::validate() const {
  if (static_cast<int>(mechanisms.size()) != graph.size()) {
    throw std::invalid_argument("mechanism count does not match graph size");
  }
  for (int v = 0; v < graph.size(); ++v) {
    std::vector<int> declared;
    declared.reserve(mechanisms[v].parents.size());
    for (const auto& p : mechanisms[v].parents) {
      declared.push_back(graph.index_of(p));
    }
    std::vector<int> structural = graph.parents_of(v);
    std::vector<int> sorted = declared;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != structural) {
      throw std::invalid_argument("mechanism parents of " + graph.name(v) +
                                  " do not match the graph");
    }
    if (const auto* cpt = std::get_if<CptMechanism>(&mechanisms[v].impl)) {
      if (cpt->p_one.size() != (std::size_t{1} << declared.size())) {
        throw std::invalid_argument("CPT of " + graph.name(v) +
                                    " has wrong size");
      }
    }
  }
  graph.topological_order();
}

Scm apply_intervention(const Scm& scm, const InterventionRegime& regime) {
  if (regime.is_observational()) return scm;
  Scm out = scm;
  const int t = out.graph.index_of(*regime.target);
  out.graph = mutilate(scm.graph, regime);
  out.mechanisms[t] = make_uniform(regime.binary, regime.lo, regime.hi);
  return out;
}

namespace {

double draw_value(const Scm& scm, int v, std::span<const double> parent_values,
                  const StreamRng& rng, std::uint64_t row) {
  const Mechanism& m = scm.mechanisms[v];
  const std::uint64_t stream = static_cast<std::uint64_t>(v);
  return std::visit(
      [&](const auto& impl) -> double {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, CptMechanism>) {
          std::size_t idx = 0;
          for (std::size_t j = 0; j < parent_values.size(); ++j) {
            if (parent_values[j] > 0.5) idx |= std::size_t{1} << j;
          }
          return rng.uniform(stream, row) < impl.p_one[idx] ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, ContinuousMechanism>) {
          const double sd = std::max(0.0, impl.stddev(parent_values));
          return impl.mean(parent_values) + sd * rng.gaussian(stream, row);
        } else if constexpr (std::is_same_v<T, ArgmaxIndicatorMechanism>) {
          int best = 0;
          double best_val = -std::numeric_limits<double>::infinity();
          for (std::size_t k = 0; k < impl.scores.size(); ++k) {
            const auto& s = impl.scores[k];
            const double sd = std::max(0.0, s.stddev(parent_values));
            const double val = s.mean(parent_values) +
                               sd * rng.gaussian(impl.noise_stream_base + k, row);
            if (val > best_val) {
              best_val = val;
              best = static_cast<int>(k);
            }
          }
          return best == impl.winner ? 1.0 : 0.0;
        } else {
          static_assert(std::is_same_v<T, UniformMechanism>);
          const double u = rng.uniform(stream, row);
          if (impl.binary) return u < 0.5 ? 1.0 : 0.0;
          return impl.lo + u * (impl.hi - impl.lo);
        }
      },
      m.impl);
}

}  // namespace

SampleBatch sample(const Scm& scm, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  scm.validate();
  const int d = scm.size();
  const StreamRng rng(seed);
  const std::vector<int> order = scm.graph.topological_order();

  SampleBatch batch;
  batch.values.resize(n, d);
  batch.regime = InterventionRegime::observational();
  batch.adjacency = scm.graph.adjacency();

  std::vector<double> parent_values;
  for (int r = 0; r < n; ++r) {
    for (const int v : order) {
      parent_values.clear();
      for (const auto& pname : scm.mechanisms[v].parents) {
        parent_values.push_back(batch.values(r, scm.graph.index_of(pname)));
      }
      batch.values(r, v) =
          draw_value(scm, v, parent_values, rng, static_cast<std::uint64_t>(r));
    }
  }
  return batch;
}

double JointTable::marginal_one(int var) const {
  double m = 0.0;
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    if (idx & (std::size_t{1} << var)) m += p[idx];
  }
  return m;
}

JointTable exact_joint(const Scm& scm) {
  scm.validate();
  if (!scm.all_discrete()) {
    throw std::invalid_argument(
        "exact_joint: continuous variable present, enumeration unsupported");
  }
  const int d = scm.size();
  if (d > 20) {
    throw std::invalid_argument("exact_joint: state space exceeds 2^20");
  }

  JointTable table;
  table.names = scm.graph.names();
  table.p.assign(std::size_t{1} << d, 0.0);

  for (std::size_t idx = 0; idx < table.p.size(); ++idx) {
    double p = 1.0;
    for (int v = 0; v < d && p > 0.0; ++v) {
      const int value = (idx >> v) & 1;
      const Mechanism& m = scm.mechanisms[v];
      double p_one = 0.0;
      if (const auto* cpt = std::get_if<CptMechanism>(&m.impl)) {
        std::size_t row = 0;
        for (std::size_t j = 0; j < m.parents.size(); ++j) {
          const int pv =
              static_cast<int>((idx >> scm.graph.index_of(m.parents[j])) & 1);
          if (pv) row |= std::size_t{1} << j;
        }
        p_one = cpt->p_one[row];
      } else {
        p_one = 0.5;  // binary uniform replacement
      }
      p *= value ? p_one : 1.0 - p_one;
    }
    table.p[idx] = p;
  }
  return table;
}

std::vector<double> exact_conditional_interventional(
    const Scm& scm, const std::vector<int>& targets,
    const std::map<int, int>& evidence, const InterventionRegime& regime) {
  for (const auto& [var, value] : evidence) {
    if (std::find(targets.begin(), targets.end(), var) != targets.end()) {
      throw std::invalid_argument(
          "evidence variables must be disjoint from targets");
    }
    if (value != 0 && value != 1) {
      throw std::invalid_argument("evidence values must be binary");
    }
  }

  const Scm intervened = apply_intervention(scm, regime);
  const JointTable joint = exact_joint(intervened);

  const std::size_t configs = std::size_t{1} << targets.size();
  std::vector<double> dist(configs, 0.0);
  double total = 0.0;
  for (std::size_t idx = 0; idx < joint.p.size(); ++idx) {
    bool consistent = true;
    for (const auto& [var, value] : evidence) {
      if (static_cast<int>((idx >> var) & 1) != value) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    std::size_t cfg = 0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if ((idx >> targets[j]) & 1) cfg |= std::size_t{1} << j;
    }
    dist[cfg] += joint.p[idx];
    total += joint.p[idx];
  }
  if (total <= 0.0) {
    throw std::domain_error("evidence has zero probability");
  }
  for (double& p : dist) p /= total;
  return dist;
}

}  // namespace caloss
