#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "caloss/dag.hpp"

namespace caloss {

// Binary CPT. p_one[idx] = P(X = 1 | parents), where bit j of idx is the
// value of the j-th declared parent.
struct CptMechanism {
  std::vector<double> p_one;
};

// X = mean(parents) + stddev(parents) * N(0, 1). stddev may depend on the
// parents (heteroscedastic noise).
struct ContinuousMechanism {
  std::function<double(std::span<const double>)> mean;
  std::function<double(std::span<const double>)> stddev;
};

// One scoring function entering an argmax-indicator mechanism.
struct ArgmaxScore {
  std::function<double(std::span<const double>)> mean;
  std::function<double(std::span<const double>)> stddev;
};

// X_i = [argmax_k(score_k + noise_k) == winner]. All siblings sharing
// noise_stream_base see identical noise draws per row, which keeps the
// indicator family one-hot.
struct ArgmaxIndicatorMechanism {
  std::vector<ArgmaxScore> scores;
  int winner = 0;
  std::uint64_t noise_stream_base = 0;
};

// Parent-free uniform replacement used by perfect interventions.
struct UniformMechanism {
  bool binary = true;
  double lo = 0.0;
  double hi = 1.0;
};

struct Mechanism {
  std::vector<std::string> parents;
  std::variant<CptMechanism, ContinuousMechanism, ArgmaxIndicatorMechanism,
               UniformMechanism>
      impl;

  bool is_discrete() const {
    return std::holds_alternative<CptMechanism>(impl) ||
           (std::holds_alternative<UniformMechanism>(impl) &&
            std::get<UniformMechanism>(impl).binary);
  }
};

Mechanism make_cpt(std::vector<std::string> parents, std::vector<double> p_one);
Mechanism make_root_bernoulli(double p_one);
Mechanism make_continuous(std::vector<std::string> parents,
                          std::function<double(std::span<const double>)> mean,
                          double noise_std);
Mechanism make_continuous(std::vector<std::string> parents,
                          std::function<double(std::span<const double>)> mean,
                          std::function<double(std::span<const double>)> stddev);
Mechanism make_uniform(bool binary, double lo, double hi);

// Structural causal model: a DAG plus one mechanism per variable whose parent
// set matches the graph exactly.
struct Scm {
  Dag graph;
  std::vector<Mechanism> mechanisms;

  int size() const { return graph.size(); }
  bool all_discrete() const;
  // Throws std::invalid_argument when mechanism parents disagree with the
  // graph or a CPT has the wrong table size.
  void validate() const;
};

// Replaces the target's mechanism by the regime's uniform replacement and
// mutilates the graph. Observational regimes return the SCM unchanged.
Scm apply_intervention(const Scm& scm, const InterventionRegime& regime);

struct SampleBatch {
  Eigen::MatrixXd values;  // n x d, binary variables stored as 0/1
  InterventionRegime regime;
  std::vector<std::uint8_t> adjacency;  // d x d row-major, mutilated graph

  int rows() const { return static_cast<int>(values.rows()); }
  int dims() const { return static_cast<int>(values.cols()); }
};

// Ancestral-order sampling. Deterministic per seed: variable i draws from
// substream i, so regimes over the same seed share base randomness.
SampleBatch sample(const Scm& scm, int n, std::uint64_t seed);

// Exhaustive joint over binary states; p[idx] with bit i = value of variable
// i. Requires all-discrete SCM and state space <= 2^20.
struct JointTable {
  std::vector<std::string> names;
  std::vector<double> p;

  double marginal_one(int var) const;
};

JointTable exact_joint(const Scm& scm);

// p(targets | evidence, do(regime)) via enumeration of the intervened joint.
// Returned vector is indexed by target configuration (bit j = value of
// targets[j]) and sums to 1. Throws std::domain_error when the evidence has
// zero probability.
std::vector<double> exact_conditional_interventional(
    const Scm& scm, const std::vector<int>& targets,
    const std::map<int, int>& evidence, const InterventionRegime& regime);

}  // namespace caloss
