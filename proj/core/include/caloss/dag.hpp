#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace caloss {

// Directed acyclic graph over named variables. Variable order is the
// declaration order and is part of every downstream contract (adjacency
// flattening, feature layout), so it never changes after construction.
class Dag {
 public:
  Dag() = default;
  Dag(std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }

  // Throws std::invalid_argument for unknown names.
  int index_of(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  bool has_edge(int parent, int child) const {
    return adj_[static_cast<std::size_t>(parent) * names_.size() + child] != 0;
  }
  void add_edge(int parent, int child);
  void remove_edge(int parent, int child);

  std::vector<int> parents_of(int v) const;
  std::vector<int> children_of(int v) const;
  int edge_count() const;

  // Row-major, row = parent, column = child.
  const std::vector<std::uint8_t>& adjacency() const { return adj_; }

  // Throws std::logic_error if a cycle exists.
  std::vector<int> topological_order() const;

  bool operator==(const Dag& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;
};

// A perfect atomic intervention: at most one target variable whose mechanism
// is replaced by a parent-free uniform distribution.
struct InterventionRegime {
  std::optional<std::string> target;  // nullopt = observational
  bool binary = true;                 // true: uniform over {0,1}
  double lo = 0.0;                    // continuous uniform support
  double hi = 1.0;

  static InterventionRegime observational() { return {}; }
  static InterventionRegime binary_do(std::string var) {
    InterventionRegime r;
    r.target = std::move(var);
    r.binary = true;
    return r;
  }
  static InterventionRegime uniform_do(std::string var, double lo, double hi) {
    InterventionRegime r;
    r.target = std::move(var);
    r.binary = false;
    r.lo = lo;
    r.hi = hi;
    return r;
  }

  bool is_observational() const { return !target.has_value(); }
  bool operator==(const InterventionRegime&) const = default;
};

// Removes all incoming edges of the regime's target; identity for the
// observational regime. Throws for unknown targets.
Dag mutilate(const Dag& graph, const InterventionRegime& regime);

}  // namespace caloss
