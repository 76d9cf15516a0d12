#include "caloss/dag.hpp"

#include <algorithm>
#include <stdexcept>

namespace caloss {

Dag::Dag(std::vector<std::string> names,
         const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)),
      adj_(names_.size() * names_.size(), 0) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate variable name: " + names_[i]);
      }
    }
  }
  for (const auto& [p, c] : edges) {
    add_edge(index_of(p), index_of(c));
  }
  topological_order();  // rejects cycles up front
}

int Dag::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable: " + name);
}

std::optional<int> Dag::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

void Dag::add_edge(int parent, int child) {
  if (parent == child) throw std::invalid_argument("self edge: " + names_[parent]);
  adj_[static_cast<std::size_t>(parent) * names_.size() + child] = 1;
}

void Dag::remove_edge(int parent, int child) {
  adj_[static_cast<std::size_t>(parent) * names_.size() + child] = 0;
}

std::vector<int> Dag::parents_of(int v) const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p) {
    if (has_edge(p, v)) out.push_back(p);
  }
  return out;
}

std::vector<int> Dag::children_of(int v) const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c) {
    if (has_edge(v, c)) out.push_back(c);
  }
  return out;
}

int Dag::edge_count() const {
  int n = 0;
  for (const auto b : adj_) n += b;
  return n;
}

std::vector<int> Dag::topological_order() const {
  const int d = size();
  std::vector<int> indeg(d, 0);
  for (int p = 0; p < d; ++p) {
    for (int c = 0; c < d; ++c) {
      if (has_edge(p, c)) ++indeg[c];
    }
  }
  std::vector<int> order;
  order.reserve(d);
  std::vector<int> ready;
  for (int v = d - 1; v >= 0; --v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    // Lowest declared index first keeps the order reproducible.
    const auto it = std::min_element(ready.begin(), ready.end());
    const int v = *it;
    ready.erase(it);
    order.push_back(v);
    for (int c = 0; c < d; ++c) {
      if (has_edge(v, c) && --indeg[c] == 0) ready.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != d) {
    throw std::logic_error("graph contains a cycle");
  }
  return order;
}

Dag mutilate(const Dag& graph, const InterventionRegime& regime) {
  if (regime.is_observational()) return graph;
  Dag cut = graph;
  const int t = cut.index_of(*regime.target);
  for (int p = 0; p < cut.size(); ++p) {
    cut.remove_edge(p, t);
  }
  return cut;
}

}  // namespace caloss
