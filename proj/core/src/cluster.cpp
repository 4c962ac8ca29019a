// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/cluster.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "json.hpp"
#include "tonks/errors.hpp"

namespace tonks::cluster {
namespace {

void require_enumerable(std::size_t n) {
  if (n > kMaxPoints) {
    throw SizeLimitError("brute-force enumeration supports at most " + std::to_string(kMaxPoints) +
                         " points, got " + std::to_string(n));
  }
}

bool within_radius(const Rational& a, const Rational& b, const Rational& radius) {
  return abs(a - b) < radius;
}

// x_i continues monotonically from x_g through x_p.
bool monotone_step(const Rational& xi, const Rational& xp, const Rational& xg) {
  return (xi <= xp && xp <= xg) || (xi >= xp && xp >= xg);
}

class SingletonTreeCounter {
 public:
  SingletonTreeCounter(const PointConfiguration& config, std::size_t root)
      : config_(config), graph_(build_cluster(config)), root_(root), parent_(config.size(), kUnassigned) {
    for (std::size_t v = 0; v < config.size(); ++v) {
      if (v != root) order_.push_back(v);
    }
  }

  std::int64_t count() {
    total_ = 0;
    assign(0);
    return total_;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  [[nodiscard]] bool creates_cycle(std::size_t child, std::size_t parent) const {
    for (std::size_t v = parent; v != kUnassigned && v != root_; v = parent_[v]) {
      if (v == child) return true;
    }
    return false;
  }

  [[nodiscard]] bool step_ok(std::size_t v, std::size_t p) const {
    if (p == root_) return true;
    const std::size_t g = parent_[p];
    if (g == kUnassigned) return true;  // checked once p is placed
    return monotone_step(config_[v], config_[p], config_[g]);
  }

  void assign(std::size_t depth) {
    if (depth == order_.size()) {
      ++total_;
      return;
    }
    const std::size_t v = order_[depth];
    for (std::size_t p = 0; p < config_.size(); ++p) {
      if (p == v || !graph_.adjacent(v, p) || creates_cycle(v, p)) continue;
      parent_[v] = p;
      bool ok = step_ok(v, p);
      for (std::size_t c = 0; ok && c < config_.size(); ++c) {
        if (parent_[c] == v) ok = step_ok(c, v);
      }
      if (ok) assign(depth + 1);
      parent_[v] = kUnassigned;
    }
  }

  const PointConfiguration& config_;
  ClusterGraph graph_;
  std::size_t root_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> order_;
  std::int64_t total_ = 0;
};

}  // namespace

PointConfiguration::PointConfiguration(std::vector<Rational> coords, Rational radius)
    : coords_(std::move(coords)), radius_(std::move(radius)) {
  if (coords_.empty()) throw DomainError("a configuration needs at least one point");
  if (sgn(radius_) <= 0) throw DomainError("hard-core radius must be positive");
  std::vector<Rational> sorted = coords_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("duplicate coordinate in point configuration");
  }
}

PointConfiguration PointConfiguration::translated(const Rational& shift) const {
  std::vector<Rational> moved = coords_;
  for (auto& x : moved) x += shift;
  return PointConfiguration(std::move(moved), radius_);
}

PointConfiguration PointConfiguration::reflected() const {
  std::vector<Rational> mirrored = coords_;
  for (auto& x : mirrored) x = -x;
  return PointConfiguration(std::move(mirrored), radius_);
}

ClusterGraph::ClusterGraph(std::size_t n) : n_(n), adjacency_(n * n, false) {}

void ClusterGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("cluster graphs have no self-loops");
  adjacency_[i * n_ + j] = true;
  adjacency_[j * n_ + i] = true;
}

std::size_t ClusterGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) count += adjacent(i, j) ? 1 : 0;
  }
  return count;
}

bool ClusterGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n_; ++w) {
      if (!seen[w] && adjacent(v, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

ClusterGraph build_cluster(const PointConfiguration& config) {
  ClusterGraph graph(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      if (within_radius(config[i], config[j], config.radius())) graph.add_edge(i, j);
    }
  }
  return graph;
}

std::int64_t ursell_bruteforce(const ClusterGraph& graph) {
  const std::size_t n = graph.size();
  require_enumerable(n);
  std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph.adjacent(i, j)) edges.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
    }
  }
  const std::uint32_t full = (1u << n) - 1;
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  std::int64_t total = 0;
  std::uint32_t adjacency[kMaxPoints];
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(adjacency, adjacency + n, 0u);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (mask >> e & 1u) {
        adjacency[edges[e].first] |= 1u << edges[e].second;
        adjacency[edges[e].second] |= 1u << edges[e].first;
      }
    }
    std::uint32_t reached = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adjacency[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == full) total += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  return total;
}

std::size_t RootedLabeledTree::root() const {
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (!parent[v]) return v;
  }
  throw DomainError("tree has no root");
}

std::vector<std::size_t> RootedLabeledTree::levels() const {
  std::vector<std::size_t> level(parent.size(), 0);
  for (std::size_t v = 0; v < parent.size(); ++v) {
    std::size_t depth = 0;
    for (auto p = parent[v]; p; p = parent[*p]) {
      if (++depth > parent.size()) throw DomainError("parent array contains a cycle");
    }
    level[v] = depth;
  }
  return level;
}

std::vector<std::size_t> RootedLabeledTree::child_counts() const {
  std::vector<std::size_t> counts(parent.size(), 0);
  for (const auto& p : parent) {
    if (p) ++counts[*p];
  }
  return counts;
}

bool is_one_sided_singleton(const RootedLabeledTree& tree, const PointConfiguration& config) {
  if (tree.parent.size() != config.size()) throw DomainError("tree and configuration sizes differ");
  const std::size_t root = tree.root();
  for (std::size_t i = 0; i < tree.parent.size(); ++i) {
    if (i == root) continue;
    const std::size_t p = *tree.parent[i];
    if (!within_radius(config[i], config[p], config.radius())) return false;
    if (p == root) continue;
    const std::size_t g = *tree.parent[p];
    if (!monotone_step(config[i], config[p], config[g])) return false;
  }
  return true;
}

std::int64_t count_one_sided_singleton_trees(const PointConfiguration& config, std::size_t root) {
  require_enumerable(config.size());
  if (root >= config.size()) throw DomainError("root index out of range");
  return SingletonTreeCounter(config, root).count();
}

PenroseCheck check_penrose_identity(const PointConfiguration& config, std::size_t root) {
  PenroseCheck check;
  check.ursell = ursell_bruteforce(build_cluster(config));
  check.singleton_count = count_one_sided_singleton_trees(config, root);
  const std::int64_t sign = config.size() % 2 == 1 ? 1 : -1;  // (-1)^{n-1}
  check.identity_holds = check.ursell == sign * check.singleton_count;
  return check;
}

PointConfiguration configuration_from_json(std::string_view json, Rational radius) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!parsed.is_array()) throw ParseError("configuration JSON must be an array");
  std::vector<Rational> coords;
  for (const auto& entry : parsed) {
    if (entry.is_string()) {
      coords.push_back(parse_rational(entry.get<std::string>()));
    } else if (entry.is_number_integer()) {
      coords.emplace_back(entry.get<long>());
    } else {
      throw ParseError("coordinates must be \"p/q\" strings or integers");
    }
  }
  return PointConfiguration(std::move(coords), std::move(radius));
}

std::string to_json(const PenroseCheck& check) {
  nlohmann::ordered_json out;
  out["ursell"] = check.ursell;
  out["singleton_count"] = check.singleton_count;
  out["identity_holds"] = check.identity_holds;
  return out.dump();
}

PointConfiguration random_configuration(std::size_t n, SplitMix64& rng) {
  if (n == 0 || n > kMaxPoints) throw SizeLimitError("random configurations need 1 <= n <= 8");
  const std::uint64_t span = static_cast<std::uint64_t>(n) * 1'000'000 + 1;
  std::vector<std::uint64_t> picked;
  std::vector<Rational> coords;
  while (coords.size() < n) {
    const std::uint64_t m = rng() % span;
    if (std::find(picked.begin(), picked.end(), m) != picked.end()) continue;
    picked.push_back(m);
    coords.push_back(ratio(BigInt(static_cast<unsigned long>(m)), BigInt(1'000'000UL)));
    coords.back().canonicalize();
  }
  return PointConfiguration(std::move(coords));
}

PenroseSweep penrose_sweep(std::size_t n, std::size_t configurations, SplitMix64& rng) {
  PenroseSweep sweep;
  sweep.n = n;
  for (std::size_t rep = 0; rep < configurations; ++rep) {
    const PointConfiguration config = random_configuration(n, rng);
    const auto& c = config.coords();
    const auto leftmost = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
    const auto rightmost = static_cast<std::size_t>(std::max_element(c.begin(), c.end()) - c.begin());
    const PenroseCheck check = check_penrose_identity(config);
    ++sweep.configurations;
    if (check.ursell != 0) ++sweep.nonzero_ursell;
    if (!check.identity_holds) {
      ++sweep.failures;
      if (leftmost != 0 && rightmost != 0) ++sweep.interior_root_failures;
    }
    if (!check_penrose_identity(config, leftmost).identity_holds) ++sweep.leftmost_root_failures;
  }
  return sweep;
}

}  // namespace tonks::cluster
