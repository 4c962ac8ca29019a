// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonks/rational.hpp"
#include "tonks/rng.hpp"

/// Cluster graphs of point configurations on the line, brute-force Ursell
/// coefficients, and the singleton-tree count of the one-sided partition
/// scheme.
namespace tonks::cluster {

/// Largest configuration accepted by the brute-force enumerators.
inline constexpr std::size_t kMaxPoints = 8;

/// Positions x_1..x_n (pairwise distinct) and hard-core radius R.
class PointConfiguration {
 public:
  /// Throws DomainError on an empty list, duplicate coordinates or R <= 0.
  PointConfiguration(std::vector<Rational> coords, Rational radius = Rational(1));

  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] const std::vector<Rational>& coords() const noexcept { return coords_; }
  [[nodiscard]] const Rational& radius() const noexcept { return radius_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] PointConfiguration translated(const Rational& shift) const;
  [[nodiscard]] PointConfiguration reflected() const;

 private:
  std::vector<Rational> coords_;
  Rational radius_;
};

/// Undirected simple graph on vertices 0..n-1 (vertex 0 is "vertex 1").
class ClusterGraph {
 public:
  explicit ClusterGraph(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const {
    return adjacency_[i * n_ + j];
  }
  void add_edge(std::size_t i, std::size_t j);
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] bool connected() const;

 private:
  std::size_t n_;
  std::vector<bool> adjacency_;
};

/// Edge {i,j} iff |x_i - x_j| < R, decided exactly.
ClusterGraph build_cluster(const PointConfiguration& config);

/// Sum over connected spanning subgraphs H of (-1)^{|E(H)|}; zero for a
/// disconnected graph. Throws SizeLimitError above kMaxPoints vertices.
std::int64_t ursell_bruteforce(const ClusterGraph& graph);

/// Rooted labelled tree stored as a parent array; parent[root] is empty.
struct RootedLabeledTree {
  std::vector<std::optional<std::size_t>> parent;

  [[nodiscard]] std::size_t root() const;
  /// Distance to the root for every vertex.
  [[nodiscard]] std::vector<std::size_t> levels() const;
  /// Number of children of every vertex.
  [[nodiscard]] std::vector<std::size_t> child_counts() const;
};

/// Whether a tree satisfies the one-sided singleton indicator: every edge is
/// a cluster edge, and every vertex at level >= 2 continues monotonically
/// away from its grandparent through its parent.
bool is_one_sided_singleton(const RootedLabeledTree& tree, const PointConfiguration& config);

/// Number of trees rooted at `root` (default: the first point) satisfying
/// the one-sided singleton indicator, by pruned parent-array enumeration.
/// Throws SizeLimitError above kMaxPoints points.
std::int64_t count_one_sided_singleton_trees(const PointConfiguration& config,
                                             std::size_t root = 0);

struct PenroseCheck {
  std::int64_t ursell = 0;
  std::int64_t singleton_count = 0;
  bool identity_holds = false;
};

/// ursell == (-1)^{n-1} * singleton count, both computed exactly.
PenroseCheck check_penrose_identity(const PointConfiguration& config, std::size_t root = 0);

/// Parses a JSON array of "p/q" (or decimal) strings.
PointConfiguration configuration_from_json(std::string_view json, Rational radius = Rational(1));

/// n distinct coordinates m / 10^6 drawn uniformly from [0, n], unit radius.
PointConfiguration random_configuration(std::size_t n, SplitMix64& rng);

struct PenroseSweep {
  std::size_t n = 0;
  std::size_t configurations = 0;
  std::size_t nonzero_ursell = 0;
  std::size_t failures = 0;
  /// Failures where vertex 1 is neither the leftmost nor the rightmost point.
  std::size_t interior_root_failures = 0;
  /// Failures of the same check rooted at the leftmost point instead.
  std::size_t leftmost_root_failures = 0;
};

/// Checks the identity on `configurations` random configurations of n points.
PenroseSweep penrose_sweep(std::size_t n, std::size_t configurations, SplitMix64& rng);
/// {"ursell":..,"singleton_count":..,"identity_holds":..}
std::string to_json(const PenroseCheck& check);

}  // namespace tonks::cluster
