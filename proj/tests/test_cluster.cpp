// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <functional>
#include <vector>

#include "tonks/cluster.hpp"
#include "tonks/errors.hpp"
#include "tonks/rng.hpp"

namespace tonks::cluster {
namespace {

PointConfiguration config(std::initializer_list<Rational> xs) { return PointConfiguration(std::vector<Rational>(xs)); }

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Oracle: every labelled tree on n vertices from its Pruefer sequence, rooted
// at `root`, filtered through is_one_sided_singleton.
std::int64_t count_by_pruefer(const PointConfiguration& c, std::size_t root) {
  const std::size_t n = c.size();
  if (n == 1) return 1;
  std::int64_t count = 0;
  std::vector<std::size_t> seq(n - 2, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos < seq.size()) {
      for (std::size_t v = 0; v < n; ++v) {
        seq[pos] = v;
        rec(pos + 1);
      }
      return;
    }
    std::vector<std::size_t> degree(n, 1);
    for (auto v : seq) ++degree[v];
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto v : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(v);
      adj[v].push_back(leaf);
      --degree[leaf];
      --degree[v];
    }
    std::size_t u = n, w = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) (u == n ? u : w) = v;
    }
    adj[u].push_back(w);
    adj[w].push_back(u);
    RootedLabeledTree tree;
    tree.parent.assign(n, std::nullopt);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack = {root};
    seen[root] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto x : adj[v]) {
        if (seen[x]) continue;
        seen[x] = true;
        tree.parent[x] = v;
        stack.push_back(x);
      }
    }
    if (is_one_sided_singleton(tree, c)) ++count;
  };
  rec(0);
  return count;
}

TEST(Configuration, RejectsInvalidInput) {
  EXPECT_THROW(config({}), DomainError);
  EXPECT_THROW(config({0, Rational(1, 2), 0}), DomainError);
  EXPECT_THROW(PointConfiguration({0}, Rational(0)), DomainError);
  std::vector<Rational> nine;
  for (int i = 0; i < 9; ++i) nine.emplace_back(i, 2);
  EXPECT_THROW(check_penrose_identity(PointConfiguration(nine)), SizeLimitError);
}

TEST(BuildCluster, SpecExamples) {
  const auto single = build_cluster(config({0}));
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.edge_count(), 0u);
  const auto tri = build_cluster(config({0, Rational(2, 5), Rational(4, 5)}));
  EXPECT_EQ(tri.edge_count(), 3u);
  const auto path = build_cluster(config({0, Rational(7, 10), Rational(7, 5)}));
  EXPECT_EQ(path.edge_count(), 2u);
  EXPECT_FALSE(path.adjacent(0, 2));
  EXPECT_TRUE(path.connected());
  // Distance exactly R is not an edge.
  EXPECT_EQ(build_cluster(config({0, 1})).edge_count(), 0u);
}

TEST(Ursell, SpecExamplesAndClosedForms) {
  EXPECT_EQ(ursell_bruteforce(build_cluster(config({0}))), 1);
  EXPECT_EQ(ursell_bruteforce(build_cluster(config({0, Rational(1, 2)}))), -1);
  EXPECT_EQ(ursell_bruteforce(build_cluster(config({0, Rational(2, 5), Rational(4, 5)}))), 2);
  EXPECT_EQ(ursell_bruteforce(build_cluster(config({0, 2}))), 0);
  for (int n = 1; n <= 8; ++n) {
    // Complete graph: (-1)^{n-1} (n-1)!.  Path: (-1)^{n-1}.
    ClusterGraph complete(static_cast<std::size_t>(n));
    ClusterGraph path(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) complete.add_edge(i, j);
      if (i + 1 < n) path.add_edge(i, i + 1);
    }
    const std::int64_t sign = n % 2 == 1 ? 1 : -1;
    EXPECT_EQ(ursell_bruteforce(complete), sign * factorial(n - 1)) << n;
    EXPECT_EQ(ursell_bruteforce(path), sign) << n;
    if (n >= 3) {
      ClusterGraph cycle = path;
      cycle.add_edge(0, static_cast<std::size_t>(n - 1));
      EXPECT_EQ(ursell_bruteforce(cycle), sign * (n - 1)) << n;
    }
  }
  EXPECT_THROW(ursell_bruteforce(ClusterGraph(9)), SizeLimitError);
}

TEST(SingletonTrees, SpecExamples) {
  EXPECT_EQ(count_one_sided_singleton_trees(config({Rational(3)})), 1);
  EXPECT_EQ(count_one_sided_singleton_trees(config({0, Rational(7, 10)})), 1);
  EXPECT_EQ(count_one_sided_singleton_trees(config({0, Rational(2, 5), Rational(4, 5)})), 2);
}

TEST(SingletonTrees, PrunedSearchMatchesPrueferEnumeration) {
  SplitMix64 rng(99);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const auto c = random_configuration(n, rng);
      for (std::size_t root = 0; root < n; ++root) {
        EXPECT_EQ(count_one_sided_singleton_trees(c, root), count_by_pruefer(c, root));
      }
    }
  }
}

TEST(RootedTree, LevelsAndChildCounts) {
  RootedLabeledTree t;
  t.parent = {std::nullopt, 0, 0, 1};
  EXPECT_EQ(t.root(), 0u);
  EXPECT_EQ(t.levels(), (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_EQ(t.child_counts(), (std::vector<std::size_t>{2, 1, 0, 0}));
}

TEST(Penrose, SpecExamples) {
  EXPECT_TRUE(check_penrose_identity(config({0})).identity_holds);
  const auto tri = check_penrose_identity(config({0, Rational(2, 5), Rational(4, 5)}));
  EXPECT_TRUE(tri.identity_holds);
  EXPECT_EQ(tri.ursell, 2);
  EXPECT_TRUE(check_penrose_identity(config({0, Rational(7, 10), Rational(7, 5)})).identity_holds);
}

// With vertex 1 between two neighbours the one-sided indicator admits only
// one of the two trees that the triangle needs. Rooting at the leftmost
// point restores the identity.
TEST(Penrose, InteriorRootUndercounts) {
  const auto c = config({0, Rational(-2, 5), Rational(2, 5)});
  const auto check = check_penrose_identity(c);
  EXPECT_EQ(check.ursell, 2);
  EXPECT_EQ(check.singleton_count, 1);
  EXPECT_FALSE(check.identity_holds);
  EXPECT_TRUE(check_penrose_identity(c, 1).identity_holds);
}

TEST(Penrose, IdentityHoldsWhenRootedAtLeftmostPoint) {
  SplitMix64 rng(7);
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto sweep = penrose_sweep(n, 200, rng);
    EXPECT_EQ(sweep.leftmost_root_failures, 0u) << "n=" << n;
    EXPECT_EQ(sweep.failures, sweep.interior_root_failures) << "n=" << n;
  }
}

TEST(Penrose, SignTranslationAndReflection) {
  SplitMix64 rng(11);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      const auto c = random_configuration(n, rng);
      const auto base = check_penrose_identity(c);
      const std::int64_t sign = n % 2 == 1 ? 1 : -1;
      EXPECT_GE(sign * base.ursell, 0);
      const auto shifted = check_penrose_identity(c.translated(Rational(-17, 3)));
      EXPECT_EQ(shifted.ursell, base.ursell);
      EXPECT_EQ(shifted.singleton_count, base.singleton_count);
      const auto mirrored = check_penrose_identity(c.reflected());
      EXPECT_EQ(mirrored.ursell, base.ursell);
      EXPECT_EQ(mirrored.singleton_count, base.singleton_count);
    }
  }
}

TEST(Penrose, MonotoneChainHasOneTree) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<Rational> xs;
    for (int i = 0; i < n; ++i) xs.emplace_back(i * 9, 10);
    const PointConfiguration c(xs);
    EXPECT_EQ(count_one_sided_singleton_trees(c), 1);
    EXPECT_EQ(ursell_bruteforce(build_cluster(c)), n % 2 == 1 ? 1 : -1);
  }
}

TEST(Json, ConfigurationAndCheck) {
  const auto c = configuration_from_json(R"(["0", "2/5", 1])");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1], Rational(2, 5));
  EXPECT_THROW(configuration_from_json("[0.5]"), ParseError);
  EXPECT_THROW(configuration_from_json("{}"), ParseError);
  EXPECT_EQ(to_json(check_penrose_identity(config({0, Rational(1, 2)}))),
            R"({"ursell":-1,"singleton_count":1,"identity_holds":true})");
}

}  // namespace
}  // namespace tonks::cluster
