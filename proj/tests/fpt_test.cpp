#include <gtest/gtest.h>

#include <cmath>

#include "monopolar/exact.hpp"
#include "monopolar/fpt.hpp"
#include "monopolar/oracle.hpp"
#include "monopolar/patterns.hpp"
#include "support.hpp"

using namespace monopolar;
using namespace monopolar::testing;

namespace {

std::int64_t power(int base, int k) {
  std::int64_t p = 1;
  while (k-- > 0) p *= base;
  return p;
}

bool claw_free_after(const Graph& g, std::span<const Vertex> deleted) {
  return !find_induced_claw(g, make_set(g.size(), deleted));
}

bool claw_free_after(const Graph& g, std::span<const Edge> deleted) {
  return !find_induced_claw(g, Bitset(g.size()), deleted);
}

}  // namespace

TEST(VertexDeletion, Star) {
  EXPECT_FALSE(claw_vertex_deletion(star(3), 0));
  const auto one = claw_vertex_deletion(star(3), 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, (std::vector<Vertex>{0}));
  const auto k14 = claw_vertex_deletion(star(4), 1);
  ASSERT_TRUE(k14);
  EXPECT_EQ(*k14, (std::vector<Vertex>{0}));
  EXPECT_EQ(oracle::min_claw_vertex_modulator_size(star(4)), 1);
  EXPECT_THROW(claw_vertex_deletion(star(3), -1), InvalidInput);
}

TEST(EdgeDeletion, Stars) {
  const auto one = claw_edge_deletion(star(3), 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size(), 1u);
  EXPECT_TRUE(claw_free_after(star(3), std::span<const Edge>(*one)));
  EXPECT_FALSE(claw_edge_deletion(star(4), 1));
  const auto two = claw_edge_deletion(star(4), 2);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->size(), 2u);
  EXPECT_EQ(oracle::min_claw_edge_modulator_size(star(4)), 2);
  const auto none = claw_edge_deletion(triangle(), 0);
  ASSERT_TRUE(none);
  EXPECT_TRUE(none->empty());
}

TEST(MinModulator, Examples) {
  Rng rng(2);
  const Graph line = generate_linegraph(7, 0.5, rng);
  EXPECT_EQ(min_modulator(line, ModulatorKind::Vertex).size, 0);
  EXPECT_EQ(min_modulator(line, ModulatorKind::Edge).size, 0);
  EXPECT_EQ(min_modulator(star(3), ModulatorKind::Vertex).size, 1);
  const auto two = min_modulator(disjoint(star(3), star(3)), ModulatorKind::Vertex);
  EXPECT_EQ(two.size, 2);
  EXPECT_EQ(two.budget_used, 2);
}

TEST(MinModulator, MatchesBruteForceVertex) {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const auto m = min_modulator(g, ModulatorKind::Vertex);
      ASSERT_EQ(m.size, oracle::min_claw_vertex_modulator_size(g));
      ASSERT_TRUE(claw_free_after(g, std::span<const Vertex>(m.vertices)));
    }
  }
}

TEST(MinModulator, MatchesBruteForceEdge) {
  Rng rng(5);
  int run = 0;
  while (run < 300) {
    const int n = 4 + static_cast<int>(rng.below(5));
    const Graph g = generate_gnp(n, rng.uniform01() * 0.7, rng);
    if (g.edge_count() > 12) continue;
    ++run;
    const auto m = min_modulator(g, ModulatorKind::Edge);
    ASSERT_EQ(m.size, oracle::min_claw_edge_modulator_size(g));
    ASSERT_TRUE(claw_free_after(g, std::span<const Edge>(m.edges)));
  }
}

TEST(Deletion, LeafCountersRespectBranchingBound) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate_gnp(10, rng.uniform01() * 0.5, rng);
    for (int k = 0; k <= 4; ++k) {
      DeletionStats vs, es;
      claw_vertex_deletion(g, k, &vs);
      claw_edge_deletion(g, k, &es);
      ASSERT_LE(vs.leaves, power(4, k));
      ASSERT_LE(es.leaves, power(3, k));
    }
  }
}

TEST(EdgeToVertex, Examples) {
  EXPECT_TRUE(edge_to_vertex_modulator({}).empty());
  const std::vector<Edge> one{{0, 1}};
  EXPECT_EQ(edge_to_vertex_modulator(one), (std::vector<Vertex>{0}));
  const auto m = min_modulator(star(4), ModulatorKind::Edge);
  const auto vs = edge_to_vertex_modulator(m.edges);
  EXPECT_LE(vs.size(), 2u);
  EXPECT_TRUE(claw_free_after(star(4), std::span<const Vertex>(vs)));
}

TEST(EdgeToVertex, AlwaysAVertexModulator) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate_gnp(8, rng.uniform01() * 0.6, rng);
    if (g.edge_count() > 14) continue;
    const auto m = min_modulator(g, ModulatorKind::Edge);
    const auto vs = edge_to_vertex_modulator(m.edges);
    ASSERT_LE(vs.size(), m.edges.size());
    ASSERT_TRUE(claw_free_after(g, std::span<const Vertex>(vs)));
  }
}

TEST(RecognizeFpt, W5IsClawFree) { EXPECT_FALSE(find_induced_claw(w5())); }

TEST(RecognizeFpt, Examples) {
  SolverOptions opts;
  opts.debug_checks = true;
  const auto c5r = recognize_fpt(c5(), ModulatorKind::Vertex, opts);
  ASSERT_TRUE(c5r.yes());
  EXPECT_EQ(c5r.stats.modulator_size, 0);
  EXPECT_EQ(c5r.stats.assignments, 1);
  for (auto mode : {ModulatorKind::Vertex, ModulatorKind::Edge}) {
    const auto w = recognize_fpt(w5(), mode, opts);
    EXPECT_FALSE(w.yes());
    // The rim C5 has no three pairwise non-adjacent vertices: W5 is claw-free.
    EXPECT_EQ(w.stats.modulator_size, 0);
    const auto s = recognize_fpt(star(3), mode, opts);
    ASSERT_TRUE(s.yes());
    EXPECT_TRUE(verify_partition(star(3), *s.partition));
  }
}

// For every independent split of the modulator, C~ ∪ N(I~) is a claw-free
// modulator of G - I~.
TEST(RecognizeFpt, SplitKeepsModulatorClawFree) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(5));
    const Graph g = generate_gnp(n, rng.uniform01() * 0.6, rng);
    const auto modulator = min_modulator(g, ModulatorKind::Vertex).vertices;
    const int k = static_cast<int>(modulator.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Bitset ind(n), cl(n);
      for (int i = 0; i < k; ++i) ((mask >> i) & 1U ? ind : cl).set(modulator[i]);
      if (!is_independent_set(g, ind)) continue;
      Bitset blocked = ind | cl;
      for (Vertex v : to_vector(ind))
        for (Vertex u : g.neighbors(v)) blocked.set(u);
      ASSERT_FALSE(find_induced_claw(g, blocked));
    }
  }
}

TEST(RecognizeFpt, AgreesWithExact) {
  Rng rng(9);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const Graph g = generate_gnp(n, rng.uniform01(), rng);
    const bool expected = recognize_exact(g).yes();
    for (auto mode : {ModulatorKind::Vertex, ModulatorKind::Edge}) {
      const auto r = recognize_fpt(g, mode);
      ASSERT_EQ(r.yes(), expected);
      if (r.yes()) ASSERT_TRUE(verify_partition(g, *r.partition));
    }
  }
}
