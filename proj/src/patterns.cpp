#include "monopolar/patterns.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace monopolar {

namespace {

using Pair = std::pair<int, int>;

// Edge lists over tuple positions, one per pattern kind.
std::span<const Pair> pattern_edges(PatternKind kind) {
  static constexpr std::array<Pair, 2> p3{{{0, 1}, {1, 2}}};
  static constexpr std::array<Pair, 4> paw{{{0, 1}, {0, 2}, {0, 3}, {2, 3}}};
  static constexpr std::array<Pair, 5> diamond{{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  static constexpr std::array<Pair, 4> c4{{{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  static constexpr std::array<Pair, 3> claw{{{0, 1}, {0, 2}, {0, 3}}};
  static constexpr std::array<Pair, 4> chair{{{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
  switch (kind) {
    case PatternKind::P3: return p3;
    case PatternKind::Paw: return paw;
    case PatternKind::Diamond: return diamond;
    case PatternKind::C4: return c4;
    case PatternKind::Claw: return claw;
    case PatternKind::Chair: return chair;
  }
  return {};
}

std::size_t pattern_order(PatternKind kind) {
  switch (kind) {
    case PatternKind::P3: return 3;
    case PatternKind::Paw:
    case PatternKind::Diamond:
    case PatternKind::C4:
    case PatternKind::Claw: return 4;
    case PatternKind::Chair: return 5;
  }
  return 0;
}

template <std::size_t N>
std::array<Vertex, N> sorted_key(std::array<Vertex, N> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Tracks the smallest candidate by (sorted vertex set, labelling).
template <std::size_t N>
struct SmallestTuple {
  bool found = false;
  std::array<Vertex, N> key{};
  std::array<Vertex, N> tuple{};

  void offer(const std::array<Vertex, N>& t) {
    auto k = sorted_key(t);
    if (!found || std::tie(k, t) < std::tie(key, tuple)) {
      found = true;
      key = k;
      tuple = t;
    }
  }
};

template <std::size_t N>
PatternWitness make_witness(PatternKind kind, const std::array<Vertex, N>& t) {
  return PatternWitness{kind, std::vector<Vertex>(t.begin(), t.end())};
}

// Claw search over an arbitrary adjacency (rows) restricted to `eligible`.
std::optional<PatternWitness> smallest_claw(const Graph& g, const Bitset& eligible) {
  Bitset window = eligible;
  for (auto mm = eligible.find_first(); mm != Bitset::npos; mm = eligible.find_next(mm)) {
    const auto m = static_cast<Vertex>(mm);
    SmallestTuple<4> best;
    // m as the centre: the first pairwise non-adjacent leaf triple in
    // ascending order is already the smallest.
    Bitset leaves = g.row(m) & window;
    bool centre_done = false;
    for (auto v = leaves.find_first(); v != Bitset::npos && !centre_done; v = leaves.find_next(v)) {
      Bitset rest = leaves - g.row(static_cast<Vertex>(v));
      for (auto w = rest.find_next(v); w != Bitset::npos && !centre_done; w = rest.find_next(w)) {
        Bitset third = rest - g.row(static_cast<Vertex>(w));
        auto x = third.find_next(w);
        if (x != Bitset::npos) {
          best.offer({m, static_cast<Vertex>(v), static_cast<Vertex>(w), static_cast<Vertex>(x)});
          centre_done = true;
        }
      }
    }
    // m as a leaf of some centre c > m.
    Bitset closed_m = g.row(m);
    closed_m.set(m);
    for (auto c = leaves.find_first(); c != Bitset::npos; c = leaves.find_next(c)) {
      Bitset others = (g.row(static_cast<Vertex>(c)) & window) - closed_m;
      bool done = false;
      for (auto y = others.find_first(); y != Bitset::npos && !done; y = others.find_next(y)) {
        Bitset third = others - g.row(static_cast<Vertex>(y));
        auto z = third.find_next(y);
        if (z != Bitset::npos) {
          std::array<Vertex, 3> l{m, static_cast<Vertex>(y), static_cast<Vertex>(z)};
          std::sort(l.begin(), l.end());
          best.offer({static_cast<Vertex>(c), l[0], l[1], l[2]});
          done = true;
        }
      }
    }
    if (best.found) return make_witness(PatternKind::Claw, best.tuple);
    window.reset(mm);
  }
  return std::nullopt;
}

// Adds every chair centred at b (inside `window`) that contains `must` to best.
void offer_chairs_at(const Graph& g, const Bitset& window, Vertex b, Vertex must, SmallestTuple<5>& best) {
  Bitset nb = g.row(b) & window;
  Bitset closed_b = g.row(b);
  closed_b.set(b);
  for (auto d = nb.find_first(); d != Bitset::npos; d = nb.find_next(d)) {
    Bitset tails = (g.row(static_cast<Vertex>(d)) & window) - closed_b;
    for (auto e = tails.find_first(); e != Bitset::npos; e = tails.find_next(e)) {
      Bitset arms = nb - g.row(static_cast<Vertex>(d)) - g.row(static_cast<Vertex>(e));
      arms.reset(d);
      for (auto a = arms.find_first(); a != Bitset::npos; a = arms.find_next(a)) {
        Bitset partners = arms - g.row(static_cast<Vertex>(a));
        for (auto c = partners.find_next(a); c != Bitset::npos; c = partners.find_next(c)) {
          std::array<Vertex, 5> t{static_cast<Vertex>(a), b, static_cast<Vertex>(c), static_cast<Vertex>(d),
                                  static_cast<Vertex>(e)};
          if (std::find(t.begin(), t.end(), must) != t.end()) best.offer(t);
        }
      }
    }
  }
}

}  // namespace

std::string_view name(PatternKind kind) {
  switch (kind) {
    case PatternKind::P3: return "P3";
    case PatternKind::Paw: return "paw";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::C4: return "C4";
    case PatternKind::Claw: return "claw";
    case PatternKind::Chair: return "chair";
  }
  return "?";
}

bool realizes_pattern(const Graph& g, const PatternWitness& w) {
  const auto& t = w.vertices;
  if (t.size() != pattern_order(w.kind)) return false;
  for (Vertex v : t) {
    if (v < 0 || v >= g.size()) return false;
  }
  auto edges = pattern_edges(w.kind);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
      bool expected = std::find(edges.begin(), edges.end(), Pair(static_cast<int>(i), static_cast<int>(j))) !=
                      edges.end();
      if (g.adjacent(t[i], t[j]) != expected) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_induced_chair(const Graph& g, const Bitset& eligible) {
  Bitset window = eligible;
  for (auto mm = eligible.find_first(); mm != Bitset::npos; mm = eligible.find_next(mm)) {
    const auto m = static_cast<Vertex>(mm);
    // Every chair vertex is within distance two of the centre, so the centre
    // of a chair through m lies in the radius-2 ball around m.
    Bitset ball = g.row(m) & window;
    ball.set(m);
    Bitset reach = ball;
    for (auto v = ball.find_first(); v != Bitset::npos; v = ball.find_next(v)) {
      reach |= g.row(static_cast<Vertex>(v)) & window;
    }
    SmallestTuple<5> best;
    for (auto b = reach.find_first(); b != Bitset::npos; b = reach.find_next(b)) {
      if (g.degree(static_cast<Vertex>(b)) >= 3) offer_chairs_at(g, window, static_cast<Vertex>(b), m, best);
    }
    if (best.found) return make_witness(PatternKind::Chair, best.tuple);
    window.reset(mm);
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_induced_claw(const Graph& g, const Bitset& forbidden,
                                                std::span<const Edge> forbidden_edges) {
  Bitset eligible = ~forbidden;
  if (forbidden_edges.empty()) return smallest_claw(g, eligible);
  return smallest_claw(g.without_edges(forbidden_edges), eligible);
}

std::optional<PatternWitness> find_induced_claw(const Graph& g) {
  return smallest_claw(g, Bitset(g.size()).set());
}

std::vector<PatternWitness> enumerate_induced_p3s(const Graph& g) {
  std::vector<std::pair<std::array<Vertex, 3>, std::array<Vertex, 3>>> found;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        std::array<Vertex, 3> t{nb[i], v, nb[j]};
        found.emplace_back(sorted_key(t), t);
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<PatternWitness> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(make_witness(PatternKind::P3, f.second));
  return out;
}

bool on_triangle(const Graph& g, Vertex v) {
  const Bitset& nv = g.row(v);
  for (Vertex u : g.neighbors(v)) {
    if (g.row(u).intersects(nv)) return true;
  }
  return false;
}

bool edge_on_induced_c4(const Graph& g, Vertex u, Vertex v) {
  Bitset closed_u = g.row(u);
  closed_u.set(u);
  Bitset closed_v = g.row(v);
  closed_v.set(v);
  Bitset far_side = g.row(u) - closed_v;  // y: adjacent to u, not to v
  Bitset near_side = g.row(v) - closed_u;  // x: adjacent to v, not to u
  for (auto x = near_side.find_first(); x != Bitset::npos; x = near_side.find_next(x)) {
    if (g.row(static_cast<Vertex>(x)).intersects(far_side)) return true;
  }
  return false;
}

namespace {

bool touches_constrained(const Graph& g, const std::array<Vertex, 3>& t, const Bitset& cluster_constrained) {
  for (Vertex x : t) {
    if (cluster_constrained[x] || g.row(x).intersects(cluster_constrained)) return true;
  }
  return false;
}

}  // namespace

bool is_good_p3(const Graph& g, const PatternWitness& p3, const Bitset& cluster_constrained) {
  const std::array<Vertex, 3> t{p3.vertices[0], p3.vertices[1], p3.vertices[2]};
  if (touches_constrained(g, t, cluster_constrained)) return true;
  if (on_triangle(g, t[0]) || on_triangle(g, t[1]) || on_triangle(g, t[2])) return true;
  return edge_on_induced_c4(g, t[0], t[1]) || edge_on_induced_c4(g, t[1], t[2]);
}

std::optional<PatternWitness> find_c_bad_p3(const Graph& g, const Bitset& cluster_constrained) {
  std::vector<signed char> triangle(g.size(), -1);
  auto in_triangle = [&](Vertex x) {
    if (triangle[x] < 0) triangle[x] = on_triangle(g, x) ? 1 : 0;
    return triangle[x] == 1;
  };
  SmallestTuple<3> best;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() < 2 || in_triangle(v)) continue;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex u = nb[i], w = nb[j];
        // No triangle at v means its neighbours are pairwise non-adjacent.
        const std::array<Vertex, 3> t{u, v, w};
        if (best.found && sorted_key(t) > best.key) continue;
        if (in_triangle(u) || in_triangle(w)) continue;
        if (touches_constrained(g, t, cluster_constrained)) continue;
        if (edge_on_induced_c4(g, u, v) || edge_on_induced_c4(g, v, w)) continue;
        best.offer(t);
      }
    }
  }
  if (!best.found) return std::nullopt;
  return make_witness(PatternKind::P3, best.tuple);
}

std::vector<PatternWitness> enumerate_constraint_patterns(const Graph& g) {
  std::vector<PatternWitness> out;
  const int n = g.size();
  // Paws: triangle s q r with a pendant t attached to s only.
  for (Vertex s = 0; s < n; ++s) {
    const Bitset& ns = g.row(s);
    for (Vertex q : g.neighbors(s)) {
      Bitset rs = ns & g.row(q);
      for (auto r = rs.find_next(q); r != Bitset::npos; r = rs.find_next(r)) {
        Bitset pendants = ns - g.row(q) - g.row(static_cast<Vertex>(r));
        for (auto t = pendants.find_first(); t != Bitset::npos; t = pendants.find_next(t)) {
          out.push_back({PatternKind::Paw, {s, static_cast<Vertex>(t), q, static_cast<Vertex>(r)}});
        }
      }
    }
  }
  // Diamonds: edge q r plus two non-adjacent common neighbours s, t.
  for (Vertex q = 0; q < n; ++q) {
    for (Vertex r : g.neighbors(q)) {
      if (r < q) continue;
      Bitset common = g.row(q) & g.row(r);
      for (auto s = common.find_first(); s != Bitset::npos; s = common.find_next(s)) {
        Bitset partners = common - g.row(static_cast<Vertex>(s));
        for (auto t = partners.find_next(s); t != Bitset::npos; t = partners.find_next(t)) {
          out.push_back({PatternKind::Diamond, {static_cast<Vertex>(s), static_cast<Vertex>(t), q, r}});
        }
      }
    }
  }
  // Induced C4s: u is the smallest vertex, w its opposite corner.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      Bitset common = g.row(u) & g.row(w);
      for (auto v = common.find_next(u); v != Bitset::npos; v = common.find_next(v)) {
        Bitset partners = common - g.row(static_cast<Vertex>(v));
        for (auto x = partners.find_next(v); x != Bitset::npos; x = partners.find_next(x)) {
          out.push_back({PatternKind::C4, {u, static_cast<Vertex>(v), w, static_cast<Vertex>(x)}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monopolar
