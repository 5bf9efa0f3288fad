#include "monopolar/generate.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace monopolar {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("probability must lie in [0, 1]");
}

void check_count(int n, const char* what) {
  if (n < 0) throw InvalidInput(std::string(what) + " must be non-negative");
}

int parse_int(const std::string& s, const char* what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw InvalidInput(std::string("bad ") + what + ": '" + s + "'");
  }
  return value;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidInput(std::string("bad ") + what + ": '" + s + "'");
  return value;
}

void expect_params(const std::vector<std::string>& params, std::size_t count, const char* usage) {
  if (params.size() != count) throw InvalidInput(std::string("usage: gen ") + usage);
}

}  // namespace

Graph generate_gnp(int n, double p, Rng& rng) {
  check_count(n, "n");
  check_probability(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph generate_planted(int n, int c, int q, double p, Rng& rng) {
  check_count(n, "n");
  check_count(c, "c");
  check_count(q, "q");
  check_probability(p);
  if (q > n) throw InvalidInput("q must not exceed n");
  if (c == 0 && q < n) throw InvalidInput("need at least one clique for the non-independent vertices");

  // Fisher-Yates shuffle of vertex labels.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);

  std::vector<int> clique(n, -1);  // -1: independent side
  for (int i = q; i < n; ++i) clique[order[i]] = static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));

  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool u_ind = clique[u] < 0, v_ind = clique[v] < 0;
      if (u_ind && v_ind) continue;
      if (u_ind != v_ind) {
        if (rng.bernoulli(p)) g.add_edge(u, v);
      } else if (clique[u] == clique[v]) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph generate_linegraph(int n, double p, Rng& rng) {
  const std::vector<Edge> base = generate_gnp(n, p, rng).edges();
  const int m = static_cast<int>(base.size());
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = base[i];
      const Edge& b = base[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) g.add_edge(i, j);
    }
  }
  return g;
}

Graph generate_chairpath(int k) {
  check_count(k, "k");
  Graph g(5 * k);
  for (int j = 0; j < k; ++j) {
    const int a = 5 * j, b = a + 1, c = a + 2, d = a + 3, e = a + 4;
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(d, e);
  }
  return g;
}

Graph generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
  Rng rng(seed);
  if (kind == "gnp") {
    expect_params(params, 2, "gnp n p");
    return generate_gnp(parse_int(params[0], "n"), parse_double(params[1], "p"), rng);
  }
  if (kind == "planted") {
    expect_params(params, 4, "planted n c q p");
    return generate_planted(parse_int(params[0], "n"), parse_int(params[1], "c"), parse_int(params[2], "q"),
                            parse_double(params[3], "p"), rng);
  }
  if (kind == "linegraph") {
    expect_params(params, 2, "linegraph n p");
    return generate_linegraph(parse_int(params[0], "n"), parse_double(params[1], "p"), rng);
  }
  if (kind == "chairpath") {
    expect_params(params, 1, "chairpath k");
    return generate_chairpath(parse_int(params[0], "k"));
  }
  throw InvalidInput("unknown generator kind '" + kind + "'");
}

}  // namespace monopolar
