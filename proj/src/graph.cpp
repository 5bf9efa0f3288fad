#include "monopolar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace monopolar {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : "end of input: " + message),
      line_(line) {}

Graph::Graph(int n) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  adjacency_.resize(n);
  rows_.assign(n, Bitset(n));
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  const int n = size();
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
  if (rows_[u][v]) {
    throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  rows_[u].set(v);
  rows_[v].set(u);
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  const int n = size();
  if (u < 0 || v < 0 || u >= n || v >= n || !rows_[u][v]) throw InvalidInput("no such edge");
  rows_[u].reset(v);
  rows_[v].reset(u);
  std::erase(adjacency_[u], v);
  std::erase(adjacency_[v], u);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> kept = edges();
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::erase_if(kept, [&](const Edge& e) { return std::binary_search(drop.begin(), drop.end(), e); });
  return Graph(size(), kept);
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
  InducedSubgraph out;
  std::vector<Vertex> index(g.size(), -1);
  for (auto v = keep.find_first(); v != Bitset::npos; v = keep.find_next(v)) {
    index[v] = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(static_cast<Vertex>(v));
  }
  out.graph = Graph(static_cast<int>(out.origin.size()));
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    for (Vertex w : g.neighbors(out.origin[i])) {
      if (index[w] > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return out;
}

Bitset make_set(int n, std::initializer_list<Vertex> members) {
  return make_set(n, std::span<const Vertex>(members.begin(), members.size()));
}

Bitset make_set(int n, std::span<const Vertex> members) {
  Bitset s(n);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

std::vector<Vertex> to_vector(const Bitset& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool is_independent_set(const Graph& g, const Bitset& s) {
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
    if (g.row(static_cast<Vertex>(v)).intersects(s)) return false;
  }
  return true;
}

bool is_cluster_graph(const Graph& g, const Bitset& s) {
  // g[s] is a disjoint union of cliques iff adjacent members of s have the
  // same closed neighbourhood inside s.
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
    Bitset closed_v = g.row(static_cast<Vertex>(v)) & s;
    closed_v.set(v);
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      if (!s[u] || u < static_cast<Vertex>(v)) continue;
      Bitset closed_u = g.row(u) & s;
      closed_u.set(u);
      if (closed_u != closed_v) return false;
    }
  }
  return true;
}

Bitset Labeling::members(Side s) const {
  Bitset out(sides_.size());
  for (std::size_t v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == s) out.set(v);
  }
  return out;
}

int Labeling::count(Side s) const {
  return static_cast<int>(std::count(sides_.begin(), sides_.end(), s));
}

MonopolarPartition MonopolarPartition::from_membership(const std::vector<bool>& in_independent) {
  MonopolarPartition p;
  for (std::size_t v = 0; v < in_independent.size(); ++v) {
    (in_independent[v] ? p.independent : p.cluster).push_back(static_cast<Vertex>(v));
  }
  return p;
}

bool verify_partition(const Graph& g, const MonopolarPartition& p, const Labeling& constraints) {
  const int n = g.size();
  if (constraints.size() != 0 && constraints.size() != n) return false;
  Bitset cluster(n), independent(n);
  for (Vertex v : p.cluster) {
    if (v < 0 || v >= n || cluster[v]) return false;
    cluster.set(v);
  }
  for (Vertex v : p.independent) {
    if (v < 0 || v >= n || independent[v] || cluster[v]) return false;
    independent.set(v);
  }
  if (static_cast<int>((cluster | independent).count()) != n) return false;
  for (Vertex v = 0; v < constraints.size(); ++v) {
    if (constraints[v] == Side::Cluster && !cluster[v]) return false;
    if (constraints[v] == Side::Independent && !independent[v]) return false;
  }
  return is_independent_set(g, independent) && is_cluster_graph(g, cluster);
}

bool verify_partition(const Graph& g, const MonopolarPartition& p) {
  return verify_partition(g, p, Labeling(g.size()));
}

namespace {

// Line reader that skips '#' comments and blank lines and tracks numbering.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<long long> parse_int(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Vertex parse_vertex(std::string_view field, int n, int line) {
  auto value = parse_int(field);
  if (!value) throw ParseError(line, "expected a vertex index, got '" + std::string(field) + "'");
  if (*value < 0 || *value >= n) {
    throw ParseError(line, "vertex index " + std::string(field) + " out of range [0, " +
                               std::to_string(n) + ")");
  }
  return static_cast<Vertex>(*value);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(0, "missing header 'n m'");
  auto header = split_fields(line);
  std::optional<long long> n, m;
  if (header.size() == 2) {
    n = parse_int(header[0]);
    m = parse_int(header[1]);
  }
  if (!n || !m || *n < 0 || *m < 0) throw ParseError(reader.number(), "malformed header, expected 'n m'");
  if (*m > *n * (*n - 1) / 2) throw ParseError(reader.number(), "edge count exceeds n(n-1)/2");

  Graph g(static_cast<int>(*n));
  for (long long i = 0; i < *m; ++i) {
    if (!reader.next(line)) {
      throw ParseError(0, "expected " + std::to_string(*m) + " edges, found " + std::to_string(i));
    }
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(reader.number(), "expected 'u v'");
    Vertex u = parse_vertex(fields[0], g.size(), reader.number());
    Vertex v = parse_vertex(fields[1], g.size(), reader.number());
    if (u == v) throw ParseError(reader.number(), "self-loop on vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw ParseError(reader.number(), "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(u, v);
  }
  if (reader.next(line)) throw ParseError(reader.number(), "unexpected content after the last edge");
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Labeling parse_labeling(std::istream& in, int n, bool allow_both) {
  LineReader reader(in);
  Labeling labels(n);
  Bitset seen(n);
  std::string line;
  while (reader.next(line)) {
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(reader.number(), "expected 'v C', 'v I' or 'v CI'");
    Vertex v = parse_vertex(fields[0], n, reader.number());
    if (seen[v]) throw ParseError(reader.number(), "vertex " + std::to_string(v) + " constrained twice");
    seen.set(v);
    if (fields[1] == "C") {
      labels.set(v, Side::Cluster);
    } else if (fields[1] == "I") {
      labels.set(v, Side::Independent);
    } else if (allow_both && (fields[1] == "CI" || fields[1] == "IC")) {
      labels.set(v, Side::Undecided);
    } else {
      throw ParseError(reader.number(), "unknown side '" + std::string(fields[1]) + "'");
    }
  }
  return labels;
}

Labeling parse_labeling(std::string_view text, int n, bool allow_both) {
  std::istringstream in{std::string(text)};
  return parse_labeling(in, n, allow_both);
}

std::optional<MonopolarPartition> parse_partition(std::istream& in, int n) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(0, "empty partition file");
  auto verdict = split_fields(line);
  if (verdict.size() == 1 && verdict[0] == "NO") {
    if (reader.next(line)) throw ParseError(reader.number(), "unexpected content after NO");
    return std::nullopt;
  }
  if (verdict.size() != 1 || verdict[0] != "YES") throw ParseError(reader.number(), "expected YES or NO");

  MonopolarPartition p;
  bool have_cluster = false, have_independent = false;
  while (reader.next(line)) {
    auto fields = split_fields(line);
    std::vector<Vertex>* target = nullptr;
    if (fields[0] == "C" && !have_cluster) {
      target = &p.cluster;
      have_cluster = true;
    } else if (fields[0] == "I" && !have_independent) {
      target = &p.independent;
      have_independent = true;
    } else {
      throw ParseError(reader.number(), "expected a single 'C ...' and a single 'I ...' line");
    }
    for (std::size_t i = 1; i < fields.size(); ++i) target->push_back(parse_vertex(fields[i], n, reader.number()));
  }
  if (!have_cluster || !have_independent) throw ParseError(0, "partition needs both a C line and an I line");
  return p;
}

std::optional<MonopolarPartition> parse_partition(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  return parse_partition(in, n);
}

std::string format_partition(const std::optional<MonopolarPartition>& p) {
  if (!p) return "NO\n";
  std::ostringstream out;
  out << "YES\nC";
  for (Vertex v : p->cluster) out << ' ' << v;
  out << "\nI";
  for (Vertex v : p->independent) out << ' ' << v;
  out << '\n';
  return out.str();
}

}  // namespace monopolar
