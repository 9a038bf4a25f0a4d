// Immutable simple graphs with bit-packed adjacency rows, plus the structural
// queries the solvers rely on: connectivity, regularity, girth and shortest
// odd cycles, twin detection, bridges, small fixed-subgraph tests, pruned
// isomorphism testing, and the graph6 one-line interchange format.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grundy {

// Edge lists use ordered pairs (u, v) with u < v.
using EdgeList = std::vector<std::pair<int, int>>;

// Dynamic bit set over a fixed vertex universe 0..n-1, packed in 64-bit words.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, const std::vector<int>& vertices);

  int universe() const { return n_; }
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int count() const;
  bool empty() const;
  std::vector<int> to_vector() const;  // ascending vertex order

  bool operator==(const VertexSet&) const = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Immutable simple graph on dense vertices 0..n-1. Adjacency is stored as one
// bit row per vertex; orders up to 64 use a single word per row (the solver
// fast path) and larger orders fall back to multi-word rows transparently.
class Graph {
public:
  Graph() = default;
  // Builds the symmetric closure of `edges`; duplicates collapse. Throws
  // std::invalid_argument on loops or endpoints outside 0..n-1.
  Graph(int n, const EdgeList& edges, std::string label = "");

  int order() const { return n_; }
  int words_per_row() const { return words_; }
  bool fits_word() const { return n_ <= 64; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1;
  }
  int degree(int v) const;
  int edge_count() const;

  // Single-word row accessors; valid only when fits_word().
  std::uint64_t row64(int v) const { return rows_[static_cast<std::size_t>(v) * words_]; }
  std::uint64_t closed_row64(int v) const { return row64(v) | (std::uint64_t{1} << v); }
  std::uint64_t full_mask64() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  // Multi-word row pointer (words_per_row() words).
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

  std::vector<int> neighbors(int v) const;   // ascending
  EdgeList edges() const;                    // ascending (u, v), u < v

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Structural equality of labeled graphs (ignores the name label).
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

private:
  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> rows_;
  std::string label_;
};

// Construction entry point mirroring Graph's constructor; validates inputs.
Graph build_graph(int n, const EdgeList& edges, std::string label = "");

// graph6 interchange (single-byte size header, n <= 62).
// Decode throws std::invalid_argument on malformed input; encode throws on
// orders above the supported header range.
Graph graph6_decode(std::string_view line);
std::string graph6_encode(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_k_regular(const Graph& g, int k);
// Common degree of a regular graph, or nullopt when degrees differ.
std::optional<int> regular_degree(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
// Vertices of a shortest odd cycle in order; nullopt when g is bipartite.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);
// Two-coloring (sides listed ascending); nullopt when g has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

enum class TwinKind { closed, open };
struct TwinPair {
  int u, v;  // u < v
  TwinKind kind;
  bool operator==(const TwinPair&) const = default;
};
// All unordered pairs with equal closed neighborhoods (closed twins) or equal
// open neighborhoods (open twins); a pair can satisfy at most one kind.
std::vector<TwinPair> find_twins(const Graph& g);

// Cut edges: removal increases the component count. Ascending (u, v) pairs.
EdgeList bridges(const Graph& g);

// Fixed-subgraph tests (subgraph containment, not induced):
//   triangle  = K3;
//   diamond   = K4 minus one edge;
//   Y         = K_{2,3} plus an edge between two of its degree-2 vertices.
bool has_triangle(const Graph& g);
bool has_diamond(const Graph& g);
bool has_Y_subgraph(const Graph& g);

// Edge-preserving bijection g -> h when one exists (vertex map m with
// adjacent(u,v) == adjacent(m[u],m[v]) for all pairs), or nullopt.
std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h);
bool isomorphic(const Graph& g, const Graph& h);

// Isomorphism-invariant bucketing key (sorted per-vertex distance profiles).
// Unequal fingerprints rule isomorphism out; equal ones do not prove it.
std::string isomorphism_fingerprint(const Graph& g);

}  // namespace grundy
