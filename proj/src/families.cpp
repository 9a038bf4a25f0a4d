#include "grundy/families.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace grundy {

namespace {

// X unit on vertices 0..6: K_{3,3} with parts {0,1,2} and {3,4,5} minus the
// edge 0-3, which is subdivided by alpha = 6.
UnitGraph build_x_unit() {
  EdgeList edges;
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5})
      if (!(a == 0 && b == 3)) edges.emplace_back(a, b);
  edges.emplace_back(0, 6);
  edges.emplace_back(3, 6);
  return UnitGraph{Graph(7, edges, "x"), 6, {4, 1, 0, 6}};
}

// Y unit on vertices 0..4: K_{2,3} with degree-2 side {0,1,4}, 3-side {2,3},
// plus the edge 2-3; alpha = 4 keeps degree 2.
UnitGraph build_y_unit() {
  EdgeList edges = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}};
  return UnitGraph{Graph(5, edges, "y"), 4, {2, 0, 4}};
}

std::vector<int> sorted_component(const std::vector<int>& comp) {
  std::vector<int> s = comp;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

char unit_kind_letter(UnitKind kind) { return kind == UnitKind::X ? 'X' : 'Y'; }

UnitGraph make_X() { return build_x_unit(); }
UnitGraph make_Y() { return build_y_unit(); }

Graph make_family_M(int skeleton_order, const EdgeList& skeleton_edges,
                    const std::vector<UnitKind>& units) {
  const int m = skeleton_order;
  if (m < 2) throw std::invalid_argument("skeleton needs at least two vertices");
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : skeleton_edges) {
    if (u < 0 || u >= m || v < 0 || v >= m || u == v)
      throw std::invalid_argument("skeleton edge out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (static_cast<int>(skeleton_edges.size()) != m - 1)
    throw std::invalid_argument("skeleton is not a tree (edge count)");
  std::vector<char> seen(m, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 0;
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    ++reached;
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        bfs.push(w);
      }
  }
  if (reached != m) throw std::invalid_argument("skeleton is not a tree (disconnected)");

  std::vector<int> leaves;
  for (int v = 0; v < m; ++v) {
    const int d = static_cast<int>(adj[v].size());
    if (d != 1 && d != 3)
      throw std::invalid_argument("skeleton vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(d) + "; degrees must be 1 or 3");
    if (d == 1) leaves.push_back(v);
  }
  if (units.size() != leaves.size())
    throw std::invalid_argument("expected one unit per leaf: " + std::to_string(leaves.size()) +
                                " leaves, " + std::to_string(units.size()) + " units");

  // Host-graph layout: unit blocks in ascending-leaf order, then internal
  // skeleton vertices. Each leaf is identified with its unit's alpha.
  std::vector<int> anchor(m, -1);  // skeleton vertex -> host vertex
  EdgeList edges;
  int next = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const UnitGraph unit = units[i] == UnitKind::X ? make_X() : make_Y();
    for (auto [a, b] : unit.graph.edges()) edges.emplace_back(next + a, next + b);
    anchor[leaves[i]] = next + unit.alpha;
    next += unit.graph.order();
  }
  for (int v = 0; v < m; ++v)
    if (anchor[v] < 0) anchor[v] = next++;
  for (auto [u, v] : skeleton_edges) edges.emplace_back(anchor[u], anchor[v]);
  return Graph(next, edges);
}

int FamilyMDecomposition::unit_count() const {
  int c = 0;
  for (const auto& node : nodes) c += node.is_unit ? 1 : 0;
  return c;
}

int FamilyMDecomposition::internal_count() const {
  return static_cast<int>(nodes.size()) - unit_count();
}

std::vector<UnitKind> FamilyMDecomposition::unit_kinds() const {
  std::vector<UnitKind> kinds;
  for (const auto& node : nodes)
    if (node.is_unit) kinds.push_back(node.kind);
  return kinds;
}

namespace {

// The unit patterns are fixed shapes: alpha is the unique in-component
// degree-2 vertex, and the remaining adjacency is forced, so a required-edge
// scan plus an edge count replaces generic isomorphism.
std::optional<FamilyMNode> match_unit(const Graph& g, const std::vector<int>& comp) {
  const std::set<int> in_comp(comp.begin(), comp.end());
  const auto comp_neighbors = [&](int v) {
    std::vector<int> r;
    for (int w : g.neighbors(v))
      if (in_comp.count(w)) r.push_back(w);
    return r;
  };

  int alpha = -1;
  std::size_t comp_edges = 0;
  for (int v : comp) {
    const auto nb = comp_neighbors(v);
    comp_edges += nb.size();
    if (nb.size() == 2) {
      if (alpha >= 0) return std::nullopt;  // two degree-2 vertices
      alpha = v;
    } else if (nb.size() != 3) {
      return std::nullopt;
    }
  }
  comp_edges /= 2;
  if (alpha < 0) return std::nullopt;

  const auto alpha_nb = comp_neighbors(alpha);
  const int x = std::min(alpha_nb[0], alpha_nb[1]);
  const int y = std::max(alpha_nb[0], alpha_nb[1]);
  if (g.adjacent(x, y)) return std::nullopt;

  FamilyMNode node;
  node.is_unit = true;
  node.vertices = sorted_component(comp);
  node.alpha = alpha;

  if (comp.size() == 5) {
    // Y: remaining pair {r,s} adjacent and complete to {x,y}; 7 edges.
    if (comp_edges != 7) return std::nullopt;
    std::vector<int> rest;
    for (int v : node.vertices)
      if (v != alpha && v != x && v != y) rest.push_back(v);
    if (rest.size() != 2) return std::nullopt;
    if (!g.adjacent(rest[0], rest[1])) return std::nullopt;
    for (int r : rest)
      if (!g.adjacent(r, x) || !g.adjacent(r, y)) return std::nullopt;
    node.kind = UnitKind::Y;
    return node;
  }

  if (comp.size() == 7) {
    // X: N(x)\{alpha} and N(y)\{alpha} are disjoint pairs joined completely
    // to each other; 10 edges.
    if (comp_edges != 10) return std::nullopt;
    std::vector<int> a_side, b_side;
    for (int w : comp_neighbors(x))
      if (w != alpha) a_side.push_back(w);
    for (int w : comp_neighbors(y))
      if (w != alpha) b_side.push_back(w);
    if (a_side.size() != 2 || b_side.size() != 2) return std::nullopt;
    std::set<int> distinct(a_side.begin(), a_side.end());
    distinct.insert(b_side.begin(), b_side.end());
    distinct.insert({alpha, x, y});
    if (distinct.size() != 7) return std::nullopt;
    for (int a : a_side)
      for (int b : b_side)
        if (!g.adjacent(a, b)) return std::nullopt;
    node.kind = UnitKind::X;
    return node;
  }

  return std::nullopt;
}

}  // namespace

std::optional<FamilyMDecomposition> recognize_family_M(const Graph& g) {
  if (!is_k_regular(g, 3))
    throw std::invalid_argument("family recognition requires a cubic graph");
  if (!is_connected(g)) return std::nullopt;

  const EdgeList cut_edges = bridges(g);
  if (cut_edges.empty()) return std::nullopt;
  std::set<std::pair<int, int>> cut;
  for (auto [u, v] : cut_edges) cut.insert(std::minmax(u, v));

  // Components of g minus its cut edges, discovered in ascending-vertex order.
  const int n = g.order();
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::queue<int> bfs;
    bfs.push(s);
    comp_of[s] = id;
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      comps[id].push_back(u);
      for (int w : g.neighbors(u)) {
        if (comp_of[w] >= 0 || cut.count(std::minmax(u, w))) continue;
        comp_of[w] = id;
        bfs.push(w);
      }
    }
  }

  FamilyMDecomposition dec;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      FamilyMNode node;
      node.is_unit = false;
      node.vertices = comp;
      dec.nodes.push_back(std::move(node));
    } else if (comp.size() == 5 || comp.size() == 7) {
      auto node = match_unit(g, comp);
      if (!node) return std::nullopt;
      dec.nodes.push_back(std::move(*node));
    } else {
      return std::nullopt;
    }
  }

  for (auto [u, v] : cut_edges) dec.skeleton_edges.emplace_back(comp_of[u], comp_of[v]);
  if (dec.skeleton_edges.size() + 1 != dec.nodes.size()) return std::nullopt;

  const int units = dec.unit_count();
  const int internals = dec.internal_count();
  dec.in_m_prime = (units == 2 && internals == 0) || (units == 3 && internals == 1);
  return dec;
}

std::vector<int> family_m_witness_start(const Graph& g, const FamilyMDecomposition& dec) {
  const int m = static_cast<int>(dec.nodes.size());
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : dec.skeleton_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  const auto bfs_from = [&](int s) {
    std::vector<int> dist(m, -1), parent(m, -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        }
    }
    return std::make_pair(dist, parent);
  };

  int best_i = -1, best_j = -1, best_dist = -1;
  for (int i = 0; i < m; ++i) {
    if (!dec.nodes[i].is_unit) continue;
    const auto [dist, parent] = bfs_from(i);
    for (int j = i + 1; j < m; ++j)
      if (dec.nodes[j].is_unit && dist[j] > best_dist) {
        best_dist = dist[j];
        best_i = i;
        best_j = j;
      }
  }
  if (best_dist < 3)
    throw std::invalid_argument(
        "witness start needs two units at skeleton distance of at least 3");

  const auto [dist, parent] = bfs_from(best_i);
  std::vector<int> path;  // node ids from best_i to best_j
  for (int u = best_j; u >= 0; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());

  // Role-based unit prefix on the host graph: any conforming choice yields
  // footprints (4,2,1,1) for X and (4,1,1) for Y, ending at alpha.
  const auto unit_prefix = [&](const FamilyMNode& node) {
    const std::set<int> in_comp(node.vertices.begin(), node.vertices.end());
    const auto comp_neighbors = [&](int v) {
      std::vector<int> r;
      for (int w : g.neighbors(v))
        if (in_comp.count(w)) r.push_back(w);
      std::sort(r.begin(), r.end());
      return r;
    };
    const auto alpha_nb = comp_neighbors(node.alpha);
    const int x = alpha_nb[0], y = alpha_nb[1];
    if (node.kind == UnitKind::X) {
      int a = -1, b = -1;
      for (int w : comp_neighbors(x))
        if (w != node.alpha) {
          a = w;
          break;
        }
      for (int w : comp_neighbors(y))
        if (w != node.alpha) {
          b = w;
          break;
        }
      return std::vector<int>{a, b, x, node.alpha};
    }
    int r = -1;
    for (int v : node.vertices)
      if (v != node.alpha && v != x && v != y) {
        r = v;
        break;
      }
    return std::vector<int>{r, x, node.alpha};
  };

  std::vector<int> start = unit_prefix(dec.nodes[best_i]);
  const std::vector<int> second = unit_prefix(dec.nodes[best_j]);
  start.insert(start.end(), second.begin(), second.end());
  for (std::size_t p = 1; p + 1 < path.size(); ++p)
    start.push_back(dec.nodes[path[p]].vertices.front());
  return start;
}

namespace {

Graph build_tk() {
  // Triangle {0,1,2}, matching i-(i+3), two extra vertices 6 and 7 each
  // adjacent to all of {3,4,5}.
  EdgeList edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
  for (int apex : {6, 7})
    for (int b : {3, 4, 5}) edges.emplace_back(apex, b);
  return Graph(8, edges, "tk");
}

Graph build_prism() {
  EdgeList edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges, "prism");
}

Graph build_q3() {
  EdgeList edges;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
  return Graph(8, edges, "q3");
}

Graph build_tq3() {
  // Two 4-cycles 0123 and 4567 joined by the twisted matching 0-4, 1-5,
  // 2-7, 3-6.
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                    {0, 4}, {1, 5}, {2, 7}, {3, 6}};
  return Graph(8, edges, "tq3");
}

// Two diamonds (K_4 minus an edge) joined by a matching between their
// degree-2 vertices.
Graph build_nyy() {
  EdgeList edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                    {2, 6}, {3, 7}};
  return Graph(8, edges, "nyy");
}

// A diamond and a K_{3,3}-minus-an-edge block joined by two edges at their
// degree-2 vertices.
Graph build_nxy() {
  EdgeList edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (int a : {4, 5, 6})
    for (int b : {7, 8, 9})
      if (!(a == 6 && b == 9)) edges.emplace_back(a, b);
  edges.emplace_back(2, 6);
  edges.emplace_back(3, 9);
  return Graph(10, edges, "nxy");
}

// Two theta blocks (K_{2,3}) joined by a perfect matching between their
// degree-2 vertices; equivalently K_{5,5} minus the union of a 6-cycle and a
// 4-cycle. Order 10, bipartite, girth 4. Its maximum Z-sequence length is
// exactly half the order, which places it outside the fifteen-graph
// half-order list that the characterization checks test against; the
// characterization harness reports it as the one expected failure at this
// order.
Graph build_ntt() {
  EdgeList edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                    {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8},
                    {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}};
  return Graph(10, edges, "ntt");
}

// Two K_{3,3}-minus-an-edge blocks joined by two edges at their degree-2
// vertices.
Graph build_nxx() {
  EdgeList edges;
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5})
      if (!(a == 2 && b == 5)) edges.emplace_back(a, b);
  for (int a : {6, 7, 8})
    for (int b : {9, 10, 11})
      if (!(a == 8 && b == 11)) edges.emplace_back(a, b);
  edges.emplace_back(2, 8);
  edges.emplace_back(5, 11);
  return Graph(12, edges, "nxx");
}

}  // namespace

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges, "c" + std::to_string(n));
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("a complete graph needs at least 1 vertex");
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges, "k" + std::to_string(n));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("both parts must be nonempty");
  EdgeList edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges, "k" + std::to_string(a) + "," + std::to_string(b));
}

Graph make_diamond() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, "diamond");
}

Graph make_co2c4() {
  // Complement of C4 on {0..3} plus C4 on {4..7}: the two diagonals inside
  // each half plus every cross edge; 5-regular on 8 vertices.
  EdgeList edges = {{0, 2}, {1, 3}, {4, 6}, {5, 7}};
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 8; ++v) edges.emplace_back(u, v);
  return Graph(8, edges, "co2c4");
}

Graph make_petersen() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, ((i + 2) % 5) + 5);  // inner pentagram
  }
  return Graph(10, edges, "petersen");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    const auto add = [&](std::string name, Graph g, std::optional<int> gr,
                         std::optional<int> grz, std::optional<int> zf) {
      g.set_label(name);
      list.push_back(CatalogEntry{std::move(name), std::move(g), gr, grz, zf});
    };

    const EdgeList k2_edge = {{0, 1}};
    const EdgeList star_edges = {{0, 1}, {0, 2}, {0, 3}};
    using K = UnitKind;

    add("x", make_X().graph, std::nullopt, std::nullopt, std::nullopt);
    add("y", make_Y().graph, std::nullopt, std::nullopt, std::nullopt);
    add("x2", make_family_M(2, k2_edge, {K::X, K::X}), std::nullopt, 7, 7);
    add("x3", make_family_M(4, star_edges, {K::X, K::X, K::X}), std::nullopt, 11, 11);
    add("y2", make_family_M(2, k2_edge, {K::Y, K::Y}), 5, 5, 5);
    add("y3", make_family_M(4, star_edges, {K::Y, K::Y, K::Y}), 8, 8, 8);
    add("xy", make_family_M(2, k2_edge, {K::X, K::Y}), std::nullopt, 6, 6);
    add("xy2", make_family_M(4, star_edges, {K::X, K::Y, K::Y}), std::nullopt, 9, 9);
    add("x2y", make_family_M(4, star_edges, {K::X, K::X, K::Y}), std::nullopt, 10, 10);
    add("nxx", build_nxx(), std::nullopt, 6, 6);
    add("nxy", build_nxy(), std::nullopt, 5, 5);
    add("nyy", build_nyy(), 4, 4, 4);
    add("ntt", build_ntt(), 7, 5, 5);
    add("prism", build_prism(), 3, 3, 3);
    add("tk", build_tk(), std::nullopt, 4, 4);
    add("q3", build_q3(), 4, 4, 4);
    add("tq3", build_tq3(), 4, 4, 4);
    add("petersen", make_petersen(), 5, 5, 5);
    add("k33", make_complete_bipartite(3, 3), 3, 2, 4);
    add("k4", make_complete(4), 1, 1, 3);
    add("co2c4", make_co2c4(), 2, 2, 6);
    add("diamond", make_diamond(), 2, 2, 2);
    return list;
  }();
  return entries;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return entry;
  return std::nullopt;
}

Graph random_k_regular(int n, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  if (n <= k) throw std::invalid_argument("a k-regular graph needs more than k vertices");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw std::invalid_argument("n*k must be even for a k-regular graph to exist");

  std::mt19937_64 rng(seed);
  std::vector<int> cells(static_cast<std::size_t>(n) * k);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i) / k;

  constexpr int budget = 5000;
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Hand-rolled Fisher-Yates so the sequence depends only on the seed.
    for (std::size_t i = cells.size() - 1; i > 0; --i)
      std::swap(cells[i], cells[rng() % (i + 1)]);
    std::set<std::pair<int, int>> edge_set;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < cells.size() && simple; i += 2) {
      const int u = cells[i], v = cells[i + 1];
      if (u == v || !edge_set.insert(std::minmax(u, v)).second) simple = false;
    }
    if (!simple) continue;
    EdgeList edges(edge_set.begin(), edge_set.end());
    return Graph(n, edges);
  }
  throw std::runtime_error("pairing-model rejection budget exhausted for n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
}

}  // namespace grundy
