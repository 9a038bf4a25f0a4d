#include "grundy/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>

namespace grundy {

namespace {

int popcount_words(const std::uint64_t* a, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i]);
  return c;
}

}  // namespace

// --------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe)
    : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::of(int universe, const std::vector<int>& vertices) {
  VertexSet s(universe);
  for (int v : vertices) {
    if (v < 0 || v >= universe)
      throw std::invalid_argument("VertexSet: vertex out of range");
    s.set(v);
  }
  return s;
}

int VertexSet::count() const {
  return popcount_words(w_.data(), static_cast<int>(w_.size()));
}

bool VertexSet::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (test(v)) out.push_back(v);
  return out;
}

// ------------------------------------------------------------------- Graph

Graph::Graph(int n, const EdgeList& edges, std::string label)
    : n_(n), words_(std::max(1, (n + 63) / 64)), label_(std::move(label)) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
}

int Graph::degree(int v) const { return popcount_words(row(v), words_); }

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, const EdgeList& edges, std::string label) {
  return Graph(n, edges, std::move(label));
}

// ------------------------------------------------------------------ graph6

Graph graph6_decode(std::string_view line) {
  // Trim surrounding whitespace so newline-terminated lines decode directly.
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                           line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
    line.remove_prefix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");

  const unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126)
    throw std::invalid_argument("graph6: multi-byte size header not supported");
  if (c0 < 63 || c0 > 125)
    throw std::invalid_argument("graph6: malformed size header");
  const int n = c0 - 63;

  const int bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - 1 != need)
    throw std::invalid_argument("graph6: body length does not match order");

  std::vector<int> group(need);
  for (std::size_t i = 0; i < need; ++i) {
    const unsigned char c = static_cast<unsigned char>(line[1 + i]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte outside printable range");
    group[i] = c - 63;
  }

  EdgeList edges;
  int k = 0;  // bit cursor over the upper triangle in column order
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((group[k / 6] >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits of the final group must be zero in minimal form.
  for (int t = k; t < static_cast<int>(need) * 6; ++t) {
    if ((group[t / 6] >> (5 - t % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6: order above single-byte header range");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int bits = n * (n - 1) / 2;
  std::vector<int> group((bits + 5) / 6, 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) group[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (int v : group) out.push_back(static_cast<char>(v + 63));
  return out;
}

// ---------------------------------------------------------- traversal core

namespace {

// Breadth-first scan from `root` over unvisited vertices; returns the list
// of reached vertices and fills dist (-1 = unreached) where requested.
std::vector<int> bfs(const Graph& g, int root, std::vector<int>* dist_out) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> reached;
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    reached.push_back(u);
    for (int w = 0; w < g.order(); ++w) {
      if (g.adjacent(u, w) && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  if (dist_out) *dist_out = std::move(dist);
  return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return static_cast<int>(bfs(g, 0, nullptr).size()) == g.order();
}

int component_count(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  int comps = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    ++comps;
    for (int u : bfs(g, v, nullptr)) seen[u] = 1;
  }
  return comps;
}

bool is_k_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int k = g.degree(0);
  return is_k_regular(g, k) ? std::optional<int>(k) : std::nullopt;
}

// ------------------------------------------------------------------- girth

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          // Non-tree edge closes a walk of this length through the root; the
          // minimum over all roots is exact because a shortest cycle is seen
          // without shortcuts from any of its own vertices.
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  int best_len = -1, best_root = -1;
  std::vector<int> best_par;
  for (int root = 0; root < n; ++root) {
    // Breadth-first search on the bipartite double cover: state v*2+parity.
    std::vector<int> dist(2 * n, -1), par(2 * n, -1);
    std::queue<int> q;
    dist[2 * root] = 0;
    q.push(2 * root);
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      int u = s / 2, p = s % 2;
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        int t = 2 * w + (1 - p);
        if (dist[t] < 0) {
          dist[t] = dist[s] + 1;
          par[t] = s;
          q.push(t);
        }
      }
    }
    int len = dist[2 * root + 1];  // shortest odd closed walk through root
    if (len > 0 && (best_len < 0 || len < best_len)) {
      best_len = len;
      best_root = root;
      best_par = std::move(par);
    }
  }
  if (best_len < 0) return std::nullopt;

  std::vector<int> walk;
  for (int s = 2 * best_root + 1; s >= 0; s = best_par[s]) walk.push_back(s / 2);
  std::reverse(walk.begin(), walk.end());  // root ... root, odd length
  walk.pop_back();
  // A globally shortest odd closed walk is a simple cycle.
  std::vector<int> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("shortest_odd_cycle: walk is not simple");
  return walk;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

// ------------------------------------------------------------------- twins

std::vector<TwinPair> find_twins(const Graph& g) {
  const int n = g.order();
  const int W = g.words_per_row();
  std::vector<TwinPair> out;
  auto row_with = [&](int v, int extra, std::vector<std::uint64_t>& buf) {
    buf.assign(g.row(v), g.row(v) + W);
    buf[extra >> 6] |= std::uint64_t{1} << (extra & 63);
  };
  std::vector<std::uint64_t> cu, cv;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::equal(g.row(u), g.row(u) + W, g.row(v))) {
        out.push_back({u, v, TwinKind::open});
        continue;
      }
      row_with(u, u, cu);
      row_with(v, v, cv);
      if (cu == cv) out.push_back({u, v, TwinKind::closed});
    }
  }
  return out;
}

// ----------------------------------------------------------------- bridges

namespace {

void bridge_dfs(const Graph& g, int u, int parent, int& timer,
                std::vector<int>& disc, std::vector<int>& low, EdgeList& out) {
  disc[u] = low[u] = timer++;
  for (int w = 0; w < g.order(); ++w) {
    if (!g.adjacent(u, w)) continue;
    if (w == parent) {
      parent = -2;  // skip the tree edge once; simple graphs have no parallels
      continue;
    }
    if (disc[w] < 0) {
      bridge_dfs(g, w, u, timer, disc, low, out);
      low[u] = std::min(low[u], low[w]);
      if (low[w] > disc[u]) out.emplace_back(std::min(u, w), std::max(u, w));
    } else {
      low[u] = std::min(low[u], disc[w]);
    }
  }
}

}  // namespace

EdgeList bridges(const Graph& g) {
  std::vector<int> disc(g.order(), -1), low(g.order(), -1);
  EdgeList out;
  int timer = 0;
  for (int v = 0; v < g.order(); ++v)
    if (disc[v] < 0) bridge_dfs(g, v, -1, timer, disc, low, out);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------- subgraph queries

bool has_triangle(const Graph& g) {
  const int W = g.words_per_row();
  for (auto [u, v] : g.edges()) {
    for (int i = 0; i < W; ++i)
      if (g.row(u)[i] & g.row(v)[i]) return true;
  }
  return false;
}

bool has_diamond(const Graph& g) {
  // A diamond subgraph is exactly an edge whose endpoints share two
  // common neighbors.
  const int W = g.words_per_row();
  for (auto [u, v] : g.edges()) {
    int common = 0;
    for (int i = 0; i < W; ++i) common += std::popcount(g.row(u)[i] & g.row(v)[i]);
    if (common >= 2) return true;
  }
  return false;
}

bool has_Y_subgraph(const Graph& g) {
  // Y sits in g iff some vertex pair (adjacent or not) has three common
  // neighbors, two of which are adjacent to each other.
  const int n = g.order();
  const int W = g.words_per_row();
  std::vector<std::uint64_t> common(W);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int cnt = 0;
      for (int i = 0; i < W; ++i) {
        common[i] = g.row(u)[i] & g.row(v)[i];
        cnt += std::popcount(common[i]);
      }
      if (cnt < 3) continue;
      for (int w = 0; w < n; ++w) {
        if (!((common[w >> 6] >> (w & 63)) & 1)) continue;
        for (int i = 0; i < W; ++i)
          if (g.row(w)[i] & common[i]) return true;
      }
    }
  }
  return false;
}

// ------------------------------------------------------------- isomorphism

namespace {

// Joint iterated color refinement over the disjoint union of g and h so the
// resulting color ids are comparable between the two graphs.
std::pair<std::vector<int>, std::vector<int>> joint_refine(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  std::vector<int> cg(ng), ch(nh);
  for (int v = 0; v < ng; ++v) cg[v] = g.degree(v);
  for (int v = 0; v < nh; ++v) ch[v] = h.degree(v);

  int classes = -1;
  for (int round = 0; round < ng + nh + 1; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for (int w = 0; w < gr.order(); ++w)
        if (gr.adjacent(v, w)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      return Sig{col[v], std::move(nb)};
    };
    std::map<Sig, int> ids;
    std::vector<Sig> sg(ng), sh(nh);
    for (int v = 0; v < ng; ++v) ids.emplace(sg[v] = signature(g, cg, v), 0);
    for (int v = 0; v < nh; ++v) ids.emplace(sh[v] = signature(h, ch, v), 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < ng; ++v) cg[v] = ids[sg[v]];
    for (int v = 0; v < nh; ++v) ch[v] = ids[sh[v]];
    if (next == classes) break;  // partition stable
    classes = next;
  }
  return {cg, ch};
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto [cg, ch] = joint_refine(g, h);
  std::vector<int> hist_g(cg), hist_h(ch);
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return std::nullopt;

  // Map g's vertices one at a time, rarest color class first, preferring
  // vertices adjacent to already-mapped ones so consistency prunes early.
  std::vector<int> class_size(*std::max_element(cg.begin(), cg.end()) + 1, 0);
  for (int c : cg) ++class_size[c];
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    bool pick_attached = false;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool attached = false;
      for (int u : order)
        if (g.adjacent(u, v)) { attached = true; break; }
      if (pick < 0 || (attached && !pick_attached) ||
          (attached == pick_attached && class_size[cg[v]] < class_size[cg[pick]])) {
        pick = v;
        pick_attached = attached;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto backtrack = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    int v = order[idx];
    for (int w = 0; w < n; ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j) {
        int u = order[j];
        ok = g.adjacent(v, u) == h.adjacent(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, idx + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  return map;
}

bool isomorphic(const Graph& g, const Graph& h) {
  return isomorphism(g, h).has_value();
}

std::string isomorphism_fingerprint(const Graph& g) {
  const int n = g.order();
  std::vector<std::string> profiles(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> dist;
    bfs(g, v, &dist);
    std::sort(dist.begin(), dist.end());
    std::string p;
    for (int d : dist) {
      p += std::to_string(d);
      p += ',';
    }
    profiles[v] = std::move(p);
  }
  std::sort(profiles.begin(), profiles.end());
  std::string out = std::to_string(n) + ";" + std::to_string(g.edge_count()) + ";";
  for (const auto& p : profiles) {
    out += p;
    out += '|';
  }
  return out;
}

}  // namespace grundy
