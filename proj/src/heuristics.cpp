#include "grundy/heuristics.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace grundy {

namespace {

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + " requires a connected graph");
}

bool word_bit(const std::vector<std::uint64_t>& words, int v) {
  return (words[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

void set_word_bit(std::vector<std::uint64_t>& words, int v) {
  words[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

}  // namespace

long long rational_ceiling(const rational& r) {
  const long long num = r.numerator();
  const long long den = r.denominator();  // normalized positive
  return num > 0 ? (num + den - 1) / den : num / den;
}

std::string rational_to_string(const rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

rational grundy_regular_lower_bound(int n, int k) {
  if (k < 3) throw std::invalid_argument("bound requires degree k >= 3");
  if (n < k + 1) throw std::invalid_argument("a k-regular graph needs at least k+1 vertices");
  const long long ceil_half_k = (k + 1) / 2;
  return rational(n + ceil_half_k - 2, k - 1);
}

rational zgrundy_regular_lower_bound(int n, int k, bool has_triangle) {
  if (k < 3) throw std::invalid_argument("bound requires degree k >= 3");
  if (n < k + 1) throw std::invalid_argument("a k-regular graph needs at least k+1 vertices");
  return rational(has_triangle ? n - 1 : n - 2, k - 1);
}

rational zero_forcing_regular_upper_bound(int n, int k, bool has_triangle) {
  if (k < 3) throw std::invalid_argument("bound requires degree k >= 3");
  if (n < k + 1) throw std::invalid_argument("a k-regular graph needs at least k+1 vertices");
  const long long numer = static_cast<long long>(n) * (k - 2) + (has_triangle ? 1 : 2);
  return rational(numer, k - 1);
}

std::optional<std::pair<int, int>> theorem21_start_pair(const Graph& g) {
  require_connected(g, "start-pair selection");
  if (!has_triangle(g)) throw std::invalid_argument("start-pair selection requires a triangle");
  const int n = g.order();
  if (2 * static_cast<std::size_t>(g.edge_count()) == static_cast<std::size_t>(n) * (n - 1))
    throw std::invalid_argument("start-pair selection excludes complete graphs");

  const int words = g.words_per_row();
  const auto closed_equal = [&](int u, int v) {
    for (int i = 0; i < words; ++i) {
      std::uint64_t a = g.row(u)[i];
      std::uint64_t b = g.row(v)[i];
      if (i == (u >> 6)) a |= std::uint64_t{1} << (u & 63);
      if (i == (v >> 6)) b |= std::uint64_t{1} << (v & 63);
      if (a != b) return false;
    }
    return true;
  };

  int best_u = -1, best_v = -1, best_common = -1;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (closed_equal(u, v)) continue;  // adjacent twins are excluded
      int common = 0;
      for (int i = 0; i < words; ++i) common += std::popcount(g.row(u)[i] & g.row(v)[i]);
      if (common > best_common) {
        best_common = common;
        best_u = u;
        best_v = v;
      }
    }
  }
  if (best_common <= 0) return std::nullopt;  // no non-twin pair inside a triangle
  return std::make_pair(best_u, best_v);
}

VertexSequence greedy_min_footprint(const Graph& g, Variant variant,
                                    const std::vector<int>& start) {
  require_connected(g, "greedy sequence construction");
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("graph is empty");
  if (variant == Variant::z && n == 1)
    throw std::invalid_argument("Z-variant requires a graph without isolated vertices");

  if (!start.empty()) {
    const bool ok = variant == Variant::closed ? is_closed_neighborhood_sequence(g, start)
                                               : is_z_sequence(g, start);
    if (!ok) throw std::invalid_argument("start is not a valid sequence prefix of the variant");
  }

  const int words = g.words_per_row();
  std::vector<std::uint64_t> dominated(words, 0);
  std::vector<int> order = start;
  for (int v : start) {
    for (int i = 0; i < words; ++i) dominated[i] |= g.row(v)[i];
    set_word_bit(dominated, v);
  }

  for (;;) {
    int best = -1;
    long best_key = LONG_MAX;
    for (int v = 0; v < n; ++v) {
      int open_new = 0;
      for (int i = 0; i < words; ++i)
        open_new += std::popcount(g.row(v)[i] & ~dominated[i]);
      const bool already = word_bit(dominated, v);
      const int closed_new = open_new + (already ? 0 : 1);
      const bool playable = variant == Variant::closed ? closed_new > 0 : open_new > 0;
      if (!playable) continue;
      // Minimize the footprint size; prefer already-dominated vertices on
      // ties, then the lowest index.
      const long key = (static_cast<long>(closed_new) * 2 + (already ? 0 : 1)) * (n + 1) + v;
      if (key < best_key) {
        best_key = key;
        best = v;
      }
    }
    if (best < 0) break;
    order.push_back(best);
    for (int i = 0; i < words; ++i) dominated[i] |= g.row(best)[i];
    set_word_bit(dominated, best);
  }

  if (!is_dominating(g, order))
    throw std::logic_error("greedy construction stalled before dominating the graph");
  return footprints(g, order);
}

std::vector<int> odd_cycle_start(const Graph& g) {
  require_connected(g, "odd-cycle start construction");
  if (has_triangle(g)) throw std::invalid_argument("odd-cycle start requires a triangle-free graph");
  const auto cycle = shortest_odd_cycle(g);
  if (!cycle) throw std::invalid_argument("odd-cycle start requires a non-bipartite graph");
  const int p = static_cast<int>(cycle->size());

  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < p; ++i) position[(*cycle)[i]] = i;

  // Best (shortest) arc of the cycle between two neighbors of a single
  // outside vertex, scanned deterministically.
  int best_len = INT_MAX, best_from = -1, best_to = -1;
  for (int x = 0; x < g.order(); ++x) {
    if (position[x] >= 0) continue;
    std::vector<int> on_cycle;
    for (int w : g.neighbors(x))
      if (position[w] >= 0) on_cycle.push_back(position[w]);
    if (on_cycle.size() < 2) continue;
    std::sort(on_cycle.begin(), on_cycle.end());
    for (std::size_t a = 0; a < on_cycle.size(); ++a) {
      for (std::size_t b = a + 1; b < on_cycle.size(); ++b) {
        const int forward = on_cycle[b] - on_cycle[a];
        if (forward < best_len) {
          best_len = forward;
          best_from = on_cycle[a];
          best_to = on_cycle[b];
        }
        const int backward = p - forward;
        if (backward < best_len) {
          best_len = backward;
          best_from = on_cycle[b];
          best_to = on_cycle[a];
        }
      }
    }
  }

  std::vector<int> start;
  if (best_from >= 0) {
    for (int i = best_from;; i = (i + 1) % p) {
      start.push_back((*cycle)[i]);
      if (i == best_to) break;
    }
  } else {
    start = *cycle;
  }
  return start;
}

}  // namespace grundy
