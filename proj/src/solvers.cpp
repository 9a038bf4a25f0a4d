#include "grundy/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace grundy {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_seconds(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("graph is empty");
}

void require_no_isolated_for_z(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("Z-variant requires a graph without isolated vertices");
}

// Per-vertex masks: play[v] decides playability (closed or open neighborhood
// depending on the variant); cover[v] = N[v] is what a play adds to D.
struct MaskTables {
  std::vector<std::uint64_t> play;
  std::vector<std::uint64_t> cover;
  std::uint64_t full = 0;
};

MaskTables make_masks(const Graph& g, Variant variant) {
  MaskTables t;
  const int n = g.order();
  t.play.resize(n);
  t.cover.resize(n);
  t.full = g.full_mask64();
  for (int v = 0; v < n; ++v) {
    t.cover[v] = g.closed_row64(v);
    t.play[v] = variant == Variant::closed ? g.closed_row64(v) : g.row64(v);
  }
  return t;
}

// Any valid maximal sequence is a lower bound; this seeds the incumbent for
// the branch-and-bound path. Min-footprint rule, already-dominated vertices
// preferred on ties, then lowest index.
int greedy_incumbent(const MaskTables& t, int n) {
  std::uint64_t dominated = 0;
  int len = 0;
  for (;;) {
    int best = -1;
    int best_key = INT_MAX;
    for (int v = 0; v < n; ++v) {
      if ((t.play[v] & ~dominated) == 0) continue;
      const int fp = std::popcount(t.cover[v] & ~dominated);
      const int in_d = (dominated >> v) & 1u;
      const int key = fp * 4 + (in_d ? 0 : 2);
      if (key < best_key) {
        best_key = key;
        best = v;
      }
    }
    if (best < 0) return len;
    dominated |= t.cover[best];
    ++len;
  }
}

// Flat-table solver for n <= flat_memo_max_n: memo indexed by the dominated
// set, value = maximum remaining length, 0xFF meaning "not yet computed".
struct FlatSolver {
  const MaskTables& t;
  int n;
  std::vector<std::uint8_t> memo;
  std::uint64_t explored = 0;

  FlatSolver(const MaskTables& tables, int order)
      : t(tables), n(order), memo(std::size_t{1} << order, 0xFF) {}

  int solve(std::uint64_t dominated) {
    std::uint8_t& slot = memo[dominated];
    if (slot != 0xFF) return slot;
    ++explored;
    int best = 0;
    for (int v = 0; v < n; ++v) {
      if ((t.play[v] & ~dominated) == 0) continue;
      const int r = 1 + solve(dominated | t.cover[v]);
      if (r > best) best = r;
    }
    slot = static_cast<std::uint8_t>(best);
    return best;
  }

  std::vector<int> replay() const {
    std::vector<int> order;
    std::uint64_t dominated = 0;
    int remaining = memo[0];
    while (remaining > 0) {
      int chosen = -1;
      for (int v = 0; v < n; ++v) {
        if ((t.play[v] & ~dominated) == 0) continue;
        if (memo[dominated | t.cover[v]] == remaining - 1) {
          chosen = v;
          break;
        }
      }
      if (chosen < 0) throw std::logic_error("sequence replay dead-ended");
      order.push_back(chosen);
      dominated |= t.cover[chosen];
      --remaining;
    }
    return order;
  }
};

// Hash-memo solver with branch-and-bound degradation for 24 < n <= 64 (or
// when forced by options). The memo stores only exactly-solved states; a
// subtree touched by incumbent pruning is inexact and stays out, which keeps
// every stored value trustworthy regardless of the pruning schedule.
struct HashSolver {
  const MaskTables& t;
  int n;
  std::size_t budget;
  std::unordered_map<std::uint64_t, int> memo;
  std::uint64_t explored = 0;
  int incumbent = 0;
  bool pruned_anywhere = false;

  HashSolver(const MaskTables& tables, int order, std::size_t memo_budget)
      : t(tables), n(order), budget(memo_budget) {}

  // Returns (max remaining length from `dominated`, value is exact).
  std::pair<int, bool> solve(std::uint64_t dominated, int len) {
    if (auto it = memo.find(dominated); it != memo.end()) return {it->second, true};
    ++explored;
    int best = 0;
    bool exact = true;
    for (int v = 0; v < n; ++v) {
      if ((t.play[v] & ~dominated) == 0) continue;
      const std::uint64_t next = dominated | t.cover[v];
      // Every later move has a nonempty footprint, so at most one move per
      // still-undominated vertex remains below `next`.
      const int ceiling = len + 1 + std::popcount(~next & t.full);
      if (ceiling <= incumbent) {
        exact = false;
        pruned_anywhere = true;
        continue;
      }
      auto [r, ex] = solve(next, len + 1);
      if (1 + r > best) best = 1 + r;
      if (!ex) exact = false;
      if (len + 1 + r > incumbent) incumbent = len + 1 + r;
    }
    if (exact && memo.size() < budget) memo.emplace(dominated, best);
    return {best, exact};
  }

  // Depth-first reconstruction of a sequence of exactly `target` moves,
  // lowest playable index first; memoized exact values prune descents that
  // cannot reach the target.
  bool extend(std::uint64_t dominated, int len, int target, std::vector<int>& order) const {
    if (len == target) return true;
    for (int v = 0; v < n; ++v) {
      if ((t.play[v] & ~dominated) == 0) continue;
      const std::uint64_t next = dominated | t.cover[v];
      if (len + 1 + std::popcount(~next & t.full) < target) continue;
      if (auto it = memo.find(next); it != memo.end() && len + 1 + it->second < target) continue;
      order.push_back(v);
      if (extend(next, len + 1, target, order)) return true;
      order.pop_back();
    }
    return false;
  }
};

}  // namespace

SolveResult grundy_number(const Graph& g, Variant variant, const SolveOptions& opts) {
  require_nonempty(g);
  const int n = g.order();
  if (!g.fits_word())
    throw std::invalid_argument("exact solver supports at most 64 vertices, got " +
                                std::to_string(n));
  if (variant == Variant::z) require_no_isolated_for_z(g);

  const auto start = clock_type::now();
  const MaskTables t = make_masks(g, variant);
  SolveResult result;

  if (n <= opts.flat_memo_max_n) {
    FlatSolver solver(t, n);
    result.value = solver.solve(0);
    result.sequence = footprints(g, solver.replay());
    result.stats.explored = solver.explored;
    result.stats.memo_entries = solver.explored;
    result.stats.method = "dp-flat";
  } else {
    HashSolver solver(t, n, opts.hash_memo_budget);
    solver.incumbent = greedy_incumbent(t, n);
    solver.solve(0, 0);
    result.value = solver.incumbent;
    std::vector<int> order;
    if (!solver.extend(0, 0, result.value, order))
      throw std::logic_error("sequence replay failed to reach the computed value");
    result.sequence = footprints(g, order);
    result.stats.explored = solver.explored;
    result.stats.memo_entries = solver.memo.size();
    result.stats.method = solver.pruned_anywhere ? "dp-hash+bnb" : "dp-hash";
  }

  const bool valid = variant == Variant::closed
                         ? is_closed_neighborhood_sequence(g, result.sequence->order)
                         : is_z_sequence(g, result.sequence->order);
  if (!valid || result.sequence->length() != result.value)
    throw std::logic_error("solver produced an invalid witness sequence");
  result.stats.seconds = elapsed_seconds(start);
  return result;
}

int brute_force_grundy(const Graph& g, Variant variant) {
  require_nonempty(g);
  const int n = g.order();
  if (n > 10)
    throw std::invalid_argument("brute-force oracle is guarded to n <= 10, got " +
                                std::to_string(n));
  if (variant == Variant::z) require_no_isolated_for_z(g);

  const MaskTables t = make_masks(g, variant);
  const std::function<int(std::uint64_t)> rec = [&](std::uint64_t dominated) {
    int best = 0;
    for (int v = 0; v < n; ++v) {
      if ((t.play[v] & ~dominated) == 0) continue;
      const int r = 1 + rec(dominated | t.cover[v]);
      if (r > best) best = r;
    }
    return best;
  };
  return rec(0);
}

ForcingState forcing_closure(const Graph& g, const VertexSet& seed) {
  const int n = g.order();
  if (seed.universe() != n)
    throw std::invalid_argument("seed universe does not match the graph order");
  ForcingState state{seed, {}};
  for (;;) {
    int forcer = -1;
    int forced = -1;
    for (int u = 0; u < n && forcer < 0; ++u) {
      if (!state.blue.test(u)) continue;
      int white_neighbor = -1;
      int white_count = 0;
      for (int w : g.neighbors(u)) {
        if (state.blue.test(w)) continue;
        ++white_count;
        white_neighbor = w;
        if (white_count > 1) break;
      }
      if (white_count == 1) {
        forcer = u;
        forced = white_neighbor;
      }
    }
    if (forcer < 0) return state;
    state.blue.set(forced);
    state.history.emplace_back(forcer, forced);
  }
}

int zero_forcing_direct(const Graph& g, int max_n) {
  require_nonempty(g);
  const int n = g.order();
  if (n > max_n)
    throw std::invalid_argument("direct zero-forcing search is guarded to n <= " +
                                std::to_string(max_n) + ", got " + std::to_string(n));

  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
  const std::uint64_t full = g.full_mask64();

  const auto closes = [&](std::uint64_t blue) {
    for (;;) {
      if (blue == full) return true;
      bool forced_any = false;
      std::uint64_t scan = blue;
      while (scan) {
        const int u = std::countr_zero(scan);
        scan &= scan - 1;
        const std::uint64_t white = rows[u] & ~blue;
        if (white != 0 && (white & (white - 1)) == 0) {
          blue |= white;
          forced_any = true;
        }
      }
      if (!forced_any) return blue == full;
    }
  };

  int min_degree = INT_MAX;
  for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));

  // A forcing vertex needs all neighbors but one already blue, so no seed
  // smaller than the minimum degree can start a force.
  for (int s = std::max(min_degree, 0); s <= n; ++s) {
    if (s == 0) {
      if (closes(0)) return 0;
      continue;
    }
    // Gosper's hack: all n-bit masks of popcount s in increasing value.
    std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    while (mask <= full) {
      if (closes(mask)) return s;
      const std::uint64_t c = mask & -mask;
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return n;  // unreachable: the full set always closes
}

SolveResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& opts) {
  require_nonempty(g);
  const int n = g.order();
  const auto start = clock_type::now();

  std::vector<int> isolated;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) isolated.push_back(v);

  // Isolated vertices can never be forced, so each belongs to every seed;
  // solve the rest of the graph separately and splice the seeds together.
  if (!isolated.empty()) {
    SolveResult result;
    std::vector<int> seed = isolated;
    if (static_cast<int>(isolated.size()) == n) {
      result.value = n;
      result.stats.method = "isolated-only";
    } else {
      std::vector<int> keep;
      std::vector<int> old_of;
      std::vector<int> new_of(n, -1);
      for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) {
          new_of[v] = static_cast<int>(old_of.size());
          old_of.push_back(v);
        }
      EdgeList edges;
      for (auto [u, v] : g.edges()) edges.emplace_back(new_of[u], new_of[v]);
      const Graph rest(static_cast<int>(old_of.size()), edges);
      SolveResult inner = zero_forcing_number(rest, opts);
      result.value = inner.value + static_cast<int>(isolated.size());
      for (int v : *inner.forcing_seed) seed.push_back(old_of[v]);
      result.stats = inner.stats;
      result.stats.method += "+isolated";
    }
    std::sort(seed.begin(), seed.end());
    result.forcing_seed = std::move(seed);
    result.stats.seconds = elapsed_seconds(start);
    return result;
  }

  SolveResult dual = grundy_number(g, Variant::z, opts.solve);
  SolveResult result;
  result.value = n - dual.value;
  result.stats = dual.stats;

  std::uint64_t in_sequence = 0;
  for (int v : dual.sequence->order) in_sequence |= std::uint64_t{1} << v;
  std::vector<int> seed;
  for (int v = 0; v < n; ++v)
    if (!((in_sequence >> v) & 1u)) seed.push_back(v);

  const ForcingState closure = forcing_closure(g, VertexSet::of(n, seed));
  if (!closure.all_blue())
    throw std::logic_error("complement of the maximum Z-sequence failed to force the graph");

  if (n <= opts.direct_search_max_n) {
    const int direct = zero_forcing_direct(g, opts.direct_search_max_n);
    if (direct != result.value)
      throw std::logic_error("zero forcing cross-check failed: dual path gives " +
                             std::to_string(result.value) + ", direct search gives " +
                             std::to_string(direct));
    result.stats.method += "|duality+direct";
  } else {
    result.stats.method += "|duality-only(direct search skipped: n > " +
                           std::to_string(opts.direct_search_max_n) + ")";
  }

  result.forcing_seed = std::move(seed);
  result.stats.seconds = elapsed_seconds(start);
  return result;
}

}  // namespace grundy
