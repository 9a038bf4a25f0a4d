// Exact solvers: the maximum closed-neighborhood-sequence length (Grundy
// domination number), its Z-variant, the zero forcing number, the forcing
// closure engine, and an independent brute-force oracle.
//
// The sequence solvers run a depth-first search over dominated-vertex sets:
// the optimal continuation depends only on the dominated set D, so states are
// memoized by D alone (playable v has N[v] (closed) or N(v) (Z variant) not
// contained in D; playing v replaces D by D u N[v]). Orders up to 24 use a
// flat table; larger orders use a bounded hash memo and degrade to
// branch-and-bound with a greedy incumbent once the budget is exhausted.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/sequences.hpp"

namespace grundy {

struct SolveStats {
  std::uint64_t explored = 0;      // solver states expanded
  std::uint64_t memo_entries = 0;  // memoized states at the end
  double seconds = 0.0;
  std::string method;
};

struct SolveOptions {
  int flat_memo_max_n = 24;  // flat 2^n table for orders up to this
  std::size_t hash_memo_budget = std::size_t{1} << 22;  // hash entries cap
};

struct SolveResult {
  int value = 0;
  std::optional<VertexSequence> sequence;        // sequence-variant witness
  std::optional<std::vector<int>> forcing_seed;  // zero-forcing witness
  SolveStats stats;
};

// Exact maximum sequence length of the chosen variant, with a witness that
// re-validates through the sequences module. Throws std::invalid_argument on
// an empty graph, on orders above 64, and on the Z variant with an isolated
// vertex present.
SolveResult grundy_number(const Graph& g, Variant variant, const SolveOptions& opts = {});

// Exhaustive enumeration of every valid sequence, no memoization and no
// pruning beyond validity; the independent oracle. Guarded to n <= 10.
int brute_force_grundy(const Graph& g, Variant variant);

struct ForcingState {
  VertexSet blue;
  std::vector<std::pair<int, int>> history;  // (forcer, forced) in order
  bool all_blue() const { return blue.count() == blue.universe(); }
};

// Fixed point of the color-change rule (a blue vertex with exactly one
// non-blue neighbor colors it blue) from the given seed. Deterministic:
// each step applies the lowest-index eligible forcer.
ForcingState forcing_closure(const Graph& g, const VertexSet& seed);

struct ZeroForcingOptions {
  int direct_search_max_n = 24;  // above this only the dual path runs
  SolveOptions solve;
};

// Exact zero forcing number, computed as n minus the maximum Z-sequence
// length with the witness V \ S for a maximum Z-sequence S, cross-checked
// against a direct seed search in increasing cardinality whenever the order
// permits (the skip is recorded in stats.method otherwise). A disagreement
// between the two computations is a solver bug and throws std::logic_error.
SolveResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& opts = {});

// The direct search alone: smallest seed size whose closure is all-blue,
// enumerating seeds by increasing cardinality. Guarded to n <= max_n.
int zero_forcing_direct(const Graph& g, int max_n = 24);

}  // namespace grundy
