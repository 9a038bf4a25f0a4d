// Constructive machinery: exact rational bound evaluators for regular graphs,
// the start-pair selector for graphs with a triangle, the min-footprint
// greedy sequence builder, and the shortest-odd-cycle start used on
// triangle-free non-bipartite graphs.
#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/sequences.hpp"

namespace grundy {

using rational = boost::rational<long long>;

// Smallest integer >= r.
long long rational_ceiling(const rational& r);

// "5" for integers, "5/2" otherwise.
std::string rational_to_string(const rational& r);

// Lower bound on the Grundy domination number of a connected k-regular graph
// (k >= 3, excluding the complete graph K_{k+1} and the complement of two
// disjoint 4-cycles): (n + ceil(k/2) - 2) / (k - 1).
rational grundy_regular_lower_bound(int n, int k);

// Lower bound on the Z-Grundy domination number of a connected k-regular
// graph other than K_{k+1} (k >= 3): (n-1)/(k-1) when a triangle is present,
// (n-2)/(k-1) when triangle-free.
rational zgrundy_regular_lower_bound(int n, int k, bool has_triangle);

// Matching upper bound on the zero forcing number of the same graphs:
// (n(k-2)+1)/(k-1) with a triangle, (n(k-2)+2)/(k-1) without.
rational zero_forcing_regular_upper_bound(int n, int k, bool has_triangle);

// The start pair of the constructive lower-bound argument on graphs with a
// triangle: among adjacent non-twin pairs, one maximizing the number of
// common neighbors (ties broken lexicographically). Returns nullopt when no
// adjacent non-twin pair has a common neighbor, i.e. the construction does
// not apply. Throws std::invalid_argument on disconnected, triangle-free, or
// complete input.
std::optional<std::pair<int, int>> theorem21_start_pair(const Graph& g);

// Greedy sequence builder mirroring the constructive proofs: starting from
// the given prefix, repeatedly play a vertex with a minimum-size nonempty
// footprint (Z variant: nonempty even ignoring the vertex itself), preferring
// already-dominated vertices on ties, then the lowest index. Returns a
// dominating sequence of the requested variant. Throws std::invalid_argument
// when g is disconnected, when the start is not a valid sequence prefix of
// the variant, or on the Z variant with an isolated vertex present.
VertexSequence greedy_min_footprint(const Graph& g, Variant variant,
                                    const std::vector<int>& start = {});

// Start prefix for triangle-free non-bipartite graphs: take a shortest odd
// cycle C; if some vertex outside C has two or more neighbors on C, return
// the shortest arc of C between two such neighbors (over all choices),
// otherwise return all of C in cyclic order. A shortest odd cycle is always
// induced, so the returned path or cycle is a valid sequence prefix of both
// variants. Throws std::invalid_argument on disconnected, bipartite, or
// triangle-containing input.
std::vector<int> odd_cycle_start(const Graph& g);

}  // namespace grundy
