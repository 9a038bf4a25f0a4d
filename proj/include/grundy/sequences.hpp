// Closed neighborhood sequences and Z-sequences over a graph: per-step
// footprint computation, validity and domination predicates, single-footprint
// counting, and the JSON witness interchange used by the command line tool.
//
// For an ordered vertex list (v_1, ..., v_t) the i-th footprint is
//   F_i = N[v_i] \ (N[v_1] u ... u N[v_{i-1}]),
// the vertices newly dominated at step i. The sequence is a closed
// neighborhood sequence when every F_i is nonempty, and a Z-sequence when
// every F_i contains a vertex other than v_i itself.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Sequence flavors: `closed` maximizes to the Grundy domination number,
// `z` to its Z-variant (the zero forcing dual).
enum class Variant { closed, z };

const char* variant_name(Variant v);  // "grundy" / "zgrundy"
std::optional<Variant> variant_from_name(std::string_view name);

struct VertexSequence {
  Graph graph;
  std::vector<int> order;                     // distinct vertices, play order
  std::vector<std::vector<int>> footprints;   // F_i, each ascending

  int length() const { return static_cast<int>(order.size()); }
};

// Computes every footprint without judging validity (empty F_i permitted).
// Throws std::invalid_argument on duplicate or out-of-range vertices.
VertexSequence footprints(const Graph& g, const std::vector<int>& order);

// Recomputes the stored footprints and compares; detects corrupted witnesses.
bool footprints_consistent(const VertexSequence& seq);

bool is_closed_neighborhood_sequence(const Graph& g, const std::vector<int>& order);
// Z-validity is enforced at every index, the first included. Throws
// std::invalid_argument when g has an isolated vertex.
bool is_z_sequence(const Graph& g, const std::vector<int>& order);
bool is_dominating(const Graph& g, const std::vector<int>& order);

// Number of steps that footprint exactly one vertex.
int single_footprint_count(const VertexSequence& seq);

// Witness certificate: {"graph": graph6, "order": [ints], "variant": ...}.
std::string witness_to_json(const Graph& g, const std::vector<int>& order, Variant variant);
struct WitnessData {
  Graph graph;
  std::vector<int> order;
  Variant variant;
};
WitnessData witness_from_json(const std::string& text);

}  // namespace grundy
