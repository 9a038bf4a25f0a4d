// Named graph constructors, the X/Y-unit family builder and recognizer, the
// golden-value catalog, and a seeded random regular-graph sampler.
//
// The family ("family M" below) consists of the cubic graphs assembled from a
// tree whose vertex degrees are all 1 or 3 by identifying each leaf with the
// degree-2 vertex (alpha) of a unit graph X (a K_{3,3} with one edge
// subdivided) or Y (a K_{2,3} with an edge added between two degree-2
// vertices). The seven smallest members — skeleton K_2 or K_{1,3} — form the
// extremal subfamily M' whose maximum Z-sequence length is exactly half the
// order.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

enum class UnitKind { X, Y };
char unit_kind_letter(UnitKind kind);

struct UnitGraph {
  Graph graph;
  int alpha;                      // the designated degree-2 attachment vertex
  std::vector<int> start_prefix;  // within-unit start of the long-sequence construction
};

// X: K_{3,3} with one edge subdivided; 7 vertices, alpha is the subdivision
// vertex. Y: K_{2,3} plus an edge joining two of the degree-2 vertices; 5
// vertices, alpha is the remaining degree-2 vertex.
UnitGraph make_X();
UnitGraph make_Y();

// Assemble a family member. The skeleton must be a tree on vertices
// 0..skeleton_order-1 with every degree 1 or 3; units[i] is the unit attached
// to the i-th leaf in ascending vertex order. Unit blocks come first in the
// result (in that same leaf order), internal skeleton vertices last.
Graph make_family_M(int skeleton_order, const EdgeList& skeleton_edges,
                    const std::vector<UnitKind>& units);

struct FamilyMNode {
  bool is_unit = false;
  UnitKind kind = UnitKind::X;  // meaningful only when is_unit
  std::vector<int> vertices;    // host-graph vertices of this skeleton node
  int alpha = -1;               // unit attachment vertex (units only)
};

struct FamilyMDecomposition {
  std::vector<FamilyMNode> nodes;  // index = contracted skeleton vertex
  EdgeList skeleton_edges;         // edges between node indices
  bool in_m_prime = false;
  int unit_count() const;
  int internal_count() const;
  std::vector<UnitKind> unit_kinds() const;  // ascending node order
};

// Decompose g into units and internal skeleton vertices, or nullopt when g is
// not a family member. Cut edges split g into components that must each be a
// single vertex (internal) or match the X/Y pattern attached at its alpha.
// Throws std::invalid_argument on non-cubic input.
std::optional<FamilyMDecomposition> recognize_family_M(const Graph& g);

// Start prefix of the witness construction for a long Z-sequence on a family
// member: the start prefixes of two units at maximum skeleton distance,
// followed by the internal vertices on the path between them. Requires that
// distance to be at least 3 (throws std::invalid_argument otherwise, which
// rejects exactly the members of M').
std::vector<int> family_m_witness_start(const Graph& g, const FamilyMDecomposition& dec);

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::optional<int> gamma_gr;
  std::optional<int> gamma_gr_z;
  std::optional<int> zero_forcing;
};

// Every named fixed graph with its frozen invariant values where known.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> catalog_entry(const std::string& name);

Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_diamond();           // K_4 minus an edge
Graph make_co2c4();             // complement of two disjoint 4-cycles
Graph make_petersen();

// Pairing-model sampler: k cells per vertex, random perfect matching of the
// cells, rejected until simple. Deterministic for a fixed seed; connectivity
// is not guaranteed. Throws std::invalid_argument on parity violation or
// n <= k, std::runtime_error when the rejection budget runs out.
Graph random_k_regular(int n, int k, std::uint64_t seed);

}  // namespace grundy
