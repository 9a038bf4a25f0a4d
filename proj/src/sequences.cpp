#include "grundy/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace grundy {

const char* variant_name(Variant v) {
  return v == Variant::closed ? "grundy" : "zgrundy";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "grundy") return Variant::closed;
  if (name == "zgrundy") return Variant::z;
  return std::nullopt;
}

namespace {

void check_order(const Graph& g, const std::vector<int>& order) {
  std::vector<char> seen(g.order(), 0);
  for (int v : order) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("sequence: vertex out of range");
    if (seen[v]) throw std::invalid_argument("sequence: duplicate vertex");
    seen[v] = 1;
  }
}

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("Z-sequence: graph has an isolated vertex");
}

}  // namespace

VertexSequence footprints(const Graph& g, const std::vector<int>& order) {
  check_order(g, order);
  VertexSequence seq;
  seq.graph = g;
  seq.order = order;
  seq.footprints.reserve(order.size());
  VertexSet dominated(g.order());
  for (int v : order) {
    std::vector<int> step;
    for (int w = 0; w < g.order(); ++w) {
      if ((w == v || g.adjacent(v, w)) && !dominated.test(w)) step.push_back(w);
    }
    for (int w : step) dominated.set(w);
    seq.footprints.push_back(std::move(step));
  }
  return seq;
}

bool footprints_consistent(const VertexSequence& seq) {
  VertexSequence fresh = footprints(seq.graph, seq.order);
  return fresh.footprints == seq.footprints;
}

bool is_closed_neighborhood_sequence(const Graph& g, const std::vector<int>& order) {
  VertexSequence seq = footprints(g, order);
  for (const auto& f : seq.footprints)
    if (f.empty()) return false;
  return true;
}

bool is_z_sequence(const Graph& g, const std::vector<int>& order) {
  require_no_isolated(g);
  VertexSequence seq = footprints(g, order);
  for (std::size_t i = 0; i < seq.footprints.size(); ++i) {
    const auto& f = seq.footprints[i];
    bool has_other = false;
    for (int w : f)
      if (w != seq.order[i]) { has_other = true; break; }
    if (!has_other) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const std::vector<int>& order) {
  VertexSequence seq = footprints(g, order);
  int covered = 0;
  for (const auto& f : seq.footprints) covered += static_cast<int>(f.size());
  return covered == g.order();
}

int single_footprint_count(const VertexSequence& seq) {
  int count = 0;
  for (const auto& f : seq.footprints)
    if (f.size() == 1) ++count;
  return count;
}

std::string witness_to_json(const Graph& g, const std::vector<int>& order, Variant variant) {
  nlohmann::json j;
  j["graph"] = graph6_encode(g);
  j["order"] = order;
  j["variant"] = variant_name(variant);
  return j.dump();
}

WitnessData witness_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("witness: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("graph") || !j.contains("order") || !j.contains("variant"))
    throw std::invalid_argument("witness: missing graph/order/variant field");
  WitnessData w{graph6_decode(j["graph"].get<std::string>()),
                j["order"].get<std::vector<int>>(), Variant::closed};
  auto variant = variant_from_name(j["variant"].get<std::string>());
  if (!variant) throw std::invalid_argument("witness: unknown variant name");
  w.variant = *variant;
  check_order(w.graph, w.order);
  return w;
}

}  // namespace grundy
