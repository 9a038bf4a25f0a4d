// Theorem-verification harness: cubic-graph enumeration, graph6 file
// ingestion, bound and characterization checks over graph streams, and
// CSV/JSON report emission.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Which lower/upper bound to check on a stream of regular graphs:
//  - thm21: gamma_gr >= (n + ceil(k/2) - 2)/(k-1), k >= 3, excluding
//    K_{k+1} and the complement of two disjoint 4-cycles;
//  - thm31: gamma_gr_z >= (n-1)/(k-1) (triangle) or (n-2)/(k-1)
//    (triangle-free), excluding K_{k+1};
//  - cor32: Z <= (n(k-2)+1)/(k-1) or (n(k-2)+2)/(k-1), same exclusion;
//  - thm34: gamma_gr_z >= n/2 on cubic graphs, excluding K_4 and K_{3,3}.
enum class BoundCheck { thm21, thm31, cor32, thm34 };

// Which extremal characterization to check on a stream of cubic graphs:
//  - thm44: gamma_gr_z = n/2 exactly for the fifteen catalog graphs;
//  - cor45: Z = n/2 for the same fifteen;
//  - cor46: gamma_gr = n/2 exactly for the eight-graph catalog;
//  - prop42: within the X/Y-unit family, gamma_gr_z = n/2 exactly for the
//    seven smallest members.
enum class CharacterizationCheck { thm44, cor45, cor46, prop42 };

std::optional<BoundCheck> bound_check_from_name(const std::string& name);
std::optional<CharacterizationCheck> characterization_from_name(const std::string& name);
std::string check_name(BoundCheck which);
std::string check_name(CharacterizationCheck which);

struct ReportRow {
  std::string graph6;
  int n = 0;
  int k = -1;  // regular degree, -1 when irregular
  bool connected = false;
  bool triangle = false;
  std::optional<int> gamma_gr;
  std::optional<int> gamma_gr_z;
  std::optional<int> zero_forcing;
  std::string bound;  // exact rational as text, empty when not applicable
  std::string slack;  // value minus bound (lower bounds) or bound minus value
  bool extremal = false;
  std::string catalog_match;  // catalog name matched by isomorphism, if any
  std::string status;         // ok | fail | excluded | skipped
  std::string note;
};

struct VerificationReport {
  std::string check;
  std::vector<ReportRow> rows;
  int count(const std::string& status) const;
  int failures() const { return count("fail"); }
  bool passed() const { return failures() == 0; }
  std::string summary() const;
  std::string to_csv() const;
  std::string to_json() const;
};

// Every connected cubic graph of order n (4 <= n <= 10, n even), one
// labeled representative per isomorphism class when dedup is on, every
// generated labeled graph otherwise. Throws std::invalid_argument outside
// the built-in range; larger orders load from graph6 files instead.
std::vector<Graph> enumerate_cubic(int n, bool dedup = true);

// graph6 lines from a stream; blank lines and '#' comments are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

// Load a graph6 file and require every line to be a connected cubic graph
// of the expected order (std::runtime_error otherwise, naming the line).
std::vector<Graph> load_cubic_graph6_file(const std::string& path, int expected_order);

// Per-graph bound comparison with exact rational arithmetic. Non-regular,
// disconnected, or sub-cubic graphs are skipped with a reason; exception
// graphs are detected by isomorphism and excluded. Negative slack on any
// non-excluded graph is a failure.
VerificationReport check_bounds(const std::vector<Graph>& stream, BoundCheck which,
                                int workers = 1);

// Z(G) = n - gamma_gr_z(G), with the two sides computed independently (the
// sequence solver versus the direct seed search).
VerificationReport check_duality(const std::vector<Graph>& stream, int workers = 1);

// Extremal predicate (invariant equals n/2) must hold exactly for the
// isomorphism-matched catalog members; both failure directions are reported.
VerificationReport check_characterization(const std::vector<Graph>& stream,
                                          CharacterizationCheck which, int workers = 1);

// Graphs from the stream attaining the k-regular lower bound on gamma_gr
// with rational equality (k >= 4; throws std::invalid_argument below that).
std::vector<Graph> extremal_scan(const std::vector<Graph>& stream, int k, int workers = 1);

}  // namespace grundy
