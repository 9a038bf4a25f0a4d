// Builds a census of connected cubic graph isomorphism classes of a given
// order by seeded pairing-model sampling with isomorphism dedup, and stops
// once the expected class count is reached. Practical for orders 12 and 14,
// where the published counts are 85 and 509 connected cubic classes; the
// sampler finds every class quickly because none of them is rare at this
// size. Output: sorted graph6 lines with a provenance header.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "grundy/families.hpp"
#include "grundy/graph.hpp"
#include "grundy/verify.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: gen_cubic_census N EXPECTED_CLASSES OUTPUT_FILE\n";
    return 2;
  }
  const int n = std::stoi(argv[1]);
  const int expected = std::stoi(argv[2]);
  const std::string path = argv[3];

  using grundy::Graph;
  std::vector<Graph> reps;
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 60'000'000;
  std::uint64_t seed = 1;

  while (static_cast<int>(reps.size()) < expected && attempts < max_attempts) {
    ++attempts;
    Graph g;
    try {
      g = grundy::random_k_regular(n, 3, seed++);
    } catch (const std::runtime_error&) {
      continue;  // rejection budget exhausted for this seed; try the next
    }
    if (!grundy::is_connected(g)) continue;
    auto& bucket = buckets[grundy::isomorphism_fingerprint(g)];
    bool known = false;
    for (std::size_t idx : bucket)
      if (grundy::isomorphic(g, reps[idx])) {
        known = true;
        break;
      }
    if (known) continue;
    bucket.push_back(reps.size());
    reps.push_back(std::move(g));
    if (reps.size() % 50 == 0)
      std::cerr << "classes: " << reps.size() << " after " << attempts << " samples\n";
  }

  if (static_cast<int>(reps.size()) != expected) {
    std::cerr << "found only " << reps.size() << " classes after " << attempts
              << " samples (expected " << expected << ")\n";
    return 1;
  }

  std::vector<std::string> lines;
  lines.reserve(reps.size());
  for (const auto& g : reps) lines.push_back(grundy::graph6_encode(g));
  std::sort(lines.begin(), lines.end());

  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << '\n';
    return 2;
  }
  out << "# Connected cubic graphs of order " << n << ", one graph6 line per\n"
      << "# isomorphism class (" << expected << " classes, matching the published\n"
      << "# census count sequence 1, 2, 5, 19, 85, 509 for orders 4..14).\n"
      << "# Generated by tools/gen_cubic_census: seeded pairing-model sampling\n"
      << "# with exact isomorphism dedup until the known class count was reached;\n"
      << "# every line is validated as connected and 3-regular on ingestion.\n";
  for (const auto& line : lines) out << line << '\n';
  std::cout << "wrote " << lines.size() << " classes to " << path << " after " << attempts
            << " samples\n";
  return 0;
}
