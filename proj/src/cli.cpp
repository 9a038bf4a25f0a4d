#include "grundy/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grundy/families.hpp"
#include "grundy/graph.hpp"
#include "grundy/heuristics.hpp"
#include "grundy/sequences.hpp"
#include "grundy/solvers.hpp"
#include "grundy/verify.hpp"
#include "json.hpp"

namespace grundy {

namespace {

using nlohmann::json;

// Sink that writes to --output FILE when given, standard output otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<Graph> read_input_graphs(const std::string& graph6_arg,
                                     const std::string& input_path) {
  if (!graph6_arg.empty()) return {graph6_decode(graph6_arg)};
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open " + input_path);
    return read_graph6_lines(in);
  }
  return read_graph6_lines(std::cin);
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

struct ComputeRecord {
  std::string graph6;
  int n = 0;
  std::optional<int> gamma_gr;
  std::optional<int> gamma_gr_z;
  std::optional<int> zero_forcing;
  std::optional<std::vector<int>> witness_gamma_gr;
  std::optional<std::vector<int>> witness_gamma_gr_z;
  std::optional<std::vector<int>> witness_zero_forcing;
};

int run_compute(const std::string& graph6_arg, const std::string& input_path,
                const std::string& variant, bool witness, const std::string& format,
                const std::string& output_path) {
  const bool want_gr = variant == "all" || variant == "grundy";
  const bool want_gz = variant == "all" || variant == "zgrundy";
  const bool want_zf = variant == "all" || variant == "forcing";

  const auto graphs = read_input_graphs(graph6_arg, input_path);
  if (graphs.empty()) throw std::invalid_argument("no input graphs");

  std::vector<ComputeRecord> records;
  records.reserve(graphs.size());
  for (const auto& g : graphs) {
    ComputeRecord rec;
    rec.graph6 = graph6_encode(g);
    rec.n = g.order();
    if (want_gr) {
      const auto r = grundy_number(g, Variant::closed);
      rec.gamma_gr = r.value;
      if (witness && r.sequence) rec.witness_gamma_gr = r.sequence->order;
    }
    if (want_gz) {
      const auto r = grundy_number(g, Variant::z);
      rec.gamma_gr_z = r.value;
      if (witness && r.sequence) rec.witness_gamma_gr_z = r.sequence->order;
    }
    if (want_zf) {
      const auto r = zero_forcing_number(g);
      rec.zero_forcing = r.value;
      if (witness && r.forcing_seed) rec.witness_zero_forcing = *r.forcing_seed;
    }
    records.push_back(std::move(rec));
  }

  OutputSink sink(output_path);
  std::ostream& out = sink.stream();
  if (format == "text") {
    const bool prefix = records.size() > 1;
    for (const auto& rec : records) {
      std::string line;
      if (prefix) line += rec.graph6 + " ";
      if (rec.gamma_gr) line += "gamma_gr=" + std::to_string(*rec.gamma_gr) + " ";
      if (rec.gamma_gr_z) line += "gamma_gr_z=" + std::to_string(*rec.gamma_gr_z) + " ";
      if (rec.zero_forcing) line += "zero_forcing=" + std::to_string(*rec.zero_forcing) + " ";
      if (rec.witness_gamma_gr) line += "witness_gamma_gr=" + join_ints(*rec.witness_gamma_gr) + " ";
      if (rec.witness_gamma_gr_z)
        line += "witness_gamma_gr_z=" + join_ints(*rec.witness_gamma_gr_z) + " ";
      if (rec.witness_zero_forcing)
        line += "witness_zero_forcing=" + join_ints(*rec.witness_zero_forcing) + " ";
      if (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  } else if (format == "csv") {
    out << "graph6,n,gamma_gr,gamma_gr_z,zero_forcing";
    if (witness) out << ",witness_gamma_gr,witness_gamma_gr_z,witness_zero_forcing";
    out << '\n';
    const auto cell = [](const std::optional<int>& v) {
      return v ? std::to_string(*v) : std::string();
    };
    for (const auto& rec : records) {
      out << rec.graph6 << ',' << rec.n << ',' << cell(rec.gamma_gr) << ','
          << cell(rec.gamma_gr_z) << ',' << cell(rec.zero_forcing);
      if (witness) {
        const auto wcell = [](const std::optional<std::vector<int>>& w) {
          return w ? "\"" + join_ints(*w) + "\"" : std::string();
        };
        out << ',' << wcell(rec.witness_gamma_gr) << ',' << wcell(rec.witness_gamma_gr_z)
            << ',' << wcell(rec.witness_zero_forcing);
      }
      out << '\n';
    }
  } else {  // json
    json rows = json::array();
    for (const auto& rec : records) {
      json row;
      row["graph6"] = rec.graph6;
      row["n"] = rec.n;
      row["gamma_gr"] = rec.gamma_gr ? json(*rec.gamma_gr) : json(nullptr);
      row["gamma_gr_z"] = rec.gamma_gr_z ? json(*rec.gamma_gr_z) : json(nullptr);
      row["zero_forcing"] = rec.zero_forcing ? json(*rec.zero_forcing) : json(nullptr);
      if (rec.witness_gamma_gr) row["witness_gamma_gr"] = *rec.witness_gamma_gr;
      if (rec.witness_gamma_gr_z) row["witness_gamma_gr_z"] = *rec.witness_gamma_gr_z;
      if (rec.witness_zero_forcing) row["witness_zero_forcing"] = *rec.witness_zero_forcing;
      rows.push_back(std::move(row));
    }
    out << (rows.size() == 1 ? rows[0].dump(2) : rows.dump(2)) << '\n';
  }
  return 0;
}

EdgeList parse_skeleton(const std::string& text, int* order_out) {
  EdgeList edges;
  int max_vertex = -1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("skeleton edge '" + item + "' is not of the form U-V");
    const int u = std::stoi(item.substr(0, dash));
    const int v = std::stoi(item.substr(dash + 1));
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty()) throw std::invalid_argument("skeleton has no edges");
  *order_out = max_vertex + 1;
  return edges;
}

std::vector<UnitKind> parse_units(const std::string& text) {
  std::vector<UnitKind> kinds;
  for (char c : text) {
    if (c == 'X' || c == 'x') kinds.push_back(UnitKind::X);
    else if (c == 'Y' || c == 'y') kinds.push_back(UnitKind::Y);
    else throw std::invalid_argument("unit letters must be X or Y");
  }
  if (kinds.empty()) throw std::invalid_argument("no unit letters given");
  return kinds;
}

int run_generate(const std::string& what, int n, int k, int a, int b,
                 std::optional<std::uint64_t> seed, const std::string& skeleton,
                 const std::string& units, const std::string& output_path) {
  OutputSink sink(output_path);
  std::ostream& out = sink.stream();
  if (what == "catalog") {
    for (const auto& entry : catalog())
      out << "# " << entry.name << '\n' << graph6_encode(entry.graph) << '\n';
    return 0;
  }
  Graph g;
  if (what == "cycle") {
    if (n <= 0) throw std::invalid_argument("cycle needs --n");
    g = make_cycle(n);
  } else if (what == "complete") {
    if (n <= 0) throw std::invalid_argument("complete needs --n");
    g = make_complete(n);
  } else if (what == "bipartite") {
    if (a <= 0 || b <= 0) throw std::invalid_argument("bipartite needs --a and --b");
    g = make_complete_bipartite(a, b);
  } else if (what == "random") {
    if (n <= 0 || k <= 0) throw std::invalid_argument("random needs --n and --k");
    if (!seed) throw std::invalid_argument("random needs an explicit --seed");
    g = random_k_regular(n, k, *seed);
  } else if (what == "family") {
    if (skeleton.empty() || units.empty())
      throw std::invalid_argument("family needs --skeleton and --units");
    int skeleton_order = 0;
    const auto edges = parse_skeleton(skeleton, &skeleton_order);
    g = make_family_M(skeleton_order, edges, parse_units(units));
  } else {
    const auto entry = catalog_entry(what);
    if (!entry) throw std::invalid_argument("unknown generator or catalog name: " + what);
    g = entry->graph;
  }
  out << graph6_encode(g) << '\n';
  return 0;
}

int run_enumerate(int n, bool dedup, const std::string& output_path) {
  OutputSink sink(output_path);
  std::ostream& out = sink.stream();
  for (const auto& g : enumerate_cubic(n, dedup)) out << graph6_encode(g) << '\n';
  return 0;
}

int run_recognize(const std::string& graph6_arg, const std::string& input_path,
                  const std::string& format, const std::string& output_path) {
  const auto graphs = read_input_graphs(graph6_arg, input_path);
  if (graphs.empty()) throw std::invalid_argument("no input graphs");
  OutputSink sink(output_path);
  std::ostream& out = sink.stream();
  json rows = json::array();
  for (const auto& g : graphs) {
    const auto dec = recognize_family_M(g);
    if (format == "json") {
      json row;
      row["graph6"] = graph6_encode(g);
      row["member"] = dec.has_value();
      if (dec) {
        row["m_prime"] = dec->in_m_prime;
        row["units"] = json::array();
        for (const auto& node : dec->nodes) {
          if (!node.is_unit) continue;
          row["units"].push_back({{"kind", std::string(1, unit_kind_letter(node.kind))},
                                  {"alpha", node.alpha},
                                  {"vertices", node.vertices}});
        }
        row["internal_vertices"] = dec->internal_count();
        json skel = json::array();
        for (const auto& [u, v] : dec->skeleton_edges) skel.push_back({u, v});
        row["skeleton_edges"] = std::move(skel);
      }
      rows.push_back(std::move(row));
    } else {
      if (!dec) {
        out << "not a member\n";
        continue;
      }
      std::string kinds;
      for (const auto& node : dec->nodes)
        if (node.is_unit) kinds += unit_kind_letter(node.kind);
      std::string skel;
      for (std::size_t i = 0; i < dec->skeleton_edges.size(); ++i) {
        if (i) skel += ',';
        skel += std::to_string(dec->skeleton_edges[i].first) + "-" +
                std::to_string(dec->skeleton_edges[i].second);
      }
      out << "member units=" << kinds << " internal=" << dec->internal_count()
          << " skeleton=" << skel << " m_prime=" << (dec->in_m_prime ? "true" : "false")
          << '\n';
    }
  }
  if (format == "json")
    out << (rows.size() == 1 ? rows[0].dump(2) : rows.dump(2)) << '\n';
  return 0;
}

int run_verify(const std::string& selector, int enumerate_n, const std::string& input_path,
               int workers, int scan_k, const std::string& format,
               const std::string& output_path) {
  std::vector<Graph> stream;
  if (enumerate_n > 0) {
    stream = enumerate_cubic(enumerate_n);
  } else if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open " + input_path);
    stream = read_graph6_lines(in);
  } else {
    stream = read_graph6_lines(std::cin);
  }

  OutputSink sink(output_path);
  std::ostream& out = sink.stream();

  if (selector == "scan") {
    if (scan_k < 4)
      throw std::invalid_argument("the extremal scan needs --k with a degree of at least 4");
    for (const auto& g : extremal_scan(stream, scan_k, workers))
      out << graph6_encode(g) << '\n';
    return 0;
  }

  VerificationReport report;
  if (selector == "duality") {
    report = check_duality(stream, workers);
  } else if (const auto bound = bound_check_from_name(selector)) {
    report = check_bounds(stream, *bound, workers);
  } else if (const auto ch = characterization_from_name(selector)) {
    report = check_characterization(stream, *ch, workers);
  } else {
    throw std::invalid_argument(
        "unknown check '" + selector +
        "' (expected thm21, thm31, cor32, thm34, duality, thm44, cor45, cor46, "
        "prop42, or scan)");
  }

  if (format == "csv") {
    out << report.to_csv();
  } else if (format == "json") {
    out << report.to_json() << '\n';
  } else {
    out << report.summary() << '\n';
    for (const auto& row : report.rows) {
      if (row.extremal)
        out << "extremal: " << row.graph6
            << (row.catalog_match.empty() ? "" : " (" + row.catalog_match + ")") << '\n';
    }
    for (const auto& row : report.rows)
      if (row.status == "fail") out << "FAIL " << row.graph6 << ": " << row.note << '\n';
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Grundy domination, Z-Grundy domination, and zero forcing toolkit"};
  app.require_subcommand(1);

  // compute
  std::string c_graph6, c_input, c_variant = "all", c_format = "text", c_output;
  bool c_all = false, c_witness = false;
  auto* compute = app.add_subcommand("compute", "Invariants (and witnesses) for input graphs");
  compute->add_option("--graph6", c_graph6, "inline graph6 string");
  compute->add_option("--input", c_input, "graph6 file, one graph per line")
      ->excludes("--graph6");
  compute->add_option("--variant", c_variant, "grundy|zgrundy|forcing|all")
      ->check(CLI::IsMember({"grundy", "zgrundy", "forcing", "all"}));
  compute->add_flag("--all", c_all, "compute all three invariants");
  compute->add_flag("--witness", c_witness, "emit optimal sequence / forcing set");
  compute->add_option("--format", c_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  compute->add_option("--output", c_output, "write to file instead of standard output");

  // generate
  std::string g_what, g_skeleton, g_units, g_output;
  int g_n = 0, g_k = 0, g_a = 0, g_b = 0;
  std::optional<std::uint64_t> g_seed;
  auto* generate = app.add_subcommand("generate", "Emit named or constructed graphs as graph6");
  generate
      ->add_option("what", g_what,
                   "catalog name, or: catalog, cycle, complete, bipartite, random, family")
      ->required();
  generate->add_option("--n", g_n, "order (cycle, complete, random)");
  generate->add_option("--k", g_k, "degree (random)");
  generate->add_option("--a", g_a, "first part size (bipartite)");
  generate->add_option("--b", g_b, "second part size (bipartite)");
  generate->add_option("--seed", g_seed, "random seed (required for random)");
  generate->add_option("--skeleton", g_skeleton, "tree edges like 0-1,0-2 (family)");
  generate->add_option("--units", g_units, "unit letters per leaf in ascending order (family)");
  generate->add_option("--output", g_output, "write to file instead of standard output");

  // enumerate
  int e_n = 0;
  bool e_no_dedup = false;
  std::string e_output;
  auto* enumerate = app.add_subcommand("enumerate", "Connected cubic graphs of a given order");
  enumerate->add_option("--n", e_n, "order (even, 4..10)")->required();
  enumerate->add_flag("--no-dedup", e_no_dedup, "emit all labeled graphs, not classes");
  enumerate->add_option("--output", e_output, "write to file instead of standard output");

  // recognize
  std::string r_graph6, r_input, r_format = "text", r_output;
  auto* recognize = app.add_subcommand("recognize", "Family decomposition of cubic graphs");
  recognize->add_option("--graph6", r_graph6, "inline graph6 string");
  recognize->add_option("--input", r_input, "graph6 file")->excludes("--graph6");
  recognize->add_option("--format", r_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  recognize->add_option("--output", r_output, "write to file instead of standard output");

  // verify
  std::string v_selector, v_input, v_format = "text", v_output;
  int v_enumerate = 0, v_workers = 1, v_k = 0;
  auto* verify = app.add_subcommand("verify", "Bound, duality, and characterization checks");
  verify
      ->add_option("check", v_selector,
                   "thm21|thm31|cor32|thm34|duality|thm44|cor45|cor46|prop42|scan")
      ->required();
  verify->add_option("--enumerate", v_enumerate, "use built-in cubic classes of this order");
  verify->add_option("--input", v_input, "graph6 stream file")->excludes("--enumerate");
  verify->add_option("--workers", v_workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--k", v_k, "degree for the extremal scan");
  verify->add_option("--format", v_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--output", v_output, "write to file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      if (c_all) c_variant = "all";
      return run_compute(c_graph6, c_input, c_variant, c_witness, c_format, c_output);
    }
    if (*generate)
      return run_generate(g_what, g_n, g_k, g_a, g_b, g_seed, g_skeleton, g_units, g_output);
    if (*enumerate) return run_enumerate(e_n, !e_no_dedup, e_output);
    if (*recognize) return run_recognize(r_graph6, r_input, r_format, r_output);
    if (*verify)
      return run_verify(v_selector, v_enumerate, v_input, v_workers, v_k, v_format, v_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace grundy
