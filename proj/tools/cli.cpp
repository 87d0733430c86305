#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "edgecut/corpus.hpp"
#include "edgecut/graph_io.hpp"
#include "edgecut/parallel.hpp"
#include "edgecut/report.hpp"

namespace edgecut::cli {

namespace {

struct CommonFlags {
  bool json = true;
  bool text = false;
  int exhaustive = 16;
  int automorphism = 12;
  bool no_automorphisms = false;
  bool part_preserving = false;

  ClassifyOptions options() const {
    ClassifyOptions o;
    o.limits.exhaustive = exhaustive;
    o.limits.automorphism = automorphism;
    o.automorphisms = !no_automorphisms;
    o.reading = part_preserving ? HalfTransitivityReading::PartPreserving : HalfTransitivityReading::Orbit;
    return o;
  }
  bool as_json() const { return !text; }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  auto* json = cmd->add_flag("--json", f.json, "JSON output (default)");
  cmd->add_flag("--text", f.text, "flattened key: value output")->excludes(json);
  cmd->add_option("--exhaustive-limit", f.exhaustive, "largest vertex count for subset enumeration")
      ->capture_default_str()
      ->check(CLI::Range(2, kMaxExhaustive));
  cmd->add_option("--automorphism-limit", f.automorphism, "largest vertex count for automorphism search")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  cmd->add_flag("--no-automorphisms", f.no_automorphisms, "skip symmetry analysis and theorem checks");
  cmd->add_flag("--part-preserving", f.part_preserving,
                "half-transitivity via the part-preserving subgroup instead of full orbits");
}

Json disconnected_report(const Multigraph& g) {
  Json j;
  j["error"] = "Disconnected";
  Json comps = Json::array();
  for (const auto& c : components(g)) comps.push_back(to_json(c));
  j["components"] = comps;
  return j;
}

int cmd_analyze(const std::string& path, const CommonFlags& f, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (!is_connected(g)) {
    out << render(disconnected_report(g), f.as_json());
    return kExitUsage;
  }
  out << render(to_json(classify(g, f.options())), f.as_json());
  return kExitOk;
}

int cmd_atoms(const std::string& path, const std::string& kind, const CommonFlags& f, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (!is_connected(g)) {
    out << render(disconnected_report(g), f.as_json());
    return kExitUsage;
  }
  out << render(atoms_document(g, parse_atom_kind(kind), f.options().limits), f.as_json());
  return kExitOk;
}

int cmd_check(const std::string& path, const CommonFlags& f, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (!is_connected(g)) {
    out << render(disconnected_report(g), f.as_json());
    return kExitUsage;
  }
  const Json doc = check_document(g, f.options());
  out << render(doc, f.as_json());
  return doc["consistent"].get<bool>() ? kExitOk : kExitInconsistent;
}

struct CorpusRow {
  std::string spec;
  std::string file;
  std::string line;
  bool consistent = true;
};

std::string verdict(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

int cmd_corpus(const std::string& manifest, const std::string& out_dir, const CommonFlags& f, std::ostream& out) {
  std::ifstream in(manifest);
  if (!in) throw ParseError(0, "cannot open " + manifest);
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  for (int line_no = 1; std::getline(in, raw); ++line_no) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(line_no, raw);
  }
  std::vector<GeneratorSpec> specs;
  for (const auto& [line_no, text] : lines) {
    try {
      specs.push_back(parse_generator_spec(text));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  std::filesystem::create_directories(out_dir);

  const auto options = f.options();
  std::vector<CorpusRow> rows(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    auto& row = rows[i];
    row.spec = format_generator_spec(specs[i]);
    std::ostringstream name;
    name << std::setw(3) << std::setfill('0') << i << '_' << to_string(specs[i].family) << ".mg";
    row.file = name.str();
    std::ostringstream line;
    line << i << '\t' << row.spec << '\t' << row.file;
    try {
      const auto g = generate(specs[i]);
      write_graph_file(std::filesystem::path(out_dir) / row.file, g);
      const auto r = classify(g, options);
      line << '\t' << r.n << '\t' << r.edges << '\t' << r.lambda_cut.value << '\t' << r.delta << '\t' << r.xi.value << '\t'
           << (r.lambda_prime ? std::to_string(r.lambda_prime->value) : "undefined") << '\t'
           << (r.maximally_edge_connected ? "yes" : "no") << '\t' << verdict(r.super_lambda) << '\t'
           << verdict(r.lambda_prime_optimal) << '\t' << (r.symmetry.computed ? (r.symmetry.half_transitive ? "yes" : "no") : "-");
      std::string checks;
      for (const auto& c : r.theorem_checks) {
        if (!checks.empty()) checks += ',';
        checks += std::string(to_string(c.theorem)) + ":" + (!c.applicable ? "na" : (c.consistent ? "ok" : "FAIL"));
      }
      line << '\t' << checks;
      row.consistent = r.all_checks_consistent();
    } catch (const Error& e) {
      line << "\terror\t" << e.what();
    }
    row.line = line.str();
  });

  std::ostringstream table;
  table << "index\tspec\tfile\tn\tedges\tlambda\tdelta\txi\tlambda_prime\tmax_edge_connected\tsuper_lambda\tlambda_prime_optimal"
           "\thalf_transitive\tchecks\n";
  bool all = true;
  for (const auto& row : rows) {
    table << row.line << '\n';
    all = all && row.consistent;
  }
  std::ofstream(std::filesystem::path(out_dir) / "summary.tsv") << table.str();
  out << table.str();
  return all ? kExitOk : kExitInconsistent;
}

int cmd_search_xi(std::size_t budget, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const auto found = search_xi_violation(budget, seed);
  if (!found) {
    out << "none\n";
    return kExitOk;
  }
  const auto& g = found->graph;
  std::ostringstream doc;
  doc << "# " << found->name << '\n'
      << "# lambda' = " << lambda_prime(g).value << ", xi = " << xi(g).value << ", prng = " << kPrngName << '\n'
      << serialize_graph(g);
  if (out_path.empty()) {
    out << doc.str();
  } else {
    std::ofstream(out_path) << doc.str();
    out << out_path << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-connectivity, restricted edge-connectivity and symmetry analysis of multigraphs", "edgecut"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;
  std::string kind = "lambda";
  std::string manifest;
  std::string out_dir;
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string spec_text;

  auto* analyze = app.add_subcommand("analyze", "report every invariant, verdict and theorem check");
  analyze->add_option("graph", path, "graph file")->required();
  add_common(analyze, flags);

  auto* atoms = app.add_subcommand("atoms", "list lambda-atoms, superatoms or lambda'-atoms");
  atoms->add_option("graph", path, "graph file")->required();
  atoms->add_option("--kind", kind, "lambda | superatom | lambda-prime")
      ->capture_default_str()
      ->check(CLI::IsMember({"lambda", "superatom", "lambda-prime"}));
  add_common(atoms, flags);

  auto* check = app.add_subcommand("check", "run the half-transitive characterisation checks (exit 2 on inconsistency)");
  check->add_option("graph", path, "graph file")->required();
  add_common(check, flags);

  auto* corpus = app.add_subcommand("corpus", "materialise a generator manifest and tabulate its results");
  corpus->add_option("manifest", manifest, "one generator spec per line")->required();
  corpus->add_option("out_dir", out_dir, "directory for graph files and summary.tsv")->required();
  add_common(corpus, flags);

  auto* search = app.add_subcommand("search-xi", "search for a multigraph with lambda' > xi");
  search->add_option("--budget", budget, "number of random instances to try")->capture_default_str();
  search->add_option("--seed", seed, "base seed")->capture_default_str();
  search->add_option("--out", out_path, "write the witness here instead of stdout");

  auto* gen = app.add_subcommand("generate", "print the graph file for one generator spec");
  gen->add_option("spec", spec_text, "e.g. \"multiplied_cycle 4 2 1\"")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, flags, out);
    if (*atoms) return cmd_atoms(path, kind, flags, out);
    if (*check) return cmd_check(path, flags, out);
    if (*corpus) return cmd_corpus(manifest, out_dir, flags, out);
    if (*search) return cmd_search_xi(budget, seed, out_path, out);
    if (*gen) {
      out << serialize_graph(generate(parse_generator_spec(spec_text)));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "edgecut: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edgecut::cli
