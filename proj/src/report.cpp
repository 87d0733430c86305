#include "edgecut/report.hpp"

#include <sstream>

namespace edgecut {

namespace {

Json pairs_json(const std::vector<WeightedPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(Json::array({p.u, p.v, p.mult}));
  return out;
}

Json limits_json(const ClassifyOptions& o) {
  Json j;
  j["exhaustive"] = o.limits.exhaustive;
  j["automorphism"] = o.limits.automorphism;
  j["automorphisms_enabled"] = o.automorphisms;
  j["half_transitivity_reading"] = o.reading == HalfTransitivityReading::Orbit ? "orbit" : "part_preserving";
  return j;
}

Json atom_set_json(const std::optional<AtomSet>& atoms) {
  Json out = Json::array();
  if (atoms) {
    for (const auto& f : atoms->atoms) out.push_back(to_json(f.side));
  }
  return out;
}

void flatten(const Json& value, const std::string& key, std::ostringstream& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) flatten(v, key.empty() ? k : key + "." + k, out);
    return;
  }
  if (value.is_array() && std::any_of(value.begin(), value.end(), [](const Json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], key + "[" + std::to_string(i) + "]", out);
    if (value.empty()) out << key << ": []\n";
    return;
  }
  out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const CutCertificate& c) {
  Json j;
  j["value"] = c.value;
  j["side"] = to_json(c.side);
  j["crossing"] = pairs_json(c.crossing);
  return j;
}

Json to_json(const Fragment& f) {
  Json j;
  j["kind"] = std::string(to_string(f.kind));
  j["side"] = to_json(f.side);
  j["cut_value"] = f.cut_value;
  return j;
}

Json to_json(const TheoremWitness& w) {
  Json j;
  j["subgraph_vertices"] = to_json(w.subgraph_vertices);
  j["a1"] = w.a1;
  j["a2"] = w.a2;
  j["d1_prime"] = w.d1p;
  j["d2_prime"] = w.d2p;
  j["lhs"] = w.lhs;
  j["bound"] = w.bound;
  return j;
}

Json to_json(const TheoremCheck& c) {
  Json j;
  j["theorem"] = std::string(to_string(c.theorem));
  j["applicable"] = c.applicable;
  if (!c.applicable) {
    j["reason"] = c.reason;
    return j;
  }
  j["predicted_not_optimal"] = c.predicted;
  j["observed_not_optimal"] = c.observed;
  j["consistent"] = c.consistent;
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  j["atom_is_witness"] = c.atom_is_witness ? Json(*c.atom_is_witness) : Json(nullptr);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["limits"] = limits_json(r.options);
  j["graph"] = {{"n", r.n}, {"pairs", r.pairs}, {"edges", r.edges}};
  j["delta"] = r.delta;
  j["mu"] = r.mu;
  j["xi"] = {{"value", r.xi.value}, {"edge", Json::array({r.xi.u, r.xi.v})}};
  j["regular"] = r.regular;
  j["bipartite"] = r.bipartition.has_value();
  if (r.semi_regular) {
    j["semi_regular"] = r.semi_regular->semi_regular;
    if (r.semi_regular->semi_regular) {
      j["d1"] = r.semi_regular->d1;
      j["d2"] = r.semi_regular->d2;
    }
  } else {
    j["semi_regular"] = false;
  }

  j["lambda"] = r.lambda_cut.value;
  j["lambda_cut"] = to_json(r.lambda_cut);
  if (r.lambda_atoms) {
    j["r"] = r.lambda_atoms->size;
    j["lambda_atoms"] = atom_set_json(r.lambda_atoms);
  } else {
    j["r"] = nullptr;
    j["atoms_skipped"] = r.atoms_reason;
  }

  if (r.lambda_prime) {
    j["lambda_prime"] = r.lambda_prime->value;
    j["lambda_prime_cut"] = to_json(r.lambda_prime->certificate);
    j["xi_bound_holds"] = r.xi_bound_holds.value_or(false);
    if (r.lambda_prime_atoms) {
      j["r_prime"] = r.lambda_prime_atoms->size;
      j["lambda_prime_atoms"] = atom_set_json(r.lambda_prime_atoms);
    } else {
      j["r_prime"] = nullptr;
    }
  } else {
    j["lambda_prime"] = "undefined";
    j["lambda_prime_reason"] = r.lambda_prime_reason;
  }

  j["maximally_edge_connected"] = r.maximally_edge_connected;
  j["super_lambda"] = r.super_lambda ? Json(*r.super_lambda) : Json(nullptr);
  j["super_lambda_method"] = r.super_lambda_method;
  if (r.super_lambda_witness) j["super_lambda_witness"] = to_json(*r.super_lambda_witness);
  j["lambda_prime_optimal"] = r.lambda_prime_optimal ? Json(*r.lambda_prime_optimal) : Json(nullptr);
  if (!r.lambda_prime_optimal) j["lambda_prime_optimal_reason"] = r.lambda_prime_optimal_reason;

  Json sym;
  sym["computed"] = r.symmetry.computed;
  if (r.symmetry.computed) {
    sym["automorphism_group_order"] = r.symmetry.group_order;
    Json orbits = Json::array();
    for (const auto& o : r.symmetry.orbits) orbits.push_back(to_json(o));
    sym["orbits"] = orbits;
    sym["vertex_transitive"] = r.symmetry.vertex_transitive;
    sym["half_transitive"] = r.symmetry.half_transitive;
    if (r.symmetry.parts) sym["parts"] = Json::array({to_json(r.symmetry.parts->part1), to_json(r.symmetry.parts->part2)});
  } else {
    sym["reason"] = r.symmetry.reason;
  }
  j["symmetry"] = sym;

  Json checks = Json::array();
  for (const auto& c : r.theorem_checks) checks.push_back(to_json(c));
  j["theorem_checks"] = checks;
  j["consistent"] = r.all_checks_consistent();
  return j;
}

AtomKind parse_atom_kind(std::string_view text) {
  if (text == "lambda") return AtomKind::Lambda;
  if (text == "superatom") return AtomKind::Superatom;
  if (text == "lambda-prime") return AtomKind::LambdaPrime;
  throw Error(ErrorCode::InvalidParameters, "atom kind must be lambda, superatom or lambda-prime");
}

Json atoms_document(const Multigraph& g, AtomKind kind, const Limits& limits) {
  Json j;
  j["limits"] = {{"exhaustive", limits.exhaustive}};
  std::optional<AtomSet> atoms;
  switch (kind) {
    case AtomKind::Lambda:
      j["kind"] = "lambda";
      atoms = lambda_atoms(g, limits.exhaustive);
      j["lambda"] = edge_connectivity(g).value;
      j["r"] = atoms->size;
      break;
    case AtomKind::Superatom:
      j["kind"] = "superatom";
      atoms = superatoms(g, limits.exhaustive);
      j["lambda"] = edge_connectivity(g).value;
      j["superatom_size"] = atoms ? Json(atoms->size) : Json(nullptr);
      if (!atoms) j["note"] = "no strict lambda-fragment: every minimum cut isolates a vertex";
      break;
    case AtomKind::LambdaPrime:
      j["kind"] = "lambda-prime";
      if (!lambda_prime_defined(g)) throw Error(ErrorCode::NotDefined, lambda_prime_undefined_reason(g));
      atoms = lambda_prime_atoms(g, limits.exhaustive);
      j["lambda_prime"] = atoms->atoms.front().cut_value;
      j["r_prime"] = atoms->size;
      break;
  }
  Json list = Json::array();
  if (atoms) {
    for (const auto& f : atoms->atoms) {
      CutCertificate c{f.cut_value, f.side, boundary(g, f.side).crossing};
      Json entry = to_json(c);
      entry["kind"] = std::string(to_string(f.kind));
      list.push_back(entry);
    }
  }
  j["atoms"] = list;
  return j;
}

Json check_document(const Multigraph& g, const ClassifyOptions& options) {
  Json j;
  j["limits"] = limits_json(options);
  const auto checks = run_theorem_checks(g, options);
  Json rows = Json::array();
  bool consistent = true;
  for (const auto& c : checks) {
    rows.push_back(to_json(c));
    consistent = consistent && c.consistent;
  }
  j["theorem_checks"] = rows;
  j["consistent"] = consistent;
  return j;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

std::string render(const Json& doc, bool json) { return json ? doc.dump(2) + "\n" : render_text(doc); }

}  // namespace edgecut
