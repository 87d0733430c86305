#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "edgecut/classifier.hpp"

namespace edgecut {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const CutCertificate& c);
Json to_json(const Fragment& f);
Json to_json(const TheoremWitness& w);
Json to_json(const TheoremCheck& c);
Json to_json(const ClassificationReport& r);

enum class AtomKind { Lambda, Superatom, LambdaPrime };

AtomKind parse_atom_kind(std::string_view text);

/// r / superatom size / r' and every atom of the requested kind with its cut
/// certificate.
Json atoms_document(const Multigraph& g, AtomKind kind, const Limits& limits);

/// All applicable theorem checks plus an overall "consistent" flag.
Json check_document(const Multigraph& g, const ClassifyOptions& options);

/// Flattens a document into "dotted.key: value" lines.
std::string render_text(const Json& doc);

/// Either pretty JSON or text, always newline-terminated.
std::string render(const Json& doc, bool json);

}  // namespace edgecut
