#include "edgecut/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace edgecut {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long to_integer(std::string_view token, int line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int header_line = 0;
  long n = -1;
  long expected = 0;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 3 || tokens[0] != "mgraph") throw ParseError(line_no, "expected header 'mgraph <n> <num_pairs>'");
      n = to_integer(tokens[1], line_no);
      expected = to_integer(tokens[2], line_no);
      if (n < 0 || expected < 0) throw ParseError(line_no, "negative count in header");
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<u> <v> <mult>'");
    if (static_cast<long>(edges.size()) == expected) throw ParseError(line_no, "more pair lines than the header announces");
    const long u = to_integer(tokens[0], line_no);
    const long v = to_integer(tokens[1], line_no);
    const long m = to_integer(tokens[2], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line_no, "loops are not allowed");
    if (m < 1) throw ParseError(line_no, "multiplicity must be at least 1");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(m)});
  }
  if (n < 0) throw ParseError(0, "missing 'mgraph' header");
  if (static_cast<long>(edges.size()) != expected) {
    throw ParseError(header_line, "header announces " + std::to_string(expected) + " pairs, found " + std::to_string(edges.size()));
  }
  return Multigraph::build(static_cast<int>(n), edges);
}

Multigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_graph(in);
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "mgraph " << g.order() << ' ' << g.pair_count() << '\n';
  for (const auto& p : g.pairs()) out << p.u << ' ' << p.v << ' ' << p.mult << '\n';
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Multigraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidParameters, "cannot write " + path.string());
  out << serialize_graph(g);
}

}  // namespace edgecut
