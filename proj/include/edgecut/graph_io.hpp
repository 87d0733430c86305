#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "edgecut/multigraph.hpp"

namespace edgecut {

/// Raised for malformed graph files; line() is 1-based (0 for end of input).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Graph file format:
//
//   # comment (anything after '#' is ignored, blank lines too)
//   mgraph <n> <num_pairs>
//   <u> <v> <mult>        one line per pair, num_pairs lines
//
// The canonical form lists each pair once with u < v, sorted lexicographically,
// and has no comments.

Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);

std::string serialize_graph(const Multigraph& g);
void write_graph_file(const std::filesystem::path& path, const Multigraph& g);

}  // namespace edgecut
