#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netslice/geometry.hpp"
#include "netslice/graph.hpp"

namespace netslice {

/// Edge-list text format:
///
///   # nodes=<N>
///   # <key>=<value>          (optional metadata, any number)
///   <u> <v>                  (one edge per line, u < v)
///   # layout                 (optional section)
///   <id> <x> <y>
///
/// Lines end with LF. Other '#' lines are comments and are ignored on read.
struct EdgeListDocument {
  Graph graph;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::optional<std::vector<Point2D>> layout;
};

void write_edge_list(std::ostream& out, const EdgeListDocument& doc);
std::string to_edge_list(const EdgeListDocument& doc);

/// Throws ParseError carrying the 1-based line number of the first problem.
EdgeListDocument read_edge_list(std::istream& in);
EdgeListDocument parse_edge_list(const std::string& text);

EdgeListDocument load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const EdgeListDocument& doc);

}  // namespace netslice
