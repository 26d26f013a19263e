#pragma once

#include <optional>
#include <string>
#include <vector>

namespace netslice {

struct NewickNode {
  std::string label;
  std::optional<double> length;
  std::vector<NewickNode> children;
};

/// Parses a single Newick tree terminated by ';'. Labels may be bare or
/// single-quoted ('' escapes a quote). Throws ParseError, the line number
/// reported being that of the offending character.
NewickNode parse_newick(const std::string& text);

/// Serialises with bare labels; lengths use the shortest round-trip form.
std::string write_newick(const NewickNode& root);

}  // namespace netslice
