#include "netslice/edge_list.hpp"

#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "netslice/errors.hpp"

namespace netslice {
namespace {

std::string format_coordinate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_number(const std::string& token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_double(const std::string& token, double& out) {
  // std::from_chars for double is unavailable on older standard libraries.
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return !token.empty() && end == token.c_str() + token.size();
}

}  // namespace

void write_edge_list(std::ostream& out, const EdgeListDocument& doc) {
  out << "# nodes=" << doc.graph.node_count() << '\n';
  for (const auto& [key, value] : doc.metadata) out << "# " << key << '=' << value << '\n';
  for (const auto& [u, v] : doc.graph.edges()) out << u << ' ' << v << '\n';
  if (doc.layout) {
    out << "# layout\n";
    for (std::size_t i = 0; i < doc.layout->size(); ++i) {
      out << i << ' ' << format_coordinate((*doc.layout)[i].x) << ' '
          << format_coordinate((*doc.layout)[i].y) << '\n';
    }
  }
}

std::string to_edge_list(const EdgeListDocument& doc) {
  std::ostringstream out;
  write_edge_list(out, doc);
  return out.str();
}

EdgeListDocument read_edge_list(std::istream& in) {
  EdgeListDocument doc;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool in_layout = false;
  std::vector<char> layout_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (!have_header) {
      const std::string prefix = "# nodes=";
      std::size_t n = 0;
      if (line.rfind(prefix, 0) != 0 || !parse_number(trim(line.substr(prefix.size())), n)) {
        throw ParseError("expected header '# nodes=<N>'", line_no);
      }
      doc.graph = Graph(n);
      have_header = true;
      continue;
    }

    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body == "layout") {
        in_layout = true;
        doc.layout.emplace(doc.graph.node_count());
        layout_seen.assign(doc.graph.node_count(), 0);
      } else if (auto eq = body.find('='); eq != std::string::npos && !in_layout) {
        doc.metadata.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
      }
      continue;
    }

    std::istringstream fields(line);
    std::string a, b, c, extra;
    fields >> a >> b >> c >> extra;

    if (in_layout) {
      std::size_t id = 0;
      Point2D p;
      if (c.empty() || !extra.empty() || !parse_number(a, id) || !parse_double(b, p.x) ||
          !parse_double(c, p.y)) {
        throw ParseError("expected layout line '<id> <x> <y>'", line_no);
      }
      if (id >= doc.graph.node_count()) throw ParseError("layout id out of range", line_no);
      if (layout_seen[id]) throw ParseError("duplicate layout id", line_no);
      layout_seen[id] = 1;
      (*doc.layout)[id] = p;
      continue;
    }

    NodeId u = 0, v = 0;
    if (!c.empty() || !parse_number(a, u) || !parse_number(b, v)) {
      throw ParseError("expected edge line '<u> <v>'", line_no);
    }
    try {
      doc.graph.add_edge(u, v);
    } catch (const UsageError& e) {
      throw ParseError(e.what(), line_no);
    }
  }

  if (!have_header) throw ParseError("missing header '# nodes=<N>'", line_no + 1);
  if (doc.layout) {
    for (std::size_t i = 0; i < layout_seen.size(); ++i) {
      if (!layout_seen[i]) {
        throw ParseError("layout section misses node " + std::to_string(i), line_no);
      }
    }
  }
  return doc;
}

EdgeListDocument parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

EdgeListDocument load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const EdgeListDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write_edge_list(out, doc);
  if (!out) throw UsageError("write failed for '" + path + "'");
}

}  // namespace netslice
