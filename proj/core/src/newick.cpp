#include "netslice/newick.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "netslice/errors.hpp"

namespace netslice {
namespace {

class NewickParser {
 public:
  explicit NewickParser(const std::string& text) : text_(text) {}

  NewickNode parse() {
    NewickNode root = subtree();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    return root;
  }

 private:
  NewickNode subtree() {
    NewickNode node;
    skip_space();
    if (peek() == '(') {
      ++pos_;
      node.children.push_back(subtree());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        node.children.push_back(subtree());
        skip_space();
      }
      expect(')');
    }
    skip_space();
    node.label = label();
    skip_space();
    if (peek() == ':') {
      ++pos_;
      skip_space();
      node.length = number();
    }
    return node;
  }

  std::string label() {
    std::string out;
    if (peek() == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            out.push_back('\'');
            ++pos_;
            continue;
          }
          break;
        }
        out.push_back(c);
      }
      return out;
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      out.push_back(c);
      ++pos_;
    }
    return out;
  }

  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("expected branch length");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '[') {  // comment
        auto close = text_.find(']', pos_);
        if (close == std::string::npos) fail("unterminated comment");
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line;
    }
    throw ParseError("newick: " + what + " at offset " + std::to_string(pos_), line);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void write_node(const NewickNode& node, std::string& out) {
  if (!node.children.empty()) {
    out.push_back('(');
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out.push_back(',');
      write_node(node.children[i], out);
    }
    out.push_back(')');
  }
  out += node.label;
  if (node.length) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ":%.17g", *node.length);
    // Prefer the short form when it round-trips (integer lengths are the norm).
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, ":%g", *node.length);
    out += std::strtod(shorter + 1, nullptr) == *node.length ? shorter : buf;
  }
}

}  // namespace

NewickNode parse_newick(const std::string& text) { return NewickParser(text).parse(); }

std::string write_newick(const NewickNode& root) {
  std::string out;
  write_node(root, out);
  out.push_back(';');
  return out;
}

}  // namespace netslice
