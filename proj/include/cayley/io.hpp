#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayley/core.hpp"

// Text formats.
//
// Edge list: a header line `n <count>`, then one line `u v` per edge with u < v,
// lines sorted. A single-vertex tree is the header alone. Several trees are
// written back to back; each header starts a new tree.
//
// Pruefer line: symbols joined by commas, no spaces. Empty line for n <= 2.
namespace cayley::io {

/// Malformed text input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

void write_edge_list(std::ostream& os, const LabeledTree& tree);
std::string to_edge_list(const LabeledTree& tree);

/// Reads edge-list blocks one tree at a time. Edges may appear in any order and
/// orientation; blank lines between blocks are skipped.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(in) {}
  /// Throws ParseError on malformed text or an edge set that is not a tree.
  std::optional<LabeledTree> next();

 private:
  bool getline(std::string& line);

  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::string format_prufer(const std::vector<int>& symbols);
/// Parses `a,b,c`; the empty string is the empty sequence. Throws std::invalid_argument.
std::vector<int> parse_prufer(const std::string& text);

/// Comma-separated positive integers, e.g. a degree sequence `2,2,1,1`.
std::vector<int> parse_int_list(const std::string& text);

nlohmann::json tree_to_json(const LabeledTree& tree);

}  // namespace cayley::io
