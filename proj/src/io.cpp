#include "cayley/io.hpp"

#include <charconv>
#include <sstream>

namespace cayley::io {

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

void write_edge_list(std::ostream& os, const LabeledTree& tree) {
  os << "n " << tree.n() << '\n';
  for (const Edge& e : tree.edges()) os << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const LabeledTree& tree) {
  std::ostringstream os;
  write_edge_list(os, tree);
  return os.str();
}

bool EdgeListReader::getline(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  line = std::string(trim_cr(line));
  return true;
}

std::optional<LabeledTree> EdgeListReader::next() {
  std::string line;
  do {
    if (!getline(line)) return std::nullopt;
  } while (split_spaces(line).empty());

  const std::size_t header_line = line_no_;
  const auto header = split_spaces(line);
  int n = 0;
  if (header.size() != 2 || header[0] != "n" || !parse_int(header[1], n) || n < 1) {
    throw ParseError(header_line, "expected header 'n <count>' with count >= 1, got '" + line + "'");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n - 1; ++i) {
    if (!getline(line)) throw ParseError(line_no_ + 1, "unexpected end of input, expected " + std::to_string(n - 1) + " edges");
    const auto fields = split_spaces(line);
    int u = 0;
    int v = 0;
    if (fields.size() != 2 || !parse_int(fields[0], u) || !parse_int(fields[1], v)) {
      throw ParseError(line_no_, "expected 'u v', got '" + line + "'");
    }
    edges.emplace_back(u, v);
  }
  try {
    return LabeledTree::canonicalize(n, edges);
  } catch (const Error& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string format_prufer(const std::vector<int>& symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out;
}

std::vector<int> parse_prufer(const std::string& text) {
  const std::string_view s = trim_cr(text);
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view field = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    int v = 0;
    if (!parse_int(field, v)) throw std::invalid_argument("bad symbol '" + std::string(field) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty list");
  return parse_prufer(text);
}

nlohmann::json tree_to_json(const LabeledTree& tree) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
  return {{"n", tree.n()}, {"edges", std::move(edges)}};
}

}  // namespace cayley::io
