#include "firefight/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "firefight/errors.hpp"

namespace firefight {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(int line) : line_(line) {}

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  long long integer(const Token& t) const {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail(t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
  }

  int vertex_count(const Token& t) const {
    const long long v = integer(t);
    if (v < 1 || v > 1'000'000) fail(t.column, "vertex count out of range");
    return static_cast<int>(v);
  }

 private:
  int line_;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<int> version, n, root;
  std::optional<std::vector<int>> sequence;
  std::string name;
  std::vector<Edge> edges;
  bool in_edges = false;
  int line_no = 0;
  int last_line = 1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    const LineParser p(line_no);
    const auto& head = tokens.front();

    if (!version) {
      if (head.text != "firefight" || tokens.size() != 2) p.fail(head.column, "expected header 'firefight <version>'");
      const long long v = p.integer(tokens[1]);
      if (v != kInstanceFormatVersion) {
        throw Error(ErrorCode::UnknownVersion, "unsupported instance format version " + std::to_string(v));
      }
      version = static_cast<int>(v);
    } else if (in_edges) {
      if (tokens.size() != 2) p.fail(head.column, "expected an edge 'u v'");
      const long long u = p.integer(tokens[0]);
      const long long v = p.integer(tokens[1]);
      for (const auto& [value, tok] : {std::pair{u, tokens[0]}, std::pair{v, tokens[1]}}) {
        if (value < 0 || value >= *n) p.fail(tok.column, "vertex " + std::to_string(value) + " out of range");
      }
      if (u == v) p.fail(tokens[1].column, "self-loop");
      edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    } else if (head.text == "name") {
      name.clear();
      if (tokens.size() > 1) name = std::string(line.substr(static_cast<std::size_t>(tokens[1].column - 1)));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t' || name.back() == '\r')) name.pop_back();
    } else if (head.text == "n") {
      if (tokens.size() != 2) p.fail(head.column, "expected 'n <count>'");
      n = p.vertex_count(tokens[1]);
    } else if (head.text == "root") {
      if (tokens.size() != 2) p.fail(head.column, "expected 'root <vertex>'");
      root = static_cast<int>(p.integer(tokens[1]));
    } else if (head.text == "sequence") {
      std::vector<int> seq;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const long long f = p.integer(tokens[i]);
        if (f < 0) p.fail(tokens[i].column, "firefighter counts must be nonnegative");
        seq.push_back(static_cast<int>(f));
      }
      sequence = std::move(seq);
    } else if (head.text == "edges") {
      if (tokens.size() != 1) p.fail(tokens[1].column, "unexpected text after 'edges'");
      if (!n || !root || !sequence) p.fail(head.column, "'edges' must follow n, root and sequence");
      if (*root < 0 || *root >= *n) p.fail(head.column, "root out of range");
      in_edges = true;
    } else {
      p.fail(head.column, "unknown directive '" + std::string(head.text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!version) throw ParseError(1, 1, "missing header");
  if (!in_edges) throw ParseError(last_line, 1, "missing 'edges' section");
  try {
    return Instance{Graph(*n, edges, *root), std::move(*sequence), std::move(name)};
  } catch (const Error& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "firefight " << kInstanceFormatVersion << '\n';
  if (!instance.name.empty()) out << "name " << instance.name << '\n';
  out << "n " << instance.graph.num_vertices() << '\n';
  out << "root " << instance.graph.root() << '\n';
  out << "sequence";
  for (int f : instance.sequence) out << ' ' << f;
  out << '\n' << "edges\n";
  for (auto [u, v] : instance.graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << serialize_instance(instance);
}

}  // namespace firefight
