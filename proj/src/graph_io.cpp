#include "bugscope/graph_io.hpp"

#include <charconv>
#include <optional>
#include <fstream>
#include <istream>
#include <sstream>

#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxSmallN = 62;
constexpr std::size_t kMaxMediumN = 258047;

void append_size(std::string& out, std::size_t n) {
  const auto push = [&out](std::size_t bits) { out.push_back(static_cast<char>(bits + 63)); };
  if (n <= kMaxSmallN) {
    push(n);
  } else if (n <= kMaxMediumN) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) push((n >> shift) & 63);
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) push((n >> shift) & 63);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError(line, 0, "empty graph6 string");
  std::size_t pos = 0;
  const auto next6 = [&]() -> unsigned {
    if (pos >= text.size()) throw ParseError(line, pos + 1, "graph6 string ends prematurely");
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(line, pos + 1, std::string("byte '") + static_cast<char>(c) +
                                          "' is outside the graph6 range 63..126");
    }
    ++pos;
    return c - 63u;
  };

  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = next6();
  } else {
    ++pos;
    int groups = 3;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | next6();
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError(line, text.size() < expected ? text.size() + 1 : expected + 1,
                     "graph6 string for n=" + std::to_string(n) + " must have " +
                         std::to_string(expected) + " bytes, found " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  unsigned chunk = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next6();
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1u) edges.emplace_back(i, j);
    }
  }
  if (left > 0 && (chunk & ((1u << left) - 1)) != 0) {
    throw ParseError(line, pos, "non-zero padding bits in graph6 string");
  }
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::uint64_t> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ParseError(line_no, static_cast<std::size_t>(line.data() - raw.data()) + i + 1,
                         "expected a non-negative integer");
      }
      fields.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (!n) {
      if (fields.size() != 1) throw ParseError(line_no, 0, "first line must hold only the vertex count");
      n = fields[0];
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, 0, "expected an edge 'u v'");
    if (fields[0] >= *n || fields[1] >= *n) {
      throw ParseError(line_no, 0, "vertex label outside 0.." + std::to_string(*n - 1));
    }
    if (fields[0] == fields[1]) throw ParseError(line_no, 0, "self-loop");
    edges.emplace_back(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, 0, "missing vertex count");
  try {
    return Graph(*n, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(line_no, 0, e.what());
  }
}

GraphFormat detect_format(std::string_view text) {
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    for (char c : line) {
      if (c < '0' || c > '9') return GraphFormat::graph6;
    }
    return GraphFormat::edge_list;
  }
  return GraphFormat::graph6;
}

Graph read_graph(std::string_view text) {
  if (detect_format(text) == GraphFormat::edge_list) return from_edge_list(text);
  std::size_t line_no = 0;
  std::optional<Graph> result;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (result) throw ParseError(line_no, 0, "expected a single graph, found more");
    result = from_graph6(line, line_no);
  }
  if (!result) throw ParseError(1, 0, "no graph found");
  return *std::move(result);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str());
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    graphs.push_back(from_graph6(line, line_no));
  }
  return graphs;
}

std::vector<Graph> read_graph6_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph6_corpus(in);
}

}  // namespace bugscope
