#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bugscope/graph.hpp"

namespace bugscope {

/// graph6 encoding of a single graph, without header or trailing newline.
std::string to_graph6(const Graph& g);
/// Decodes one graph6 string. `line` only feeds error messages.
Graph from_graph6(std::string_view text, std::size_t line = 1);

/// "n" on the first line, then one "u v" pair per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { graph6, edge_list };

/// Edge-list files start with a line consisting of digits only; anything else
/// is read as graph6 (graph6 bytes never include ASCII digits).
GraphFormat detect_format(std::string_view text);

/// Reads exactly one graph in either format.
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Every non-empty line of a graph6 corpus; an optional ">>graph6<<" header is
/// accepted on each line.
std::vector<Graph> read_graph6_corpus(std::istream& in);
std::vector<Graph> read_graph6_corpus_file(const std::filesystem::path& path);

}  // namespace bugscope
