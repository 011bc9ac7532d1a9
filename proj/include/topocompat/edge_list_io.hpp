#pragma once

#include <filesystem>
#include <iosfwd>

#include "topocompat/graph.hpp"

namespace topo {

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based ids, whitespace separated)
// Lines starting with '#' and blank lines are skipped. Duplicate and
// reversed edges collapse on read. The writer emits each edge once with
// u < v, sorted lexicographically.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace topo
