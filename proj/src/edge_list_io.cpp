#include "topocompat/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "topocompat/errors.hpp"

namespace topo {

namespace {

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

template <class T>
void parse_pair(const std::string& line, std::size_t line_no, T& a, T& b) {
  std::istringstream ss(line);
  long long x = -1, y = -1;
  std::string rest;
  if (!(ss >> x >> y) || (ss >> rest) || x < 0 || y < 0)
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected two non-negative integers, got '" + line +
                     "'");
  a = static_cast<T>(x);
  b = static_cast<T>(y);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw ParseError("empty edge list: missing 'n m' header");
  std::size_t n = 0, m = 0;
  parse_pair(line, line_no, n, m);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    std::size_t u = 0, v = 0;
    parse_pair(line, line_no, u, v);
    if (u >= n || v >= n)
      throw InvalidVertex("line " + std::to_string(line_no) +
                          ": endpoint out of range 0.." +
                          std::to_string(n == 0 ? 0 : n - 1));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no))
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing content after " + std::to_string(m) +
                     " edges");
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  write_edge_list(out, g);
}

}  // namespace topo
