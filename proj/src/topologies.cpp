#include "topocompat/topologies.hpp"

#include <charconv>
#include <string>

#include "topocompat/edge_list_io.hpp"
#include "topocompat/errors.hpp"

namespace topo {

namespace {

void check_dimension(std::uint32_t s, std::uint32_t min_s) {
  if (s < min_s || s > kMaxHypercubeDimension)
    throw InvalidParameter("hypercube dimension must be in " +
                           std::to_string(min_s) + ".." +
                           std::to_string(kMaxHypercubeDimension) + ", got " +
                           std::to_string(s));
}

void check_at_least(std::string_view what, std::uint32_t value,
                    std::uint32_t min) {
  if (value < min)
    throw InvalidParameter(std::string(what) + " order must be at least " +
                           std::to_string(min) + ", got " +
                           std::to_string(value));
}

void validate(const TopologySpec& spec) {
  switch (spec.kind) {
    case TopologyKind::hypercube: check_dimension(spec.parameter, 1); break;
    case TopologyKind::ring: check_at_least("ring", spec.parameter, 3); break;
    case TopologyKind::star: check_at_least("star", spec.parameter, 2); break;
    case TopologyKind::complete:
      check_at_least("complete", spec.parameter, 1);
      break;
    case TopologyKind::custom:
      if (spec.path.empty()) throw ParseError("file: spec needs a path");
      break;
  }
}

}  // namespace

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::hypercube: return "hypercube";
    case TopologyKind::ring: return "ring";
    case TopologyKind::star: return "star";
    case TopologyKind::complete: return "complete";
    case TopologyKind::custom: return "file";
  }
  return "?";
}

TopologySpec TopologySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("topology spec '" + std::string(text) +
                     "' must look like kind:value");
  const auto name = text.substr(0, colon);
  const auto value = text.substr(colon + 1);

  TopologySpec spec;
  if (name == "file") {
    spec.kind = TopologyKind::custom;
    spec.parameter = 0;
    spec.path = std::string(value);
    validate(spec);
    return spec;
  }
  if (name == "hypercube") spec.kind = TopologyKind::hypercube;
  else if (name == "ring") spec.kind = TopologyKind::ring;
  else if (name == "star") spec.kind = TopologyKind::star;
  else if (name == "complete") spec.kind = TopologyKind::complete;
  else
    throw ParseError("unknown topology kind '" + std::string(name) + "'");

  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, spec.parameter);
  if (ec != std::errc() || ptr != end || value.empty())
    throw ParseError("topology parameter '" + std::string(value) +
                     "' is not a non-negative integer");
  validate(spec);
  return spec;
}

std::string TopologySpec::to_string() const {
  if (kind == TopologyKind::custom) return "file:" + path;
  return std::string(topo::to_string(kind)) + ":" + std::to_string(parameter);
}

Graph hypercube(std::uint32_t s) {
  check_dimension(s, 1);
  const std::size_t n = std::size_t{1} << s;
  std::vector<std::vector<Vertex>> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    lists[v].reserve(s);
    for (std::uint32_t bit = 0; bit < s; ++bit)
      lists[v].push_back(v ^ (Vertex{1} << bit));
  }
  return Graph::from_neighbor_lists(std::move(lists));
}

Graph ring(std::uint32_t p) {
  check_at_least("ring", p, 3);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  return Graph::from_edge_list(p, edges);
}

Graph star(std::uint32_t p) {
  check_at_least("star", p, 2);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < p; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(p, edges);
}

Graph complete(std::uint32_t n) {
  check_at_least("complete", n, 1);
  std::vector<std::vector<Vertex>> lists(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) lists[u].push_back(v);
  return Graph::from_neighbor_lists(std::move(lists));
}

Graph make_graph(const TopologySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case TopologyKind::hypercube: return hypercube(spec.parameter);
    case TopologyKind::ring: return ring(spec.parameter);
    case TopologyKind::star: return star(spec.parameter);
    case TopologyKind::complete: return complete(spec.parameter);
    case TopologyKind::custom: return read_edge_list_file(spec.path);
  }
  throw InvalidParameter("unknown topology kind");
}

std::vector<Vertex> gray_code_cycle(std::uint32_t s) {
  check_dimension(s, 2);
  const std::size_t n = std::size_t{1} << s;
  std::vector<Vertex> cycle(n);
  for (Vertex i = 0; i < n; ++i) cycle[i] = i ^ (i >> 1);
  return cycle;
}

}  // namespace topo
