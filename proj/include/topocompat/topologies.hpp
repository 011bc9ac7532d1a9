#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topocompat/graph.hpp"

namespace topo {

enum class TopologyKind { hypercube, ring, star, complete, custom };

std::string_view to_string(TopologyKind kind);

/// Descriptor of a generated or file-backed topology. Text syntax:
/// `hypercube:s`, `ring:p`, `star:p`, `complete:n`, `file:PATH`.
struct TopologySpec {
  TopologyKind kind = TopologyKind::hypercube;
  std::uint32_t parameter = 1;  // s, p or n; unused for custom
  std::string path;             // custom only

  /// Parses the text syntax; throws ParseError on malformed text and
  /// InvalidParameter when the parameter violates the kind's range.
  static TopologySpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

inline constexpr std::uint32_t kMaxHypercubeDimension = 20;

/// 2^s vertices, i ~ j iff i ^ j is a power of two. 1 <= s <= 20.
Graph hypercube(std::uint32_t s);
/// C_p, p >= 3.
Graph ring(std::uint32_t p);
/// K_{1,p-1} centred at vertex 0, p >= 2.
Graph star(std::uint32_t p);
/// K_n, n >= 1.
Graph complete(std::uint32_t n);

/// Generates the graph a spec describes (reads the file for custom).
Graph make_graph(const TopologySpec& spec);

/// Reflected binary Gray code g(i) = i ^ (i >> 1) for i < 2^s: a
/// Hamiltonian cycle of hypercube(s). Requires 2 <= s <= 20.
std::vector<Vertex> gray_code_cycle(std::uint32_t s);

}  // namespace topo
