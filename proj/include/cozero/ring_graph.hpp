#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cozero/finite_ring.hpp"
#include "cozero/graph.hpp"

namespace cozero {

enum class GraphKind { zero_div, zero_div_ideal, cozero, cozero_ideal };

std::string_view to_string(GraphKind kind);

/// A ring-derived graph: vertices are element indices (ascending), the
/// adjacency lives in a SimpleGraph over vertex positions.
class RingGraph {
 public:
  RingGraph(GraphKind kind, const FiniteRing& R, std::optional<Ideal> ideal,
            std::vector<Index> vertices, SimpleGraph adjacency);

  GraphKind kind() const { return kind_; }
  RingId ring_id() const { return ring_id_; }
  const std::string& ring_name() const { return ring_name_; }
  const std::optional<Ideal>& ideal() const { return ideal_; }
  const std::vector<Index>& vertices() const { return vertices_; }
  const std::string& label(std::size_t position) const { return labels_[position]; }
  const SimpleGraph& graph() const { return graph_; }
  /// Elements deleted by remove_vertices, in deletion order.
  const std::vector<ElementSet>& removals() const { return removals_; }

  bool empty() const { return vertices_.empty(); }
  bool has_vertex(Index x) const { return position_of(x).has_value(); }
  std::optional<std::size_t> position_of(Index x) const;
  bool adjacent(Index x, Index y) const;
  ElementSet vertex_set() const;
  /// Element-index edges (a, b), a < b, lexicographic.
  std::vector<std::pair<Index, Index>> edges() const;

  RingGraph without(const ElementSet& removed) const;

 private:
  GraphKind kind_;
  RingId ring_id_;
  std::size_t ring_order_;
  std::string ring_name_;
  std::optional<Ideal> ideal_;
  std::vector<Index> vertices_;
  std::vector<std::string> labels_;
  SimpleGraph graph_;
  std::vector<ElementSet> removals_;
};

/// Γ(R): nonzero zero-divisors, x–y iff xy = 0.
RingGraph zero_divisor_graph(const FiniteRing& R);
/// Γ_I(R): x ∉ I with xy ∈ I for some y ∉ I; x–y iff xy ∈ I.  I proper.
RingGraph ideal_zero_divisor_graph(const FiniteRing& R, const Ideal& I);
/// Γ'(R): nonzero non-units, x–y iff x ∉ yR and y ∉ xR.
RingGraph cozero_divisor_graph(const FiniteRing& R);
/// Γ'_I(R): x ∉ Ann(I) with xI ≠ I; x–y iff x ∉ yI and y ∉ xI.
RingGraph ideal_cozero_divisor_graph(const FiniteRing& R, const Ideal& I);

/// Induced subgraph on V(G) \ S.
RingGraph remove_vertices(const RingGraph& G, const ElementSet& S);

enum class GraphFormat { dot, json };

std::string graph_name(const RingGraph& G);
std::string emit_dot(const RingGraph& G);
std::string emit_json(const RingGraph& G);
std::string emit_graph(const RingGraph& G, GraphFormat format);

/// Graph-level metric wrappers taking element indices.
ExtendedNat distance(const RingGraph& G, Index a, Index b);

}  // namespace cozero
