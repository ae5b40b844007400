#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cozero {

/// Undirected simple graph over vertex positions 0..n-1 (adjacency matrix).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph complete_bipartite(std::size_t m, std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  /// Self-loops are ignored; the graph stays irreflexive.
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Induced subgraph on `keep` (positions, ascending).
  SimpleGraph induced(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Nonnegative integer or infinity; only compared, never added.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr std::uint64_t value() const { return *value_; }
  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_finite() && b.is_finite()) return a.value() <=> b.value();
    if (a.is_finite()) return std::strong_ordering::less;
    if (b.is_finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<std::uint64_t> value_ = 0;
};

struct MetricLimits {
  std::size_t exact_vertex_cap = 64;
};

std::vector<std::vector<std::size_t>> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
ExtendedNat distance(const SimpleGraph& g, std::size_t a, std::size_t b);
/// 0 for graphs with fewer than two vertices; infinity when disconnected.
ExtendedNat diameter(const SimpleGraph& g);
ExtendedNat girth(const SimpleGraph& g);
std::size_t clique_number(const SimpleGraph& g, const MetricLimits& limits = {});
std::size_t chromatic_number(const SimpleGraph& g, const MetricLimits& limits = {});
bool is_planar(const SimpleGraph& g, const MetricLimits& limits = {});

struct PartiteStructure {
  bool bipartite = false;
  /// Smaller part first; ties broken by the smaller least vertex.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
  bool complete = false;
};

PartiteStructure partite_structure(const SimpleGraph& g);
bool is_r_partite(const SimpleGraph& g, std::size_t r, const MetricLimits& limits = {});

struct MetricsReport {
  bool connected = true;
  ExtendedNat diameter;
  ExtendedNat girth;
  std::size_t clique_number = 0;
  std::size_t chromatic_number = 0;
  bool bipartite = true;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
  bool complete = true;
  bool planar = true;
};

MetricsReport compute_metrics(const SimpleGraph& g, const MetricLimits& limits = {});

}  // namespace cozero
