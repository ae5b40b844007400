#include "cozero/ring_graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "cozero/error.hpp"

namespace cozero {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::zero_div: return "zero_div";
    case GraphKind::zero_div_ideal: return "zero_div_ideal";
    case GraphKind::cozero: return "cozero";
    case GraphKind::cozero_ideal: return "cozero_ideal";
  }
  return "unknown";
}

RingGraph::RingGraph(GraphKind kind, const FiniteRing& R, std::optional<Ideal> ideal,
                     std::vector<Index> vertices, SimpleGraph adjacency)
    : kind_(kind),
      ring_id_(R.id()),
      ring_order_(R.order()),
      ring_name_(R.name()),
      ideal_(std::move(ideal)),
      vertices_(std::move(vertices)),
      graph_(std::move(adjacency)) {
  labels_.reserve(vertices_.size());
  for (Index v : vertices_) labels_.push_back(R.label(v));
}

std::optional<std::size_t> RingGraph::position_of(Index x) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool RingGraph::adjacent(Index x, Index y) const {
  auto a = position_of(x);
  auto b = position_of(y);
  return a && b && graph_.adjacent(*a, *b);
}

ElementSet RingGraph::vertex_set() const {
  return ElementSet::from_range(ring_order_, vertices_);
}

std::vector<std::pair<Index, Index>> RingGraph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (auto [a, b] : graph_.edges()) out.emplace_back(vertices_[a], vertices_[b]);
  return out;
}

RingGraph RingGraph::without(const ElementSet& removed) const {
  std::vector<std::size_t> keep;
  std::vector<Index> kept_vertices;
  std::vector<std::string> kept_labels;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!removed.contains(vertices_[i])) {
      keep.push_back(i);
      kept_vertices.push_back(vertices_[i]);
      kept_labels.push_back(labels_[i]);
    }
  RingGraph out = *this;
  out.vertices_ = std::move(kept_vertices);
  out.labels_ = std::move(kept_labels);
  out.graph_ = graph_.induced(keep);
  out.removals_.push_back(removed);
  return out;
}

namespace {

template <typename InVertex, typename Adjacent>
RingGraph build(GraphKind kind, const FiniteRing& R, std::optional<Ideal> ideal,
                InVertex&& in_vertex, Adjacent&& adjacent) {
  std::vector<Index> vertices;
  for (Index x = 0; x < R.order(); ++x)
    if (in_vertex(x)) vertices.push_back(x);
  SimpleGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return RingGraph(kind, R, std::move(ideal), std::move(vertices), std::move(g));
}

std::vector<ElementSet> all_scalings(const FiniteRing& R, const Ideal& I) {
  std::vector<ElementSet> out;
  out.reserve(R.order());
  for (Index x = 0; x < R.order(); ++x) out.push_back(scale_ideal(R, x, I).members());
  return out;
}

}  // namespace

RingGraph zero_divisor_graph(const FiniteRing& R) {
  const auto& zd = R.zero_divisors();
  return build(
      GraphKind::zero_div, R, std::nullopt,
      [&](Index x) { return x != R.zero() && zd.contains(x); },
      [&](Index x, Index y) { return R.mul(x, y) == R.zero(); });
}

RingGraph ideal_zero_divisor_graph(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_full()) throw Error(ErrorKind::domain, "ideal zero-divisor graph needs a proper ideal");
  return build(
      GraphKind::zero_div_ideal, R, I,
      [&](Index x) {
        if (I.contains(x)) return false;
        for (Index y = 0; y < R.order(); ++y)
          if (!I.contains(y) && I.contains(R.mul(x, y))) return true;
        return false;
      },
      [&](Index x, Index y) { return I.contains(R.mul(x, y)); });
}

RingGraph cozero_divisor_graph(const FiniteRing& R) {
  std::vector<ElementSet> principal;
  for (Index x = 0; x < R.order(); ++x) principal.push_back(principal_ideal(R, x).members());
  const auto& units = R.units();
  return build(
      GraphKind::cozero, R, std::nullopt,
      [&](Index x) { return x != R.zero() && !units.contains(x); },
      [&](Index x, Index y) { return !principal[y].contains(x) && !principal[x].contains(y); });
}

RingGraph ideal_cozero_divisor_graph(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  const Ideal ann = annihilator(R, I);
  const auto scaled = all_scalings(R, I);
  return build(
      GraphKind::cozero_ideal, R, I,
      [&](Index x) { return !ann.contains(x) && scaled[x] != I.members(); },
      [&](Index x, Index y) { return !scaled[y].contains(x) && !scaled[x].contains(y); });
}

RingGraph remove_vertices(const RingGraph& G, const ElementSet& S) { return G.without(S); }

std::string graph_name(const RingGraph& G) {
  std::string raw = std::string(to_string(G.kind())) + "_" + G.ring_name();
  if (G.ideal()) raw += "_" + ideal_spec_string(*G.ideal());
  for (const auto& removed : G.removals()) {
    raw += "_minus";
    removed.for_each([&](Index i) { raw += "_" + std::to_string(i); });
  }
  for (auto& c : raw)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) c = '_';
  return raw;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const RingGraph& G) {
  std::ostringstream out;
  out << "graph " << graph_name(G) << " {\n";
  for (std::size_t i = 0; i < G.vertices().size(); ++i) out << "  " << quoted(G.label(i)) << ";\n";
  for (auto [a, b] : G.graph().edges())
    out << "  " << quoted(G.label(a)) << " -- " << quoted(G.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_json(const RingGraph& G) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(G.kind());
  j["ring_spec"] = G.ring_name();
  if (G.ideal())
    j["ideal_members"] = G.ideal()->members().to_vector();
  else
    j["ideal_members"] = nullptr;
  j["vertices"] = G.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : G.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string emit_graph(const RingGraph& G, GraphFormat format) {
  return format == GraphFormat::dot ? emit_dot(G) : emit_json(G);
}

ExtendedNat distance(const RingGraph& G, Index a, Index b) {
  auto pa = G.position_of(a);
  auto pb = G.position_of(b);
  if (!pa || !pb) throw Error(ErrorKind::not_a_vertex, "distance: argument is not a vertex of the graph");
  return distance(G.graph(), *pa, *pb);
}

}  // namespace cozero
