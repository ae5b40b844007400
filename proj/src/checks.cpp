#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cozero/classify.hpp"
#include "cozero/error.hpp"
#include "cozero/harness.hpp"
#include "cozero/ring_graph.hpp"

namespace cozero {

namespace {

struct IdealFacts {
  Ideal ideal;
  std::size_t ann = 0;
  RingGraph coz;
  ElementSet coz_vertices;
  ElementSet w;
  bool second = false;
  bool secondary = false;
  std::optional<Ideal> secondal;
  Ideal rad_ann;
  // Γ_{Ann(I)}(R); nullopt when Ann(I) = R, where the vertex rule selects nothing.
  std::optional<RingGraph> zero_of_ann;
};

bool contains_all(const ElementSet& big, const ElementSet& small) { return small.is_subset_of(big); }

std::string set_text(const ElementSet& s) { return describe_members(s); }

// Edges-and-vertices containment between graphs over the same ring.
bool is_subgraph(const RingGraph& small, const RingGraph& big) {
  if (!small.vertex_set().is_subset_of(big.vertex_set())) return false;
  for (auto [a, b] : small.edges())
    if (!big.adjacent(a, b)) return false;
  return true;
}

bool same_graph(const RingGraph& a, const RingGraph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

class RingFacts {
 public:
  RingFacts(RingPtr ring, const CorpusConfig& config)
      : ring_(std::move(ring)),
        ideals_(ring_->all_ideals()),
        predicates_(ring_predicates(*ring_)),
        jacobson_(ring_->jacobson_radical()),
        cozero_(cozero_divisor_graph(*ring_)),
        zero_div_(zero_divisor_graph(*ring_)) {
    const auto& R = *ring_;
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
      if (ideals_[i].is_zero()) zero_index_ = i;
      if (ideals_[i].is_full()) full_index_ = i;
    }
    for (const auto& I : ideals_) {
      Ideal ann = annihilator(R, I);
      RingGraph coz = ideal_cozero_divisor_graph(R, I);
      ElementSet coz_vertices = coz.vertex_set();
      std::optional<RingGraph> zero_of_ann;
      if (ann.is_proper()) zero_of_ann = ideal_zero_divisor_graph(R, ann);
      std::optional<Ideal> secondal;
      if (!I.is_zero()) secondal = is_secondal(R, I);
      facts_.push_back(IdealFacts{I, index_of(ann), std::move(coz), std::move(coz_vertices),
                                  w_set(R, I), is_second(R, I), is_secondary(R, I),
                                  std::move(secondal), radical_of_ideal(R, ann),
                                  std::move(zero_of_ann)});
    }
    if (config.include_full_ideal_quantifier) comultiplication_ = is_comultiplication_ring(R);
    zero_or_unit_ = (R.zero_divisors() | R.units()) == R.full_set();
    nonzero_jacobson_reachable_ = compute_nonzero_jacobson_condition();
  }

  const FiniteRing& ring() const { return *ring_; }
  std::size_t ideal_count() const { return ideals_.size(); }
  const Ideal& ideal(std::size_t i) const { return ideals_[i]; }
  const IdealFacts& facts(std::size_t i) const { return facts_[i]; }
  const Ideal& ann(std::size_t i) const { return ideals_[facts_[i].ann]; }
  const RingPredicates& predicates() const { return predicates_; }
  const Ideal& jacobson() const { return jacobson_; }
  std::size_t max_count() const { return ring_->maximal_ideals().size(); }
  const RingGraph& cozero() const { return cozero_; }
  const RingGraph& zero_div() const { return zero_div_; }
  bool comultiplication() const { return comultiplication_; }
  bool zero_or_unit() const { return zero_or_unit_; }
  bool nonzero_jacobson_reachable() const { return nonzero_jacobson_reachable_; }

  std::size_t index_of(const Ideal& I) const {
    for (std::size_t i = 0; i < ideals_.size(); ++i)
      if (ideals_[i] == I) return i;
    throw Error(ErrorKind::domain, "ideal not in lattice");
  }

  // principal[x] = xR
  const ElementSet& principal(Index x) const {
    if (principal_.empty())
      for (Index r = 0; r < ring_->order(); ++r)
        principal_.push_back(principal_ideal(*ring_, r).members());
    return principal_[x];
  }

 private:
  // For every nonzero a in J(R) there are m in Max(R) and b in m \ J(R) with
  // a not in bR.
  bool compute_nonzero_jacobson_condition() const {
    const auto& R = *ring_;
    bool all = true;
    jacobson_.members().for_each([&](Index a) {
      if (a == R.zero() || !all) return;
      bool found = false;
      for (const auto& m : R.maximal_ideals()) {
        (m.members() - jacobson_.members()).for_each([&](Index b) {
          if (!found && !principal(b).contains(a)) found = true;
        });
        if (found) break;
      }
      all = found;
    });
    return all;
  }

  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::vector<IdealFacts> facts_;
  RingPredicates predicates_;
  Ideal jacobson_;
  RingGraph cozero_;
  RingGraph zero_div_;
  std::size_t zero_index_ = 0;
  std::size_t full_index_ = 0;
  bool comultiplication_ = false;
  bool zero_or_unit_ = false;
  bool nonzero_jacobson_reachable_ = false;
  mutable std::vector<ElementSet> principal_;
};

struct Tuple {
  std::size_t i = 0;
  std::size_t j = 0;
  Index x = 0;
  Index y = 0;
};

enum class Space { ring, ideal, ideal_pair, ideal_elements };

using Detail = std::optional<std::string>;
using Hypothesis = std::function<bool(const RingFacts&, const Tuple&)>;
using Conclusion = std::function<Detail(const RingFacts&, const Tuple&)>;

struct Probe {
  Space space = Space::ideal;
  Hypothesis hypothesis;
  Conclusion conclusion;
};

struct CheckDef {
  std::string id;
  std::string statement;
  Probe main;
  std::optional<Probe> companion;
  std::string companion_statement;
  std::vector<std::string> notes;
};

Detail fail(const std::string& s) { return s; }
constexpr Detail holds = std::nullopt;

// Z_I(R) straight from the definition; empty when I = R.
ElementSet z_set_any(const FiniteRing& R, const Ideal& I) {
  if (I.is_full()) return R.empty_set();
  return z_ideal_set(R, I);
}

std::string ext(const ExtendedNat& e) { return e.to_string(); }

// Shared by C08/C11/C12/C14 and the vacuity audit.
bool proper_with_zero_ann(const RingFacts& f, const Tuple& t) {
  return f.ideal(t.i).is_proper() && f.ann(t.i).is_zero();
}

bool is_full_ideal(const RingFacts& f, const Tuple& t) { return f.ideal(t.i).is_full(); }

Detail subgraph_conclusion(const RingFacts& f, const Tuple& t) {
  if (!is_subgraph(f.cozero(), f.facts(t.i).coz)) return fail("cozero graph is not a subgraph");
  return holds;
}

Detail z_set_conclusion(const RingFacts& f, const Tuple& t) {
  const auto& R = f.ring();
  const auto& I = f.ideal(t.i);
  const auto& F = f.facts(t.i);
  const auto z = z_set_any(R, I);
  if (!contains_all(F.coz_vertices, z))
    return fail("Z_I(R) " + set_text(z) + " not inside V " + set_text(F.coz_vertices));
  // Complete-graph transfer under sqrt(I) = I and Z_I(R) = V.
  if (radical_of_ideal(R, I) == I && z == F.coz_vertices) {
    const bool zero_complete = I.is_full() ? true : partite_structure(ideal_zero_divisor_graph(R, I).graph()).complete;
    if (zero_complete && !partite_structure(F.coz.graph()).complete)
      return fail("Gamma_I complete but cozero graph not complete");
  }
  return holds;
}

Detail max_bound_by_colors(const RingFacts& f, const RingGraph& g) {
  const auto reduced = g.without(f.jacobson().members());
  const auto chi = chromatic_number(reduced.graph());
  const auto n = std::max<std::size_t>(1, chi);
  if (f.max_count() > n)
    return fail("|Max(R)| = " + std::to_string(f.max_count()) + " > " + std::to_string(n) +
                " colors of the graph minus J(R)");
  return holds;
}

std::vector<CheckDef> registry() {
  std::vector<CheckDef> checks;

  checks.push_back({"C01", "nonzero I: the ideal cozero graph is empty iff I is second",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return !f.ideal(t.i).is_zero(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& F = f.facts(t.i);
                       if (F.coz.empty() != F.second)
                         return fail(std::string("empty=") + (F.coz.empty() ? "true" : "false") +
                                     " second=" + (F.second ? "true" : "false"));
                       return holds;
                     }}});

  checks.push_back({"C02", "proper I: the ideal cozero graph minus J(R) is connected",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return f.ideal(t.i).is_proper(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto g = f.facts(t.i).coz.without(f.jacobson().members());
                       if (!is_connected(g.graph()))
                         return fail("minus J(R): " + std::to_string(components(g.graph()).size()) +
                                     " components");
                       return holds;
                     }}});

  checks.push_back({"C03", "non-local R, proper I: diam(ideal cozero graph minus J(R)) <= 2",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return !f.predicates().is_local && f.ideal(t.i).is_proper();
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto d = diameter(f.facts(t.i).coz.without(f.jacobson().members()).graph());
                       if (d > ExtendedNat(2)) return fail("diameter " + ext(d));
                       return holds;
                     }}});

  checks.push_back(
      {"C04",
       "non-local R, proper I, every nonzero a in J(R) escapes some bR with b in m \\ J(R): "
       "ideal cozero graph connected with diameter <= 3",
       {Space::ideal,
        [](const RingFacts& f, const Tuple& t) {
          return !f.predicates().is_local && f.ideal(t.i).is_proper() && f.nonzero_jacobson_reachable();
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& g = f.facts(t.i).coz.graph();
          const auto d = diameter(g);
          if (!is_connected(g))
            return fail("disconnected: " + std::to_string(components(g).size()) + " components");
          if (d > ExtendedNat(3)) return fail("diameter " + ext(d));
          return holds;
        }},
       std::nullopt,
       "",
       {"a ranges over the nonzero elements of J(R); a = 0 can never satisfy the "
        "condition because 0 lies in every bR"}});

  checks.push_back({"C05", "non-local R, proper I: girth(ideal cozero graph minus J(R)) <= 5 or infinite",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return !f.predicates().is_local && f.ideal(t.i).is_proper();
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto g = girth(f.facts(t.i).coz.without(f.jacobson().members()).graph());
                       if (g.is_finite() && g > ExtendedNat(5)) return fail("girth " + ext(g));
                       return holds;
                     }}});

  checks.push_back(
      {"C06",
       "nonzero I: V(cozero graph) inside V(ideal cozero graph) implies Ann(I) = 0 or R a field; "
       "Ann(I) = 0 implies the containment",
       {Space::ideal,
        [](const RingFacts& f, const Tuple& t) {
          if (f.ideal(t.i).is_zero()) return false;
          const bool contained = contains_all(f.facts(t.i).coz_vertices, f.cozero().vertex_set());
          return contained || f.ann(t.i).is_zero();
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const bool contained = contains_all(f.facts(t.i).coz_vertices, f.cozero().vertex_set());
          const bool ann_zero = f.ann(t.i).is_zero();
          if (contained && !(ann_zero || f.predicates().is_field))
            return fail("containment holds but Ann(I) = " + set_text(f.ann(t.i).members()));
          if (ann_zero && !contained) return fail("Ann(I) = 0 but containment fails");
          return holds;
        }}});

  checks.push_back({"C07", "proper I with Ann(I) = 0: the cozero graph is a subgraph of the ideal cozero graph",
                    {Space::ideal, proper_with_zero_ann, subgraph_conclusion},
                    Probe{Space::ideal, is_full_ideal,
                          [](const RingFacts& f, const Tuple& t) -> Detail {
                            if (!same_graph(f.cozero(), f.facts(t.i).coz))
                              return fail("ideal cozero graph at I = R differs from the cozero graph");
                            return holds;
                          }},
                    "I = R: the ideal cozero graph equals the cozero graph"});

  checks.push_back({"C08", "proper I with Ann(I) = 0 and |Max(R)| >= 3: girth(ideal cozero graph) = 3",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return proper_with_zero_ann(f, t) && f.max_count() >= 3;
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto g = girth(f.facts(t.i).coz.graph());
                       if (g != ExtendedNat(3)) return fail("girth " + ext(g));
                       return holds;
                     }},
                    Probe{Space::ring, [](const RingFacts& f, const Tuple&) { return f.max_count() >= 3; },
                          [](const RingFacts& f, const Tuple&) -> Detail {
                            const auto g = girth(f.cozero().graph());
                            if (g != ExtendedNat(3)) return fail("girth of cozero graph " + ext(g));
                            return holds;
                          }},
                    "|Max(R)| >= 3: girth(cozero graph) = 3"});

  checks.push_back({"C09",
                    "proper I with Ann(I) = 0: Z_I(R) inside V(ideal cozero graph); complete Gamma_I "
                    "transfers when sqrt(I) = I and Z_I(R) = V",
                    {Space::ideal, proper_with_zero_ann, z_set_conclusion},
                    Probe{Space::ideal, is_full_ideal, z_set_conclusion},
                    "I = R: the same containment and complete-graph transfer"});

  checks.push_back(
      {"C10",
       "ideal cozero graph complete bipartite: principal ideals of one part are totally ordered",
       {Space::ideal,
        [](const RingFacts& f, const Tuple& t) {
          return partite_structure(f.facts(t.i).coz.graph()).complete_bipartite.has_value();
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& G = f.facts(t.i).coz;
          const auto parts = *partite_structure(G.graph()).parts;
          for (const auto* part : {&parts.first, &parts.second})
            for (std::size_t a = 0; a < part->size(); ++a)
              for (std::size_t b = a + 1; b < part->size(); ++b) {
                const Index x = G.vertices()[(*part)[a]];
                const Index y = G.vertices()[(*part)[b]];
                const auto& xr = f.principal(x);
                const auto& yr = f.principal(y);
                if (!xr.is_subset_of(yr) && !yr.is_subset_of(xr))
                  return fail("xR, yR incomparable for x=" + std::to_string(x) + " y=" + std::to_string(y));
              }
          return holds;
        }}});

  checks.push_back({"C11",
                    "proper I with Ann(I) = 0: |Max(R)| <= n whenever the ideal cozero graph minus J(R) is "
                    "n-partite (n = max(1, chromatic number))",
                    {Space::ideal, proper_with_zero_ann,
                     [](const RingFacts& f, const Tuple& t) { return max_bound_by_colors(f, f.facts(t.i).coz); }},
                    Probe{Space::ideal, is_full_ideal,
                          [](const RingFacts& f, const Tuple& t) { return max_bound_by_colors(f, f.facts(t.i).coz); }},
                    "I = R: |Max(R)| <= max(1, chromatic number of the cozero graph minus J(R))"});

  checks.push_back(
      {"C12", "proper I with Ann(I) = 0: clique(ideal cozero graph) >= |Max(R)|",
       {Space::ideal, proper_with_zero_ann,
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto omega = clique_number(f.facts(t.i).coz.graph());
          if (omega < f.max_count()) return fail("clique " + std::to_string(omega));
          return holds;
        }},
       Probe{Space::ring, [](const RingFacts& f, const Tuple&) { return !f.predicates().is_field; },
             [](const RingFacts& f, const Tuple&) -> Detail {
               const auto omega = clique_number(f.cozero().graph());
               if (omega < f.max_count())
                 return fail("clique " + std::to_string(omega) + " < |Max(R)| = " + std::to_string(f.max_count()));
               return holds;
             }},
       "R not a field: clique(cozero graph) >= |Max(R)|",
       {"finite chromatic number forcing finitely many maximal ideals is structural for finite rings and "
        "is not tested",
        "the companion excludes fields: their cozero graph is empty with clique number 0 while |Max| = 1"}});

  checks.push_back(
      {"C13",
       "second S1, S2 with S1 + S2 = R: V(cozero graph) = (P1 \\ P2) u (P2 \\ P1) with Pi = Ann(Si), "
       "complete bipartite on those parts",
       {Space::ideal_pair,
        [](const RingFacts& f, const Tuple& t) {
          return f.facts(t.i).second && f.facts(t.j).second &&
                 ideal_sum(f.ring(), f.ideal(t.i), f.ideal(t.j)).is_full();
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& p1 = f.ann(t.i).members();
          const auto& p2 = f.ann(t.j).members();
          const auto a = p1 - p2;
          const auto b = p2 - p1;
          const auto& G = f.cozero();
          if (G.vertex_set() != (a | b))
            return fail("V = " + set_text(G.vertex_set()) + " but parts give " + set_text(a | b));
          bool ok = true;
          std::string why;
          auto check_pairs = [&](const ElementSet& s, const ElementSet& u, bool want) {
            s.for_each([&](Index x) {
              u.for_each([&](Index y) {
                if (ok && x != y && G.adjacent(x, y) != want) {
                  ok = false;
                  why = std::to_string(x) + "," + std::to_string(y) + (want ? " not adjacent" : " adjacent");
                }
              });
            });
          };
          check_pairs(a, b, true);
          check_pairs(a, a, false);
          check_pairs(b, b, false);
          if (!ok) return fail("not complete bipartite on those parts: " + why);
          return holds;
        }}});

  checks.push_back({"C14", "proper I with Ann(I) = 0 and |Max(R)| >= 5: the ideal cozero graph is not planar",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return proper_with_zero_ann(f, t) && f.max_count() >= 5;
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       if (is_planar(f.facts(t.i).coz.graph())) return fail("planar");
                       return holds;
                     }},
                    Probe{Space::ring, [](const RingFacts& f, const Tuple&) { return f.max_count() >= 5; },
                          [](const RingFacts& f, const Tuple&) -> Detail {
                            if (is_planar(f.cozero().graph())) return fail("cozero graph planar");
                            return holds;
                          }},
                    "|Max(R)| >= 5: the cozero graph is not planar"});

  checks.push_back({"C15",
                    "proper I: V(Gamma_Ann(I)) inside V(ideal cozero graph); for reduced R the whole graph is "
                    "a subgraph",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return f.ideal(t.i).is_proper(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& F = f.facts(t.i);
                       if (!F.zero_of_ann) return holds;
                       if (!contains_all(F.coz_vertices, F.zero_of_ann->vertex_set()))
                         return fail("vertex containment fails");
                       if (f.predicates().is_reduced && !is_subgraph(*F.zero_of_ann, F.coz))
                         return fail("reduced ring but edges missing");
                       return holds;
                     }}});

  checks.push_back(
      {"C16",
       "proper I, x not in Ann(I): x in V(ideal cozero graph) iff x + Ann(I) in V(cozero graph of "
       "R/Ann(I)); quotient adjacency lifts",
       {Space::ideal,
        [](const RingFacts& f, const Tuple& t) { return f.ideal(t.i).is_proper() && !f.ideal(t.i).is_zero(); },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& R = f.ring();
          const auto& A = f.ann(t.i);
          const auto& F = f.facts(t.i);
          const auto Q = quotient_ring(R, A);
          const auto QG = cozero_divisor_graph(*Q.ring);
          for (Index x = 0; x < R.order(); ++x) {
            if (A.contains(x)) continue;
            if (F.coz.has_vertex(x) != QG.has_vertex(Q.projection[x]))
              return fail("vertex correspondence fails at x=" + std::to_string(x));
            for (Index y = x + 1; y < R.order(); ++y) {
              if (A.contains(y)) continue;
              if (Q.projection[x] != Q.projection[y] && QG.adjacent(Q.projection[x], Q.projection[y]) &&
                  !F.coz.adjacent(x, y))
                return fail("quotient edge does not lift at " + std::to_string(x) + "," + std::to_string(y));
            }
          }
          return holds;
        }}});

  checks.push_back(
      {"C17",
       "proper I with R comultiplication or R/Ann(I) = Z u U: V(ideal cozero graph) = V(Gamma_Ann(I))",
       {Space::ideal,
        [](const RingFacts& f, const Tuple& t) {
          const auto& I = f.ideal(t.i);
          if (!I.is_proper()) return false;
          if (f.comultiplication()) return true;
          if (I.is_zero()) return false;
          const auto Q = quotient_ring(f.ring(), f.ann(t.i));
          return (Q.ring->zero_divisors() | Q.ring->units()) == Q.ring->full_set();
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& F = f.facts(t.i);
          const auto zv = F.zero_of_ann ? F.zero_of_ann->vertex_set() : f.ring().empty_set();
          if (zv != F.coz_vertices)
            return fail("V = " + set_text(F.coz_vertices) + " vs " + set_text(zv));
          return holds;
        }}});

  checks.push_back({"C18", "nonzero I inside J, dim(R) = 0: V(cozero graph of I) inside V(cozero graph of J)",
                    {Space::ideal_pair,
                     [](const RingFacts& f, const Tuple& t) {
                       return !f.ideal(t.i).is_zero() && f.ideal(t.i).is_subset_of(f.ideal(t.j)) &&
                              f.predicates().is_zero_dimensional;
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       if (!contains_all(f.facts(t.j).coz_vertices, f.facts(t.i).coz_vertices))
                         return fail("vertex containment fails");
                       return holds;
                     }}});

  checks.push_back({"C19",
                    "nonzero I, R = Z(R) u U(R), V(ideal cozero graph) = V(cozero graph): Ann(I) = 0",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return !f.ideal(t.i).is_zero() && f.zero_or_unit() &&
                              f.facts(t.i).coz_vertices == f.cozero().vertex_set();
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       if (!f.ann(t.i).is_zero()) return fail("Ann(I) = " + set_text(f.ann(t.i).members()));
                       return holds;
                     }}});

  checks.push_back({"C20",
                    "Gamma_0 = Gamma; ideal cozero graph at I = R is the cozero graph; nonzero proper I is prime "
                    "iff Gamma_I is empty",
                    {Space::ideal, [](const RingFacts&, const Tuple&) { return true; },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& R = f.ring();
                       const auto& I = f.ideal(t.i);
                       if (I.is_zero() && !same_graph(ideal_zero_divisor_graph(R, I), f.zero_div()))
                         return fail("Gamma_0 differs from Gamma");
                       if (I.is_full() && !same_graph(f.facts(t.i).coz, f.cozero()))
                         return fail("cozero graph at I = R differs");
                       if (I.is_proper() && !I.is_zero() &&
                           is_prime_ideal(R, I) != ideal_zero_divisor_graph(R, I).empty())
                         return fail("primality and emptiness of Gamma_I disagree");
                       return holds;
                     }}});

  checks.push_back(
      {"C21",
       "nonzero I: Ann(I) inside W(I); preimage of Z(R/Ann(I)) inside W(I); V = W(I) \\ Ann(I); "
       "minimal primes over a radical Ann(I) inside W(I)",
       {Space::ideal, [](const RingFacts& f, const Tuple& t) { return !f.ideal(t.i).is_zero(); },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& R = f.ring();
          const auto& F = f.facts(t.i);
          const auto& A = f.ann(t.i);
          if (!contains_all(F.w, A.members())) return fail("(a) Ann(I) not inside W(I)");
          const auto Q = quotient_ring(R, A);
          ElementSet pre(R.order());
          for (Index x = 0; x < R.order(); ++x)
            if (Q.ring->zero_divisors().contains(Q.projection[x])) pre.insert(x);
          if (!contains_all(F.w, pre)) return fail("(b) preimage " + set_text(pre) + " not inside W(I)");
          if (F.coz_vertices != (F.w - A.members())) return fail("(c) V != W(I) \\ Ann(I)");
          if (is_radical_ideal(R, A))
            for (const auto& P : minimal_primes_over(R, A))
              if (!contains_all(F.w, P.members())) return fail("(d) minimal prime " + set_text(P.members()));
          return holds;
        }}});

  checks.push_back(
      {"C22", "nonzero I, prime P containing Ann(I): I is P-secondal iff V(ideal cozero graph) = P \\ Ann(I)",
       {Space::ideal_pair,
        [](const RingFacts& f, const Tuple& t) {
          const auto& P = f.ideal(t.j);
          return !f.ideal(t.i).is_zero() && P.is_proper() && is_prime_ideal(f.ring(), P) &&
                 f.ann(t.i).is_subset_of(P);
        },
        [](const RingFacts& f, const Tuple& t) -> Detail {
          const auto& F = f.facts(t.i);
          const auto& P = f.ideal(t.j);
          const bool p_secondal = F.secondal && *F.secondal == P;
          const bool matches = F.coz_vertices == (P.members() - f.ann(t.i).members());
          if (p_secondal != matches)
            return fail(std::string("P-secondal=") + (p_secondal ? "true" : "false") +
                        " V=P\\Ann=" + (matches ? "true" : "false"));
          return holds;
        }}});

  checks.push_back({"C23", "nonzero I: I secondal iff V(ideal cozero graph) u Ann(I) is an ideal, then prime",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return !f.ideal(t.i).is_zero(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& R = f.ring();
                       const auto& F = f.facts(t.i);
                       const auto joined = F.coz_vertices | f.ann(t.i).members();
                       const bool ideal = is_ideal_set(R, joined);
                       if (F.secondal.has_value() != ideal) return fail("secondal and ideal-ness disagree");
                       if (ideal && (joined == R.full_set() ||
                                     !is_prime_ideal(R, Ideal(R.id(), joined, {}))))
                         return fail("V u Ann(I) is an ideal but not prime");
                       return holds;
                     }}});

  checks.push_back({"C24", "I, J both P-secondal: equal vertex sets iff Ann(I) = Ann(J)",
                    {Space::ideal_pair,
                     [](const RingFacts& f, const Tuple& t) {
                       const auto& a = f.facts(t.i).secondal;
                       const auto& b = f.facts(t.j).secondal;
                       return a && b && *a == *b;
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const bool same_v = f.facts(t.i).coz_vertices == f.facts(t.j).coz_vertices;
                       const bool same_ann = f.ann(t.i) == f.ann(t.j);
                       if (same_v != same_ann) return fail("vertex equality and annihilator equality disagree");
                       return holds;
                     }}});

  checks.push_back({"C25", "secondary I: sqrt(Ann(I)) = W(I)",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return f.facts(t.i).secondary; },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& F = f.facts(t.i);
                       if (F.rad_ann.members() != F.w)
                         return fail("sqrt(Ann) = " + set_text(F.rad_ann.members()) + " W = " + set_text(F.w));
                       return holds;
                     }}});

  checks.push_back({"C26", "nonzero I: secondary iff V(ideal cozero graph) = sqrt(Ann(I)) \\ Ann(I)",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return !f.ideal(t.i).is_zero(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& F = f.facts(t.i);
                       const bool matches = F.coz_vertices == (F.rad_ann.members() - f.ann(t.i).members());
                       if (matches != F.secondary) return fail("secondary and vertex identity disagree");
                       return holds;
                     }}});

  checks.push_back({"C27", "nonzero non-secondal I: some x, y in V give <x,y> second to I",
                    {Space::ideal,
                     [](const RingFacts& f, const Tuple& t) {
                       return !f.ideal(t.i).is_zero() && !f.facts(t.i).secondal.has_value();
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       if (!second_to_witness(f.ring(), f.ideal(t.i))) return fail("no witness pair");
                       return holds;
                     }}});

  checks.push_back({"C28",
                    "distinct x, y in sqrt(Ann(I)) \\ Ann(I) with xy not in Ann(I): <x,y> is not second to I",
                    {Space::ideal_elements,
                     [](const RingFacts& f, const Tuple& t) {
                       const auto& A = f.ann(t.i);
                       const auto& rad = f.facts(t.i).rad_ann;
                       auto in_band = [&](Index z) { return rad.contains(z) && !A.contains(z); };
                       return in_band(t.x) && in_band(t.y) && !A.contains(f.ring().mul(t.x, t.y));
                     },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const Index gens[] = {t.x, t.y};
                       if (is_second_to(f.ring(), ideal_generated(f.ring(), gens), f.ideal(t.i)))
                         return fail("<" + std::to_string(t.x) + "," + std::to_string(t.y) + "> is second to I");
                       return holds;
                     }}});

  checks.push_back({"C29", "secondary I: diam(Gamma_Ann(I)) <= 2",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return f.facts(t.i).secondary; },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       const auto& F = f.facts(t.i);
                       const auto d = F.zero_of_ann ? diameter(F.zero_of_ann->graph()) : ExtendedNat(0);
                       if (d > ExtendedNat(2)) return fail("diameter " + ext(d));
                       return holds;
                     }}});

  checks.push_back({"C30", "proper I: Ann(I) != 0 (finite rings)",
                    {Space::ideal, [](const RingFacts& f, const Tuple& t) { return f.ideal(t.i).is_proper(); },
                     [](const RingFacts& f, const Tuple& t) -> Detail {
                       if (f.ann(t.i).is_zero()) return fail("proper ideal with zero annihilator");
                       return holds;
                     }}});

  return checks;
}

std::vector<std::vector<Index>> tuple_ideals(const RingFacts& f, Space space, const Tuple& t) {
  switch (space) {
    case Space::ring: return {};
    case Space::ideal:
    case Space::ideal_elements: return {f.ideal(t.i).members().to_vector()};
    case Space::ideal_pair: return {f.ideal(t.i).members().to_vector(), f.ideal(t.j).members().to_vector()};
  }
  return {};
}

void run_probe(const Probe& probe, const std::vector<RingFacts>& rings, const CorpusConfig& config,
               Tally& tally, std::size_t& skipped_rings) {
  auto visit = [&](const RingFacts& f, const Tuple& t) {
    ++tally.examined;
    if (!probe.hypothesis(f, t)) return;
    ++tally.hypothesis_hits;
    if (auto detail = probe.conclusion(f, t)) {
      std::string text = *detail;
      if (probe.space == Space::ideal_elements)
        text = "x=" + std::to_string(t.x) + " y=" + std::to_string(t.y) + ": " + text;
      tally.violations.push_back({f.ring().name(), tuple_ideals(f, probe.space, t), std::move(text)});
    }
  };
  for (const auto& f : rings) {
    const auto n = f.ideal_count();
    switch (probe.space) {
      case Space::ring:
        visit(f, Tuple{});
        break;
      case Space::ideal:
        for (std::size_t i = 0; i < n; ++i) visit(f, Tuple{i});
        break;
      case Space::ideal_pair:
        if (f.ring().order() > config.pair_order_cap) {
          ++skipped_rings;
          break;
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) visit(f, Tuple{i, j});
        break;
      case Space::ideal_elements:
        for (std::size_t i = 0; i < n; ++i)
          for (Index x = 0; x < f.ring().order(); ++x)
            for (Index y = x + 1; y < f.ring().order(); ++y) visit(f, Tuple{i, 0, x, y});
        break;
    }
  }
}

CheckResult run_check(const CheckDef& def, const std::vector<RingFacts>& rings, const CorpusConfig& config) {
  CheckResult r;
  r.id = def.id;
  r.statement = def.statement;
  r.notes = def.notes;
  std::size_t skipped = 0;
  run_probe(def.main, rings, config, r.tally, skipped);
  r.vacuous = r.tally.hypothesis_hits == 0;
  if (def.companion) {
    CompanionResult c;
    c.statement = def.companion_statement;
    run_probe(*def.companion, rings, config, c.tally, skipped);
    r.companion = std::move(c);
  }
  if (skipped > 0)
    r.notes.push_back(std::to_string(skipped) + " ring(s) above the pair-space order cap of " +
                      std::to_string(config.pair_order_cap) + " were not examined");
  return r;
}

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 30; ++i) ids.push_back((i < 10 ? "C0" : "C") + std::to_string(i));
  return ids;
}

std::vector<std::string> annihilator_free_check_ids() { return {"C07", "C08", "C09", "C11", "C12", "C14"}; }

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

VerificationReport run_checks(const std::vector<RingPtr>& corpus, const std::vector<std::string>& check_ids,
                              const CorpusConfig& config) {
  if (corpus.empty()) throw Error(ErrorKind::invalid_spec, "run_checks: empty corpus");
  const auto defs = registry();
  std::map<std::string, const CheckDef*> by_id;
  for (const auto& d : defs) by_id[d.id] = &d;
  std::vector<std::string> ids = check_ids;
  for (const auto& id : ids)
    if (!by_id.count(id)) throw Error(ErrorKind::parse, "unknown check id '" + id + "'");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<RingFacts> rings;
  rings.reserve(corpus.size());
  for (const auto& R : corpus) rings.emplace_back(R, config);

  VerificationReport report;
  report.config = config;
  for (const auto& R : corpus) report.corpus.push_back(R->name());
  std::map<std::string, CheckResult> done;
  for (const auto& id : ids) done.emplace(id, run_check(*by_id[id], rings, config));

  if (auto it = done.find("C30"); it != done.end()) {
    for (const auto& id : annihilator_free_check_ids()) {
      auto found = done.find(id);
      const CheckResult audited = found != done.end() ? found->second : run_check(*by_id[id], rings, config);
      if (audited.vacuous) it->second.vacuous_checks.push_back(id);
    }
  }

  for (auto& [id, result] : done) {
    report.overall_pass = report.overall_pass && result.passed();
    report.results.push_back(std::move(result));
  }
  return report;
}

namespace {

nlohmann::ordered_json tally_json(const Tally& t) {
  nlohmann::ordered_json j;
  j["examined"] = t.examined;
  j["hypothesis_hits"] = t.hypothesis_hits;
  auto v = nlohmann::ordered_json::array();
  for (const auto& x : t.violations) {
    nlohmann::ordered_json e;
    e["ring"] = x.ring;
    e["ideals"] = x.ideals;
    e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  auto& c = j["config"];
  auto families = nlohmann::ordered_json::array();
  if (report.config.cyclic) families.push_back("cyclic");
  if (report.config.products) families.push_back("products");
  if (report.config.galois) families.push_back("galois");
  c["families"] = std::move(families);
  auto custom = nlohmann::ordered_json::array();
  for (const auto& s : report.config.custom) custom.push_back(to_string(s));
  c["custom"] = std::move(custom);
  c["max_order"] = report.config.max_order;
  c["max_cyclic_n"] = report.config.max_cyclic_n;
  c["include_full_ideal_quantifier"] = report.config.include_full_ideal_quantifier;
  c["pair_order_cap"] = report.config.pair_order_cap;
  c["corpus_size"] = report.corpus.size();

  auto results = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["paper_ref"] = r.statement;
    auto t = tally_json(r.tally);
    e["examined"] = t["examined"];
    e["hypothesis_hits"] = t["hypothesis_hits"];
    e["vacuous"] = r.vacuous;
    e["violations"] = t["violations"];
    if (r.companion) {
      auto comp = tally_json(r.companion->tally);
      comp["statement"] = r.companion->statement;
      e["companion"] = std::move(comp);
    }
    if (r.id == "C30") e["vacuous_checks"] = r.vacuous_checks;
    if (!r.notes.empty()) e["notes"] = r.notes;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["overall_pass"] = report.overall_pass;
  return j;
}

}  // namespace cozero
