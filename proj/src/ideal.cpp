#include "cozero/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cozero/error.hpp"
#include "cozero/finite_ring.hpp"

namespace cozero {

std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.members().to_vector() <=> b.members().to_vector();
}

ElementSet additive_closure(const FiniteRing& R, const ElementSet& seed) {
  const auto gens = seed.to_vector();
  ElementSet out(R.order());
  std::vector<Index> frontier{R.zero()};
  out.insert(R.zero());
  while (!frontier.empty()) {
    Index x = frontier.back();
    frontier.pop_back();
    for (Index g : gens) {
      Index y = R.add(x, g);
      if (!out.contains(y)) {
        out.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

Ideal principal_ideal(const FiniteRing& R, Index x) {
  ElementSet m(R.order());
  for (Index r = 0; r < R.order(); ++r) m.insert(R.mul(x, r));
  return Ideal(R.id(), std::move(m), {x});
}

Ideal ideal_generated(const FiniteRing& R, std::span<const Index> gens) {
  if (gens.empty()) throw Error(ErrorKind::domain, "ideal_generated: empty generator list");
  ElementSet seed(R.order());
  for (Index g : gens) {
    if (g >= R.order()) throw Error(ErrorKind::domain, "generator out of range");
    seed |= principal_ideal(R, g).members();
  }
  return Ideal(R.id(), additive_closure(R, seed), std::vector<Index>(gens.begin(), gens.end()));
}

Ideal scale_ideal(const FiniteRing& R, Index x, const Ideal& I) {
  R.require_same_ring(I);
  ElementSet m(R.order());
  I.members().for_each([&](Index i) { m.insert(R.mul(x, i)); });
  std::vector<Index> gens;
  for (Index g : I.generators()) gens.push_back(R.mul(x, g));
#ifndef NDEBUG
  if (!is_ideal_set(R, m)) throw Error(ErrorKind::not_an_ideal, "scale_ideal produced a non-ideal");
#endif
  return Ideal(R.id(), std::move(m), std::move(gens));
}

Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  R.require_same_ring(I);
  R.require_same_ring(J);
  ElementSet m(R.order());
  const auto js = J.members().to_vector();
  I.members().for_each([&](Index i) {
    for (Index j : js) m.insert(R.add(i, j));
  });
  std::vector<Index> gens(I.generators().begin(), I.generators().end());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(R.id(), std::move(m), std::move(gens));
}

Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  R.require_same_ring(I);
  R.require_same_ring(J);
  ElementSet products(R.order());
  const auto js = J.members().to_vector();
  I.members().for_each([&](Index i) {
    for (Index j : js) products.insert(R.mul(i, j));
  });
  std::vector<Index> gens;
  for (Index a : I.generators())
    for (Index b : J.generators()) gens.push_back(R.mul(a, b));
  return Ideal(R.id(), additive_closure(R, products), std::move(gens));
}

Ideal ideal_intersection(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  R.require_same_ring(I);
  R.require_same_ring(J);
  return Ideal(R.id(), I.members() & J.members(), {});
}

bool is_ideal_set(const FiniteRing& R, const ElementSet& s) {
  if (!s.contains(R.zero())) return false;
  const auto v = s.to_vector();
  for (Index a : v) {
    for (Index b : v)
      if (!s.contains(R.add(a, b))) return false;
    for (Index r = 0; r < R.order(); ++r)
      if (!s.contains(R.mul(r, a))) return false;
  }
  return true;
}

Ideal ideal_from_members(const FiniteRing& R, const ElementSet& members) {
  if (members.universe() != R.order())
    throw Error(ErrorKind::ring_mismatch, "member set has the wrong universe");
  if (!members.contains(R.zero()))
    throw Error(ErrorKind::not_an_ideal, "not an ideal: missing zero " + R.label(R.zero()));
  const auto v = members.to_vector();
  for (Index r = 0; r < R.order(); ++r)
    for (Index a : v)
      if (!members.contains(R.mul(r, a)))
        throw Error(ErrorKind::not_an_ideal,
                    "not an ideal: not closed under multiplication: " + R.label(r) + "*" +
                        R.label(a) + "=" + R.label(R.mul(r, a)) + " not in set");
  for (Index a : v)
    for (Index b : v)
      if (!members.contains(R.add(a, b)))
        throw Error(ErrorKind::not_an_ideal,
                    "not an ideal: not closed under addition: " + R.label(a) + "+" +
                        R.label(b) + "=" + R.label(R.add(a, b)) + " not in set");
  return Ideal(R.id(), members, {});
}

Ideal annihilator(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  const auto members = I.members().to_vector();
  ElementSet m(R.order());
  for (Index r = 0; r < R.order(); ++r) {
    bool kills = true;
    for (Index i : members)
      if (R.mul(r, i) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) m.insert(r);
  }
  return Ideal(R.id(), std::move(m), {});
}

bool is_prime_ideal(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_full()) throw Error(ErrorKind::domain, "prime ideals are proper; got I = R");
  for (Index a = 0; a < R.order(); ++a) {
    if (I.contains(a)) continue;
    for (Index b = a; b < R.order(); ++b)
      if (!I.contains(b) && I.contains(R.mul(a, b))) return false;
  }
  return true;
}

Ideal radical_of_ideal(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  ElementSet m(R.order());
  for (Index x = 0; x < R.order(); ++x) {
    Index p = x;
    for (std::size_t k = 1; k <= R.order(); ++k) {
      if (I.contains(p)) {
        m.insert(x);
        break;
      }
      p = R.mul(p, x);
    }
  }
  return Ideal(R.id(), std::move(m), {});
}

bool is_radical_ideal(const FiniteRing& R, const Ideal& I) {
  return radical_of_ideal(R, I) == I;
}

std::vector<Ideal> minimal_primes_over(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_full()) throw Error(ErrorKind::domain, "minimal primes need a proper ideal");
  std::vector<Ideal> over;
  for (const auto& P : R.prime_ideals())
    if (I.is_subset_of(P)) over.push_back(P);
  std::vector<Ideal> out;
  for (const auto& P : over) {
    bool minimal = true;
    for (const auto& Q : over)
      if (Q != P && Q.is_subset_of(P)) minimal = false;
    if (minimal) out.push_back(P);
  }
  return out;
}

std::string describe_members(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out + "}";
}

std::string ideal_spec_string(const Ideal& I) {
  std::string out;
  if (!I.generators().empty()) {
    out = "gen:";
    for (std::size_t i = 0; i < I.generators().size(); ++i)
      out += (i ? "," : "") + std::to_string(I.generators()[i]);
    return out;
  }
  out = "elems:";
  bool first = true;
  I.members().for_each([&](Index i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out;
}

const std::vector<Ideal>& FiniteRing::all_ideals(std::size_t cap) const {
  if (order_ > cap)
    throw Error(ErrorKind::cap_exceeded, "all_ideals: ring order " + std::to_string(order_) +
                                             " exceeds cap " + std::to_string(cap));
  std::call_once(cache_->ideals_once, [this] {
    std::set<ElementSet> seen;
    std::vector<Ideal> found;
    for (Index x = 0; x < order_; ++x) {
      Ideal p = principal_ideal(*this, x);
      if (seen.insert(p.members()).second) found.push_back(std::move(p));
    }
    // Close under pairwise sums; newly found ideals are paired with all others.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Ideal s = ideal_sum(*this, found[j], found[i]);
        if (seen.insert(s.members()).second) found.push_back(std::move(s));
      }
    }
    std::sort(found.begin(), found.end());
    cache_->ideals = std::move(found);
  });
  return cache_->ideals;
}

const std::vector<Ideal>& FiniteRing::maximal_ideals() const {
  std::call_once(cache_->maximal_once, [this] {
    std::vector<Ideal> proper;
    for (const auto& I : all_ideals())
      if (I.is_proper()) proper.push_back(I);
    std::vector<Ideal> out;
    for (const auto& I : proper) {
      bool maximal = true;
      for (const auto& K : proper)
        if (K != I && I.is_subset_of(K)) maximal = false;
      if (maximal) out.push_back(I);
    }
    cache_->maximal = std::move(out);
  });
  return cache_->maximal;
}

const std::vector<Ideal>& FiniteRing::prime_ideals() const {
  std::call_once(cache_->prime_once, [this] {
    std::vector<Ideal> out;
    for (const auto& I : all_ideals())
      if (I.is_proper() && is_prime_ideal(*this, I)) out.push_back(I);
    cache_->primes = std::move(out);
  });
  return cache_->primes;
}

const Ideal& FiniteRing::jacobson_radical() const {
  std::call_once(cache_->jacobson_once, [this] {
    ElementSet m = full_set();
    for (const auto& M : maximal_ideals()) m &= M.members();
    cache_->jacobson = {Ideal(id_, std::move(m), {})};
  });
  return cache_->jacobson.front();
}

QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_full()) throw Error(ErrorKind::domain, "quotient by R gives the trivial ring");
  const std::size_t n = R.order();
  std::vector<Index> rep_of(n, static_cast<Index>(n));
  std::vector<Index> reps;
  const auto members = I.members().to_vector();
  for (Index x = 0; x < n; ++x) {
    if (rep_of[x] != n) continue;
    for (Index i : members) rep_of[R.add(x, i)] = x;
    reps.push_back(x);
  }
  const std::size_t q = reps.size();
  std::vector<Index> coset_of_rep(n, 0);
  for (Index c = 0; c < q; ++c) coset_of_rep[reps[c]] = c;
  QuotientRing out;
  out.projection.resize(n);
  for (Index x = 0; x < n; ++x) out.projection[x] = coset_of_rep[rep_of[x]];
  out.representative = reps;

  std::vector<std::string> labels(q);
  std::vector<Index> add(q * q), mul(q * q);
  for (Index a = 0; a < q; ++a) {
    labels[a] = "[" + R.label(reps[a]) + "]";
    for (Index b = 0; b < q; ++b) {
      add[a * q + b] = out.projection[R.add(reps[a], reps[b])];
      mul[a * q + b] = out.projection[R.mul(reps[a], reps[b])];
    }
  }
  out.ring = FiniteRing::from_tables(R.name() + "/" + describe_members(I.members()),
                                     std::move(labels), std::move(add), std::move(mul));
  return out;
}

RingPredicates ring_predicates(const FiniteRing& R) {
  RingPredicates p;
  const auto& maxes = R.maximal_ideals();
  p.is_local = maxes.size() == 1;
  p.is_field = false;
  for (const auto& M : maxes) p.is_field = p.is_field || M.is_zero();
  p.is_reduced = radical_of_ideal(R, R.zero_ideal()).is_zero();
  p.is_zero_dimensional = true;
  for (const auto& P : R.prime_ideals()) {
    bool maximal = false;
    for (const auto& M : maxes) maximal = maximal || M == P;
    p.is_zero_dimensional = p.is_zero_dimensional && maximal;
  }
  return p;
}

namespace {

std::vector<Index> parse_index_list(const FiniteRing& R, std::string_view text) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos);
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw Error(ErrorKind::parse, "ideal spec: bad element index '" + std::string(piece) + "'");
    if (v >= R.order())
      throw Error(ErrorKind::parse, "ideal spec: element index " + std::to_string(v) +
                                        " out of range for " + R.name());
    out.push_back(static_cast<Index>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Ideal parse_ideal_spec(const FiniteRing& R, std::string_view text) {
  if (text == "zero") return R.zero_ideal();
  if (text == "full") return R.unit_ideal();
  if (text.substr(0, 4) == "gen:") {
    auto gens = parse_index_list(R, text.substr(4));
    return ideal_generated(R, gens);
  }
  if (text.substr(0, 6) == "elems:") {
    auto elems = parse_index_list(R, text.substr(6));
    return ideal_from_members(R, ElementSet::from_range(R.order(), elems));
  }
  if (text.substr(0, 7) == "ann-of:") return annihilator(R, parse_ideal_spec(R, text.substr(7)));
  throw Error(ErrorKind::parse, "ideal spec: unknown form '" + std::string(text) + "'");
}

}  // namespace cozero
