#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cozero/element_set.hpp"

namespace cozero {

using RingId = std::uint64_t;

/// An ideal of a FiniteRing.  Identity is the member set; the generator list
/// is informational only.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingId ring, ElementSet members, std::vector<Index> generators)
      : ring_(ring), members_(std::move(members)), generators_(std::move(generators)) {}

  RingId ring_id() const { return ring_; }
  const ElementSet& members() const { return members_; }
  std::span<const Index> generators() const { return generators_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Index i) const { return members_.contains(i); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_full() const { return members_.count() == members_.universe(); }
  bool is_proper() const { return !is_full(); }
  bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }
  /// (size, ascending member list) order used by all_ideals.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b);

 private:
  RingId ring_ = 0;
  ElementSet members_;
  std::vector<Index> generators_;
};

class FiniteRing;

Ideal principal_ideal(const FiniteRing& R, Index x);
Ideal ideal_generated(const FiniteRing& R, std::span<const Index> gens);
/// {x*i : i in I}
Ideal scale_ideal(const FiniteRing& R, Index x, const Ideal& I);
Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J);
Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const FiniteRing& R, const Ideal& I, const Ideal& J);

/// Validates that `members` forms an ideal; throws not_an_ideal naming the
/// first closure failure.
Ideal ideal_from_members(const FiniteRing& R, const ElementSet& members);

/// Subgroup of (R,+) generated by `seed`.
ElementSet additive_closure(const FiniteRing& R, const ElementSet& seed);

Ideal annihilator(const FiniteRing& R, const Ideal& I);
bool is_prime_ideal(const FiniteRing& R, const Ideal& I);
Ideal radical_of_ideal(const FiniteRing& R, const Ideal& I);
std::vector<Ideal> minimal_primes_over(const FiniteRing& R, const Ideal& I);
bool is_radical_ideal(const FiniteRing& R, const Ideal& I);

/// True when the index set is closed under + and under multiplication by R.
bool is_ideal_set(const FiniteRing& R, const ElementSet& s);

std::string describe_members(const ElementSet& s);
/// "gen:a,b" when generators are known, else "elems:...".
std::string ideal_spec_string(const Ideal& I);

struct QuotientRing {
  std::shared_ptr<const FiniteRing> ring;
  /// Element of R -> coset index in `ring`.
  std::vector<Index> projection;
  /// Coset index -> least element index of R in that coset.
  std::vector<Index> representative;
};

QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I);

struct RingPredicates {
  bool is_local = false;
  bool is_field = false;
  bool is_reduced = false;
  bool is_zero_dimensional = false;
};

RingPredicates ring_predicates(const FiniteRing& R);

/// Parses gen:<...>, elems:<...>, zero, full, ann-of:<spec>.
Ideal parse_ideal_spec(const FiniteRing& R, std::string_view text);

}  // namespace cozero
