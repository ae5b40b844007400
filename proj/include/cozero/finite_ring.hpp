#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "cozero/element_set.hpp"
#include "cozero/ideal.hpp"
#include "cozero/ring_spec.hpp"

namespace cozero {

inline constexpr std::size_t kDefaultOrderCap = 256;

/// An element tagged with the ring it belongs to.
struct Element {
  RingId ring = 0;
  Index idx = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Dense-table model of a finite commutative ring with 1 != 0.
///
/// Instances are immutable once built; derived structure (units, ideal
/// lattice, maximal ideals, ...) is computed on first request under a
/// once_flag, so a ring can be shared across threads.
class FiniteRing {
 public:
  /// Validates the tables exhaustively (O(n^3)).  zero and one are located
  /// from the tables; throws Error{axiom_violation} naming the failed axiom
  /// and a witness.
  static std::shared_ptr<const FiniteRing> from_tables(
      std::string name, std::vector<std::string> labels,
      std::vector<Index> add_table, std::vector<Index> mul_table);

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  RingId id() const { return id_; }
  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::string& label(Index i) const { return labels_[i]; }
  std::span<const std::string> labels() const { return labels_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }

  Index add(Index a, Index b) const { return add_[a * order_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * order_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index pow(Index a, std::uint64_t e) const;

  Element element(Index i) const;
  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const { return ElementSet::full(order_); }

  const ElementSet& units() const;
  const ElementSet& zero_divisors() const;
  bool is_unit(Index a) const { return units().contains(a); }

  /// Every ideal, ascending by (size, members).  Throws cap_exceeded when
  /// order() > cap.
  const std::vector<Ideal>& all_ideals(std::size_t cap = kDefaultOrderCap) const;
  const std::vector<Ideal>& maximal_ideals() const;
  const std::vector<Ideal>& prime_ideals() const;
  const Ideal& jacobson_radical() const;

  Ideal zero_ideal() const;
  Ideal unit_ideal() const;

  void require_same_ring(const Ideal& ideal) const;
  void require_same_ring(Element e) const;

 private:
  FiniteRing() = default;

  RingId id_ = 0;
  std::size_t order_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  Index one_ = 0;

  struct Caches {
    std::once_flag units_once;
    ElementSet units;
    std::once_flag zd_once;
    ElementSet zero_divisors;
    std::once_flag ideals_once;
    std::vector<Ideal> ideals;
    std::once_flag maximal_once;
    std::vector<Ideal> maximal;
    std::once_flag prime_once;
    std::vector<Ideal> primes;
    std::once_flag jacobson_once;
    std::vector<Ideal> jacobson;  // holds exactly one ideal once filled
  };
  mutable std::unique_ptr<Caches> cache_ = std::make_unique<Caches>();
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Builds and validates the ring a spec describes.
RingPtr build_ring(const RingSpec& spec, std::size_t order_cap = kDefaultOrderCap);
RingPtr build_ring(std::string_view spec_text,
                   std::size_t order_cap = kDefaultOrderCap);

/// Loads `order` then order*order add rows then order*order mul rows.
RingPtr load_table_ring(const std::string& path, std::size_t order_cap);

}  // namespace cozero
