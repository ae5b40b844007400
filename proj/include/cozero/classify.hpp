#pragma once

#include <optional>
#include <utility>

#include "cozero/finite_ring.hpp"

namespace cozero {

/// W(I) = {a : aI != I}.
ElementSet w_set(const FiniteRing& R, const Ideal& I);

/// I != 0 and rI ∈ {0, I} for every r.
bool is_second(const FiniteRing& R, const Ideal& I);

/// I != 0 and for every r either rI = I or r^k I = 0 for some k >= 1.
bool is_secondary(const FiniteRing& R, const Ideal& I);

/// W(I) as an ideal (necessarily prime) when it is one, else nullopt.
/// Requires I != 0.
std::optional<Ideal> is_secondal(const FiniteRing& R, const Ideal& I);

/// S(I) = {a : ra ∈ I for some r ∉ I}.  Requires I proper.
ElementSet s_set(const FiniteRing& R, const Ideal& I);
bool is_primal(const FiniteRing& R, const Ideal& I);

/// Z_I(R), the vertex set of Γ_I(R).  Requires I proper.
ElementSet z_ideal_set(const FiniteRing& R, const Ideal& I);

/// IJ = I.
bool is_second_to(const FiniteRing& R, const Ideal& J, const Ideal& I);

/// N = Ann(Ann(N)) for every ideal N.
bool is_comultiplication_ring(const FiniteRing& R, std::size_t cap = kDefaultOrderCap);

/// Out-of-domain predicates (second etc. for I = 0, S(I) for I = R) are
/// nullopt rather than false.
struct ClassificationRecord {
  Ideal ideal;
  ElementSet w_set;
  Ideal ann;
  std::optional<bool> is_second;
  std::optional<bool> is_secondary;
  std::optional<bool> is_secondal;
  std::optional<Ideal> secondal_prime;
  std::optional<ElementSet> s_set;
  std::optional<bool> is_primal;
  std::optional<bool> is_prime;
  bool is_radical = false;
  std::optional<ElementSet> z_ideal_set;
};

ClassificationRecord classify(const FiniteRing& R, const Ideal& I);

}  // namespace cozero

namespace cozero {

/// First pair x < y of V(Γ'_I(R)) (ascending) with <x,y> second to I.
std::optional<std::pair<Index, Index>> second_to_witness(const FiniteRing& R, const Ideal& I);

}  // namespace cozero
