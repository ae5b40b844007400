#include "cozero/classify.hpp"

#include "cozero/error.hpp"

namespace cozero {

namespace {

void require_nonzero(const Ideal& I, const char* what) {
  if (I.is_zero()) throw Error(ErrorKind::domain, std::string(what) + " requires a nonzero ideal");
}

void require_proper(const Ideal& I, const char* what) {
  if (I.is_full()) throw Error(ErrorKind::domain, std::string(what) + " requires a proper ideal");
}

}  // namespace

ElementSet w_set(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  ElementSet w(R.order());
  for (Index a = 0; a < R.order(); ++a)
    if (scale_ideal(R, a, I) != I) w.insert(a);
  return w;
}

bool is_second(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_zero()) return false;
  for (Index r = 0; r < R.order(); ++r) {
    auto s = scale_ideal(R, r, I);
    if (!s.is_zero() && s != I) return false;
  }
  return true;
}

bool is_secondary(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  if (I.is_zero()) return false;
  for (Index r = 0; r < R.order(); ++r) {
    Ideal current = scale_ideal(R, r, I);
    if (current == I) continue;
    // r^k I is a descending chain; stop once it is zero or stabilizes.
    while (!current.is_zero()) {
      Ideal next = scale_ideal(R, r, current);
      if (next == current) return false;
      current = std::move(next);
    }
  }
  return true;
}

std::optional<Ideal> is_secondal(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  require_nonzero(I, "is_secondal");
  auto w = w_set(R, I);
  if (!is_ideal_set(R, w)) return std::nullopt;
  return Ideal(R.id(), std::move(w), {});
}

ElementSet s_set(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  require_proper(I, "s_set");
  ElementSet s(R.order());
  for (Index a = 0; a < R.order(); ++a)
    for (Index r = 0; r < R.order(); ++r)
      if (!I.contains(r) && I.contains(R.mul(r, a))) {
        s.insert(a);
        break;
      }
  return s;
}

bool is_primal(const FiniteRing& R, const Ideal& I) { return is_ideal_set(R, s_set(R, I)); }

ElementSet z_ideal_set(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  require_proper(I, "z_ideal_set");
  ElementSet z(R.order());
  for (Index x = 0; x < R.order(); ++x) {
    if (I.contains(x)) continue;
    for (Index y = 0; y < R.order(); ++y)
      if (!I.contains(y) && I.contains(R.mul(x, y))) {
        z.insert(x);
        break;
      }
  }
  return z;
}

bool is_second_to(const FiniteRing& R, const Ideal& J, const Ideal& I) {
  R.require_same_ring(I);
  R.require_same_ring(J);
  return ideal_product(R, I, J) == I;
}

bool is_comultiplication_ring(const FiniteRing& R, std::size_t cap) {
  for (const auto& N : R.all_ideals(cap))
    if (annihilator(R, annihilator(R, N)) != N) return false;
  return true;
}

ClassificationRecord classify(const FiniteRing& R, const Ideal& I) {
  R.require_same_ring(I);
  ClassificationRecord rec;
  rec.ideal = I;
  rec.w_set = w_set(R, I);
  rec.ann = annihilator(R, I);
  if (!I.is_zero()) {
    rec.is_second = is_second(R, I);
    rec.is_secondary = is_secondary(R, I);
    rec.secondal_prime = is_secondal(R, I);
    rec.is_secondal = rec.secondal_prime.has_value();
  }
  if (I.is_proper()) {
    rec.s_set = s_set(R, I);
    rec.is_primal = is_ideal_set(R, *rec.s_set);
    rec.is_prime = is_prime_ideal(R, I);
    rec.z_ideal_set = z_ideal_set(R, I);
  }
  rec.is_radical = is_radical_ideal(R, I);
  return rec;
}

}  // namespace cozero

#include "cozero/ring_graph.hpp"

namespace cozero {

std::optional<std::pair<Index, Index>> second_to_witness(const FiniteRing& R, const Ideal& I) {
  const auto vertices = ideal_cozero_divisor_graph(R, I).vertices();
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const Index gens[] = {vertices[a], vertices[b]};
      if (is_second_to(R, ideal_generated(R, gens), I)) return std::make_pair(gens[0], gens[1]);
    }
  return std::nullopt;
}

}  // namespace cozero
