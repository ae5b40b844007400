#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "cozero/error.hpp"
#include "cozero/finite_ring.hpp"
#include "cozero/ideal.hpp"
#include "cozero/ring_spec.hpp"
#include "oracles.hpp"

using namespace cozero;

namespace {

std::vector<Index> members(const Ideal& I) { return I.members().to_vector(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::domain;
}

// Searches all bijections fixing 0 and 1 for a ring isomorphism.
bool isomorphic(const FiniteRing& A, const FiniteRing& B) {
  if (A.order() != B.order()) return false;
  std::vector<Index> rest;
  for (Index i = 0; i < A.order(); ++i)
    if (i != A.zero() && i != A.one()) rest.push_back(i);
  std::vector<Index> target;
  for (Index i = 0; i < B.order(); ++i)
    if (i != B.zero() && i != B.one()) target.push_back(i);
  std::sort(target.begin(), target.end());
  do {
    std::vector<Index> phi(A.order());
    phi[A.zero()] = B.zero();
    phi[A.one()] = B.one();
    for (std::size_t k = 0; k < rest.size(); ++k) phi[rest[k]] = target[k];
    bool ok = true;
    for (Index a = 0; a < A.order() && ok; ++a)
      for (Index b = 0; b < A.order() && ok; ++b)
        ok = phi[A.add(a, b)] == B.add(phi[a], phi[b]) && phi[A.mul(a, b)] == B.mul(phi[a], phi[b]);
    if (ok) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

}  // namespace

TEST(RingSpec, ParsesEveryForm) {
  EXPECT_EQ(parse_ring_spec("Zn:12"), RingSpec::cyclic(12));
  EXPECT_EQ(parse_ring_spec("Zn:2xZn:3").kind, RingKind::product);
  EXPECT_EQ(parse_ring_spec("gf:3^2"), RingSpec::galois(3, 2));
  EXPECT_EQ(parse_ring_spec("polyquot:2:0,0,1").kind, RingKind::poly_quotient);
  EXPECT_EQ(parse_ring_spec("table:/tmp/x").kind, RingKind::table);
}

TEST(RingSpec, RejectsBadSpecs) {
  EXPECT_EQ(kind_of([] { build_ring("Zn:1"); }), ErrorKind::invalid_spec);
  EXPECT_EQ(kind_of([] { parse_ring_spec("Zn:abc"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { build_ring("gf:4^2"); }), ErrorKind::invalid_spec);
  EXPECT_EQ(kind_of([] { build_ring("Zn:6xZn:1"); }), ErrorKind::invalid_spec);
  EXPECT_EQ(kind_of([] { build_ring("polyquot:3:2"); }), ErrorKind::invalid_spec);
  EXPECT_EQ(kind_of([] { parse_ring_spec("Q:3"); }), ErrorKind::parse);
}

TEST(RingSpec, TrivialRingMessageNamesIdentity) {
  try {
    build_ring("Zn:1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-zero identity required"), std::string::npos);
  }
}

TEST(RingSpec, RoundTripsRandomSpecs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    RingSpec s;
    switch (rng() % 4) {
      case 0: s = RingSpec::cyclic(2 + rng() % 200); break;
      case 1: {
        std::vector<std::uint64_t> f;
        for (unsigned k = 0; k < 2 + rng() % 3; ++k) f.push_back(2 + rng() % 9);
        s = RingSpec::product(f);
        break;
      }
      case 2: s = RingSpec::galois(std::array{2, 3, 5, 7}[rng() % 4], 1 + rng() % 3); break;
      default: {
        s.kind = RingKind::poly_quotient;
        s.p = std::array{2, 3, 5}[rng() % 3];
        for (unsigned k = 0; k < 2 + rng() % 3; ++k) s.coefficients.push_back(rng() % s.p);
        s.coefficients.back() = 1;
      }
    }
    EXPECT_EQ(parse_ring_spec(to_string(s)), s) << to_string(s);
  }
}

TEST(Ring, CyclicArithmetic) {
  auto R = build_ring("Zn:12");
  EXPECT_EQ(R->order(), 12u);
  EXPECT_EQ(R->add(1, 11), R->zero());
  EXPECT_EQ(R->mul(10, 3), 6u);
  auto Z8 = build_ring("Zn:8");
  EXPECT_EQ(Z8->pow(2, 3), 0u);
  for (Index x = 0; x < R->order(); ++x) EXPECT_EQ(R->add(x, R->neg(x)), R->zero());
  EXPECT_EQ(R->label(11), "11");
}

TEST(Ring, ElementsOfDifferentRingsDoNotMix) {
  auto A = build_ring("Zn:4");
  auto B = build_ring("Zn:4");
  EXPECT_EQ(kind_of([&] { A->add(A->element(1), B->element(1)); }), ErrorKind::ring_mismatch);
}

TEST(Ring, ProductIsIsomorphicToCyclicViaCrt) {
  auto P = build_ring("Zn:2xZn:3");
  auto Z6 = build_ring("Zn:6");
  EXPECT_TRUE(isomorphic(*P, *Z6));
  auto Z2Z2 = build_ring("Zn:2xZn:2");
  EXPECT_FALSE(isomorphic(*Z2Z2, *build_ring("Zn:4")));
  EXPECT_EQ(P->label(P->one()), "(1,1)");
}

TEST(Ring, GaloisFieldsAreFields) {
  for (const char* spec : {"gf:2^2", "gf:2^3", "gf:3^2", "gf:5^2", "gf:7^1"}) {
    auto F = build_ring(spec);
    EXPECT_EQ(F->units().count(), F->order() - 1) << spec;
    EXPECT_TRUE(ring_predicates(*F).is_field) << spec;
    EXPECT_EQ(F->all_ideals().size(), 2u) << spec;
  }
  EXPECT_FALSE(isomorphic(*build_ring("gf:2^2"), *build_ring("Zn:4")));
}

TEST(Ring, PolyQuotientWithReducibleModulus) {
  auto R = build_ring("polyquot:2:0,0,1");  // Z_2[x]/(x^2)
  EXPECT_EQ(R->order(), 4u);
  const auto p = ring_predicates(*R);
  EXPECT_TRUE(p.is_local);
  EXPECT_FALSE(p.is_reduced);
  EXPECT_FALSE(p.is_field);
}

TEST(Ring, TableRingLoadsAndValidates) {
  const std::string path = ::testing::TempDir() + "z3.table";
  {
    std::ofstream f(path);
    f << "3\n0 1 2\n1 2 0\n2 0 1\n0 0 0\n0 1 2\n0 2 1\n";
  }
  auto R = build_ring("table:" + path);
  EXPECT_TRUE(isomorphic(*R, *build_ring("Zn:3")));
  {
    std::ofstream f(path);
    f << "3\n0 1 2\n1 2 0\n2 0 1\n0 0 0\n0 1 2\n0 2 2\n";  // 2*2 = 2 breaks distributivity
  }
  EXPECT_EQ(kind_of([&] { build_ring("table:" + path); }), ErrorKind::axiom_violation);
  std::remove(path.c_str());
}

TEST(Ring, BrokenMultiplicationNamesWitnessTriple) {
  // Z_4 addition; 2*2 = 2 breaks the multiplication laws.
  std::vector<Index> add(16), mul(16);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      add[a * 4 + b] = (a + b) % 4;
      mul[a * 4 + b] = (a * b) % 4;
    }
  mul[2 * 4 + 2] = 2;
  try {
    FiniteRing::from_tables("bad", {"0", "1", "2", "3"}, add, mul);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::axiom_violation);
    EXPECT_NE(std::string(e.what()).find("fails at ("), std::string::npos) << e.what();
  }
}

TEST(Ring, UnitsAndZeroDivisors) {
  auto Z12 = build_ring("Zn:12");
  EXPECT_EQ(Z12->units().to_vector(), (std::vector<Index>{1, 5, 7, 11}));
  EXPECT_EQ(Z12->zero_divisors().to_vector(), (std::vector<Index>{0, 2, 3, 4, 6, 8, 9, 10}));
  EXPECT_EQ(build_ring("Zn:5")->units().count(), 4u);
  EXPECT_EQ(build_ring("Zn:7")->zero_divisors().to_vector(), (std::vector<Index>{0}));
  EXPECT_EQ(build_ring("Zn:4")->zero_divisors().to_vector(), (std::vector<Index>{0, 2}));
  auto V = build_ring("Zn:2xZn:2");
  ASSERT_EQ(V->units().count(), 1u);
  EXPECT_EQ(V->label(V->units().to_vector()[0]), "(1,1)");
}

TEST(Ideals, PrincipalGeneratedAndScaled) {
  auto R = build_ring("Zn:12");
  EXPECT_EQ(members(principal_ideal(*R, 3)), (std::vector<Index>{0, 3, 6, 9}));
  EXPECT_EQ(members(principal_ideal(*R, 0)), (std::vector<Index>{0}));
  EXPECT_EQ(members(principal_ideal(*R, 10)), (std::vector<Index>{0, 2, 4, 6, 8, 10}));
  const Index g23[] = {2, 3}, g48[] = {4, 8}, g0[] = {0};
  EXPECT_TRUE(ideal_generated(*R, g23).is_full());
  EXPECT_EQ(members(ideal_generated(*R, g48)), (std::vector<Index>{0, 4, 8}));
  EXPECT_TRUE(ideal_generated(*R, g0).is_zero());
  const auto I = principal_ideal(*R, 3);
  EXPECT_EQ(members(scale_ideal(*R, 2, I)), (std::vector<Index>{0, 6}));
  EXPECT_EQ(scale_ideal(*R, 1, I), I);
  EXPECT_EQ(scale_ideal(*R, 5, I), I);
}

TEST(Ideals, SumProductIntersection) {
  auto Z6 = build_ring("Zn:6");
  EXPECT_TRUE(ideal_sum(*Z6, principal_ideal(*Z6, 2), principal_ideal(*Z6, 3)).is_full());
  auto R = build_ring("Zn:12");
  const auto I = principal_ideal(*R, 3);
  EXPECT_EQ(members(ideal_product(*R, principal_ideal(*R, 2), I)), (std::vector<Index>{0, 6}));
  EXPECT_EQ(ideal_intersection(*R, I, I), I);
}

TEST(Ideals, LatticeExamples) {
  EXPECT_EQ(build_ring("Zn:12")->all_ideals().size(), 6u);
  EXPECT_EQ(build_ring("Zn:13")->all_ideals().size(), 2u);
  EXPECT_EQ(build_ring("Zn:2xZn:2")->all_ideals().size(), 4u);  // {0}, Z2x0, 0xZ2, R
}

TEST(Ideals, ClosureMatchesSubsetScanUpToOrder16) {
  std::vector<std::string> specs;
  for (int n = 2; n <= 16; ++n) specs.push_back("Zn:" + std::to_string(n));
  for (const char* s : {"Zn:2xZn:2", "Zn:2xZn:4", "Zn:4xZn:2", "Zn:2xZn:2xZn:2", "Zn:2xZn:6", "Zn:3xZn:3",
                        "Zn:4xZn:4", "Zn:2xZn:2xZn:2xZn:2", "gf:2^2", "gf:2^3", "gf:3^2", "gf:2^4",
                        "polyquot:2:0,0,1", "polyquot:2:1,1,1", "polyquot:3:0,0,1", "polyquot:2:0,0,0,1",
                        "polyquot:2:0,0,0,0,1", "polyquot:2:1,0,1,1"})
    specs.push_back(s);
  for (const auto& s : specs) {
    auto R = build_ring(s);
    std::vector<std::vector<Index>> got;
    for (const auto& I : R->all_ideals()) got.push_back(members(I));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::ideals_by_subset_scan(*R)) << s;
  }
}

TEST(Ideals, IdealFromMembersRejectsNonIdeals) {
  auto R = build_ring("Zn:12");
  EXPECT_EQ(kind_of([&] { parse_ideal_spec(*R, "elems:0,3"); }), ErrorKind::not_an_ideal);
  EXPECT_EQ(kind_of([&] { parse_ideal_spec(*R, "elems:0,4"); }), ErrorKind::not_an_ideal);
  EXPECT_EQ(members(parse_ideal_spec(*R, "elems:0,4,8")), (std::vector<Index>{0, 4, 8}));
  EXPECT_EQ(members(parse_ideal_spec(*R, "ann-of:gen:3")), (std::vector<Index>{0, 4, 8}));
  EXPECT_TRUE(parse_ideal_spec(*R, "zero").is_zero());
  EXPECT_TRUE(parse_ideal_spec(*R, "full").is_full());
}

TEST(Ideals, AnnihilatorExamplesAndInvariants) {
  auto R = build_ring("Zn:12");
  EXPECT_EQ(members(annihilator(*R, principal_ideal(*R, 3))), (std::vector<Index>{0, 4, 8}));
  EXPECT_TRUE(annihilator(*R, R->zero_ideal()).is_full());
  EXPECT_TRUE(annihilator(*R, R->unit_ideal()).is_zero());
  auto Z8 = build_ring("Zn:8");
  EXPECT_EQ(members(annihilator(*Z8, principal_ideal(*Z8, 2))), (std::vector<Index>{0, 4}));
}

TEST(Ideals, MaximalPrimeJacobson) {
  auto R = build_ring("Zn:12");
  ASSERT_EQ(R->maximal_ideals().size(), 2u);
  std::set<std::vector<Index>> maxes;
  for (const auto& m : R->maximal_ideals()) maxes.insert(members(m));
  EXPECT_TRUE(maxes.count(members(principal_ideal(*R, 2))));
  EXPECT_TRUE(maxes.count(members(principal_ideal(*R, 3))));
  EXPECT_EQ(members(R->jacobson_radical()), (std::vector<Index>{0, 6}));
  EXPECT_EQ(build_ring("Zn:8")->maximal_ideals().size(), 1u);
  EXPECT_EQ(build_ring("Zn:2xZn:3")->maximal_ideals().size(), 2u);
  EXPECT_TRUE(build_ring("Zn:6")->jacobson_radical().is_zero());
  EXPECT_TRUE(build_ring("gf:3^2")->jacobson_radical().is_zero());
  EXPECT_TRUE(is_prime_ideal(*R, principal_ideal(*R, 3)));
  EXPECT_FALSE(is_prime_ideal(*R, principal_ideal(*R, 4)));
  EXPECT_FALSE(is_prime_ideal(*R, principal_ideal(*R, 6)));
}

TEST(Ideals, JacobsonIsIntersectionOfMaximalsEverywhere) {
  for (int n = 2; n <= 36; ++n) {
    auto R = build_ring("Zn:" + std::to_string(n));
    auto acc = R->full_set();
    // A maximal ideal is a proper ideal contained in no other proper ideal.
    for (const auto& I : R->all_ideals()) {
      if (!I.is_proper()) continue;
      bool maximal = true;
      for (const auto& J : R->all_ideals())
        if (J.is_proper() && J != I && I.is_subset_of(J)) maximal = false;
      if (maximal) acc &= I.members();
    }
    EXPECT_EQ(acc, R->jacobson_radical().members()) << n;
  }
}

TEST(Ideals, RadicalsAndMinimalPrimes) {
  auto Z8 = build_ring("Zn:8");
  EXPECT_EQ(members(radical_of_ideal(*Z8, parse_ideal_spec(*Z8, "elems:0,4"))), (std::vector<Index>{0, 2, 4, 6}));
  auto R = build_ring("Zn:12");
  EXPECT_EQ(members(radical_of_ideal(*R, R->zero_ideal())), (std::vector<Index>{0, 6}));
  const auto P = principal_ideal(*R, 3);
  EXPECT_EQ(radical_of_ideal(*R, P), P);
  EXPECT_EQ(minimal_primes_over(*R, R->zero_ideal()).size(), 2u);
  auto over4 = minimal_primes_over(*R, principal_ideal(*R, 4));
  ASSERT_EQ(over4.size(), 1u);
  EXPECT_EQ(over4[0], principal_ideal(*R, 2));
  auto overP = minimal_primes_over(*R, P);
  ASSERT_EQ(overP.size(), 1u);
  EXPECT_EQ(overP[0], P);
}

TEST(Ideals, Quotients) {
  auto R = build_ring("Zn:12");
  auto Q = quotient_ring(*R, principal_ideal(*R, 3));
  EXPECT_EQ(Q.ring->order(), 3u);
  EXPECT_TRUE(ring_predicates(*Q.ring).is_field);
  auto same = quotient_ring(*R, R->zero_ideal());
  EXPECT_TRUE(isomorphic(*same.ring, *R));
  auto Z8 = build_ring("Zn:8");
  auto Q4 = quotient_ring(*Z8, principal_ideal(*Z8, 4));
  EXPECT_TRUE(isomorphic(*Q4.ring, *build_ring("Zn:4")));
  EXPECT_EQ(kind_of([&] { quotient_ring(*R, R->unit_ideal()); }), ErrorKind::domain);
  for (const auto& I : R->all_ideals()) {
    if (!I.is_proper()) continue;
    EXPECT_EQ(quotient_ring(*R, I).ring->order() * I.size(), R->order());
  }
}

TEST(Ideals, Predicates) {
  auto p12 = ring_predicates(*build_ring("Zn:12"));
  EXPECT_FALSE(p12.is_local);
  EXPECT_FALSE(p12.is_field);
  EXPECT_FALSE(p12.is_reduced);
  EXPECT_TRUE(p12.is_zero_dimensional);
  auto p6 = ring_predicates(*build_ring("Zn:6"));
  EXPECT_TRUE(p6.is_reduced);
  EXPECT_FALSE(p6.is_local);
  auto p5 = ring_predicates(*build_ring("Zn:5"));
  EXPECT_TRUE(p5.is_field);
  EXPECT_TRUE(p5.is_local);
}

TEST(Ideals, ScalingIsMultiplicative) {
  std::mt19937 rng(11);
  for (const char* s : {"Zn:24", "Zn:2xZn:6", "Zn:27", "gf:2^3", "polyquot:3:0,0,1"}) {
    auto R = build_ring(s);
    for (const auto& I : R->all_ideals()) {
      EXPECT_EQ(annihilator(*R, I), ideal_from_members(*R, annihilator(*R, I).members()));
      for (int t = 0; t < 10; ++t) {
        Index x = rng() % R->order(), y = rng() % R->order();
        EXPECT_EQ(scale_ideal(*R, x, scale_ideal(*R, y, I)), scale_ideal(*R, R->mul(x, y), I));
      }
    }
  }
}

TEST(Ideals, ProperIdealsHaveNonzeroAnnihilator) {
  for (int n = 2; n <= 36; ++n) {
    auto R = build_ring("Zn:" + std::to_string(n));
    for (const auto& I : R->all_ideals())
      if (I.is_proper()) EXPECT_FALSE(annihilator(*R, I).is_zero()) << n;
  }
}

TEST(Ring, CapExceeded) {
  EXPECT_EQ(kind_of([] { build_ring("Zn:300"); }), ErrorKind::cap_exceeded);
}
