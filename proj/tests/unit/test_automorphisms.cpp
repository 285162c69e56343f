#include <doctest.h>

#include "atlas/automorphisms.hpp"
#include "atlas/error.hpp"

using namespace atlas;

namespace {

LambdaClass cls(int p, int i, int j, TilingFlavor f) { return lambda_class(GluingPair::make(PrimeModulus(p), i, j), f); }

TilingShape shape(TilingFlavor f) {
  if (f == TilingFlavor::Equilateral) return TilingShape::equilateral();
  if (f == TilingFlavor::Square) return TilingShape::square();
  return TilingShape::generic({0.3, 0.1});
}

}  // namespace

TEST_CASE("descriptor orders") {
  CHECK(AutGroupDescriptor::cyclic(26).order() == 26);
  CHECK(AutGroupDescriptor::dihedral(13).order() == 26);
  CHECK(AutGroupDescriptor::semidirect_cyclic(13, 4).order() == 52);
  CHECK(AutGroupDescriptor::two_by_two_p(7).order() == 56);
  CHECK(AutGroupDescriptor::exceptional48().order() == 48);
  CHECK(AutGroupDescriptor::exceptional120().order() == 120);
  CHECK(AutGroupDescriptor::exceptional168().order() == 168);
  CHECK(AutGroupDescriptor::exceptional168().source() == AutSource::ExternalLiterature);
  CHECK(AutGroupDescriptor::cyclic(7).source() == AutSource::Classification);
  CHECK(AutGroupDescriptor::semidirect_cyclic(13, 4).tag() == "Z/13Z x| Z/4Z");
  CHECK_THROWS_AS(AutGroupDescriptor::from_parts(GroupStructure::Cyclic, 5, 0, AutSource::ExternalLiterature), Error);
  CHECK(AutGroupDescriptor::from_parts(GroupStructure::Dihedral, 5, 0, AutSource::Classification) ==
        AutGroupDescriptor::dihedral(5));
}

TEST_CASE("three-point groups") {
  PrimeModulus p7(7), p13(13);
  CHECK(lefschetz_aut(omega_set(p7, 2)).order() == 168);
  CHECK(lefschetz_aut(omega_set(p7, 1)) == AutGroupDescriptor::cyclic(14));
  CHECK(lefschetz_aut(omega_set(p13, 1)) == AutGroupDescriptor::cyclic(26));
  CHECK(lefschetz_aut(omega_set(p13, 3)) == AutGroupDescriptor::semidirect_cyclic(13, 3));
  CHECK(lefschetz_aut(omega_set(p13, 3)).order() == 39);
  CHECK(lefschetz_aut(omega_set(p13, 2)) == AutGroupDescriptor::cyclic(13));
}

TEST_CASE("normalizer table") {
  CHECK(gimel_aut_prime(cls(13, 1, 1, TilingFlavor::Equilateral), TilingShape::equilateral()) ==
        AutGroupDescriptor::cyclic(39));
  auto k5 = cls(13, 5, 8, TilingFlavor::Square);
  CHECK(gimel_aut_prime(k5, TilingShape::square()) == AutGroupDescriptor::semidirect_cyclic(13, 4));
  CHECK(gimel_aut_prime(k5, TilingShape::square()).order() == 52);
  CHECK(gimel_aut_prime(cls(11, 2, 10, TilingFlavor::Generic), shape(TilingFlavor::Generic)) ==
        AutGroupDescriptor::dihedral(11));
  CHECK(gimel_aut_prime(cls(7, 6, 6, TilingFlavor::Square), TilingShape::square()).order() == 56);
  CHECK(gimel_aut_prime(cls(7, 6, 6, TilingFlavor::Equilateral), TilingShape::equilateral()).order() == 28);
  CHECK(gimel_aut_prime(cls(13, 1, 1, TilingFlavor::Square), TilingShape::square()) == AutGroupDescriptor::cyclic(26));
  CHECK(gimel_aut_prime(cls(13, 2, 3, TilingFlavor::Generic), shape(TilingFlavor::Generic)) ==
        AutGroupDescriptor::cyclic(13));
}

TEST_CASE("flavor mismatch") {
  try {
    gimel_aut_prime(cls(7, 1, 1, TilingFlavor::Generic), TilingShape::square());
    FAIL("expected FlavorMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FlavorMismatch);
  }
}

TEST_CASE("exceptional full groups") {
  CHECK(gimel_full_aut(cls(3, 2, 2, TilingFlavor::Square), TilingShape::square()).order() == 48);
  CHECK(gimel_full_aut(cls(5, 2, 3, TilingFlavor::Square), TilingShape::square()).order() == 120);
  CHECK(gimel_full_aut(cls(13, 2, 3, TilingFlavor::Generic), shape(TilingFlavor::Generic)) ==
        AutGroupDescriptor::cyclic(13));
  CHECK(gimel_full_aut(cls(7, 6, 6, TilingFlavor::Square), TilingShape::square()).order() == 56);
}

TEST_CASE("hyperelliptic") {
  CHECK(is_hyperelliptic(cls(7, 1, 6, TilingFlavor::Generic)));
  CHECK_FALSE(is_hyperelliptic(cls(7, 1, 1, TilingFlavor::Generic)));
  CHECK_FALSE(is_hyperelliptic(cls(13, 5, 8, TilingFlavor::Generic)));
}

TEST_CASE("coincidence profiles") {
  auto distinct = coincidence_profile(domain_assignment(GluingPair::make(PrimeModulus(13), 2, 3)));
  CHECK(distinct.size() == 12);
  for (const auto& [pair, n] : distinct) CHECK(n == 1);

  auto twice = coincidence_profile(domain_assignment(GluingPair::make(PrimeModulus(13), 2, 11)));
  CHECK(twice.size() == 6);
  for (const auto& [pair, n] : twice) CHECK(n == 2);

  auto thrice = coincidence_profile(domain_assignment(GluingPair::make(PrimeModulus(5), 1, 4)));
  CHECK(thrice.size() == 3);
  for (const auto& [pair, n] : thrice) CHECK(n == 4);
}

TEST_CASE("coincidence order equals the generic normalizer order") {
  for (int q : primes_in(3, 47)) {
    PrimeModulus p(q);
    for (const auto& c : enumerate_classes(p, TilingFlavor::Generic)) {
      auto h = c.head();
      auto a = domain_assignment(GluingPair::make(p, h.first, h.second));
      REQUIRE(coincidence_order(a) == gimel_aut_prime(c, shape(TilingFlavor::Generic)).order());
    }
  }
}

TEST_CASE("structural uniqueness and Hurwitz bound") {
  for (int q : primes_in(5, 47)) {
    PrimeModulus p(q);
    int order8p = 0, order3p = 0;
    for (auto f : {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square}) {
      for (const auto& c : enumerate_classes(p, f)) {
        auto normalizer = gimel_aut_prime(c, shape(f));
        order8p += normalizer.order() == 8 * q;
        order3p += normalizer.order() == 3 * q;
        REQUIRE(gimel_full_aut(c, shape(f)).order() <= hurwitz_bound(q - 1));
        REQUIRE(gimel_full_aut(c, shape(f)).order() % q == 0);
      }
    }
    REQUIRE(order8p == 1);
    REQUIRE(order3p == 1);
    for (const auto& omega : partition_omega(p)) REQUIRE(lefschetz_aut(omega).order() <= hurwitz_bound((q - 1) / 2));
  }
  CHECK(hurwitz_bound(3) == 168);
}

TEST_CASE("square subclasses") {
  for (int q : primes_in(3, 61)) {
    int minus_one = 0, quarter = 0;
    for (const auto& c : enumerate_classes(PrimeModulus(q), TilingFlavor::Square)) {
      minus_one += is_square_minus_one_class(c);
      quarter += is_square_quarter_turn_class(c);
    }
    REQUIRE(minus_one == 1);
    REQUIRE(quarter == (q % 4 == 1 ? 1 : 0));
  }
}
