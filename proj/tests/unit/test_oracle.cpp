#include <doctest.h>

#include "atlas/fixtures.hpp"
#include "atlas/error.hpp"
#include "atlas/oracle.hpp"

using namespace atlas;

TEST_CASE("lambda orbit census") {
  CHECK(lambda_orbit_census(PrimeModulus(5), TilingFlavor::Equilateral) == 3);
  CHECK(lambda_orbit_census(PrimeModulus(13), TilingFlavor::Equilateral) == 15);
  CHECK(lambda_orbit_census(PrimeModulus(7), TilingFlavor::Generic) == 13);
  CHECK(lambda_orbit_census(PrimeModulus(7), TilingFlavor::Square) == 8);
  CHECK(lambda_orbit_census(PrimeModulus(3), TilingFlavor::Generic) == 3);
  CHECK(lambda_orbit_census(PrimeModulus(3), TilingFlavor::Equilateral) == 1);
  CHECK(lambda_orbit_census(PrimeModulus(3), TilingFlavor::Square) == 2);
}

TEST_CASE("tuple orbit census") {
  CHECK(tuple_orbit_census(PrimeModulus(7), 3, PermutationSymmetry::AllPermutations) == 2);
  CHECK(tuple_orbit_census(PrimeModulus(5), 4, PermutationSymmetry::KleinFour) == 7);
  CHECK(tuple_orbit_census(PrimeModulus(5), 4, PermutationSymmetry::AllPermutations) == 3);
  CHECK(tuple_orbit_census(PrimeModulus(5), 4, PermutationSymmetry::Alternating) == 3);
  CHECK(tuple_orbit_census(PrimeModulus(13), 4, PermutationSymmetry::Alternating) == 15);
  CHECK(tuple_orbit_census(PrimeModulus(13), 4, PermutationSymmetry::SquareDihedral) == 25);
  CHECK_THROWS_AS(tuple_orbit_census(PrimeModulus(7), 3, PermutationSymmetry::KleinFour), Error);
  CHECK_THROWS_AS(tuple_orbit_census(PrimeModulus(7), 5, PermutationSymmetry::AllPermutations), Error);
}

TEST_CASE("bound") {
  try {
    lambda_orbit_census(PrimeModulus(103), TilingFlavor::Generic);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK_THROWS_AS(tuple_orbit_census(PrimeModulus(11), 4, PermutationSymmetry::KleinFour, 7), Error);
}

TEST_CASE("published tables") {
  for (int q : kLambdaFixturePrimes) {
    auto r = kappa_fixture_check(PrimeModulus(q));
    CHECK_MESSAGE(r.passed(), "p=" << q);
    CHECK(r.cells_checked == 12 * r.columns);
    CHECK(r.labels_checked == r.columns);
  }
  auto r11 = kappa_fixture_check(PrimeModulus(11));
  CHECK(r11.mismatches.size() == 4);
  for (const auto& m : r11.mismatches) {
    CHECK(m.erratum);
    CHECK(m.column == "1.10");
    CHECK(m.expected == "10.10");
    CHECK(m.actual == "10.1");
  }
  for (int q : kOmegaFixturePrimes) CHECK(omega_fixture_check(PrimeModulus(q)).passed());
  CHECK_THROWS_AS(kappa_fixture_check(PrimeModulus(17)), Error);
  CHECK_THROWS_AS(omega_fixture_check(PrimeModulus(3)), Error);
}

TEST_CASE("kappa generator families") {
  for (int q : primes_in(5, 61)) CHECK_MESSAGE(kappa_generator_check(PrimeModulus(q)).empty(), "p=" << q);
}
