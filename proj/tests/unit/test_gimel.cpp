#include <doctest.h>

#include <map>
#include <set>

#include "atlas/error.hpp"
#include "atlas/gimel.hpp"

using namespace atlas;

namespace {

SubindexedPair sp(int a, int b, int angle) { return {{a, b}, angle}; }

}  // namespace

TEST_CASE("sigma membership") {
  PrimeModulus p(13);
  CHECK(sigma_contains(p, 2, 11));
  CHECK_FALSE(sigma_contains(p, 2, 10));
  CHECK_FALSE(sigma_contains(p, 0, 4));
  CHECK(sigma_pairs(p).size() == 12 * 12 - 11);
  try {
    GluingPair::make(p, 2, 10);
    FAIL("expected NotInSigma");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSigma);
  }
}

TEST_CASE("domain assignment p=11 (2,3)") {
  auto a = domain_assignment(GluingPair::make(PrimeModulus(11), 2, 3));
  CHECK(a.at(DomainLabel::AD) == sp(2, 3, 1));
  CHECK(a.at(DomainLabel::AB) == sp(3, 5, 3));
  CHECK(a.at(DomainLabel::AC) == sp(5, 2, 2));
  CHECK(a.at(DomainLabel::BD) == sp(7, 6, 2));
  CHECK(a.at(DomainLabel::BC) == sp(6, 8, 1));
  CHECK(a.at(DomainLabel::BA) == sp(8, 7, 3));
  CHECK(a.at(DomainLabel::CD) == sp(4, 8, 3));
  CHECK(a.at(DomainLabel::CA) == sp(8, 9, 2));
  CHECK(a.at(DomainLabel::CB) == sp(9, 4, 1));
  CHECK(a.at(DomainLabel::DA) == sp(5, 7, 1));
  CHECK(a.at(DomainLabel::DC) == sp(7, 9, 3));
  CHECK(a.at(DomainLabel::DB) == sp(9, 5, 2));
}

TEST_CASE("domain assignment angle-one slots") {
  auto a = domain_assignment(GluingPair::make(PrimeModulus(13), 2, 11));
  CHECK(a.at(DomainLabel::AD) == sp(2, 11, 1));
  CHECK(a.at(DomainLabel::BC) == sp(7, 6, 1));
  CHECK(a.at(DomainLabel::CB) == sp(7, 6, 1));
  CHECK(a.at(DomainLabel::DA) == sp(2, 11, 1));

  auto b = domain_assignment(GluingPair::make(PrimeModulus(5), 1, 1));
  CHECK(b.at(DomainLabel::AD) == sp(1, 1, 1));
  CHECK(b.at(DomainLabel::AB) == sp(1, 2, 3));
  CHECK(b.at(DomainLabel::AC) == sp(2, 1, 2));
  for (DomainLabel d : kDomainOrder) CHECK(b.at(d).angle == angle_of(d));
}

TEST_CASE("lambda classes") {
  auto e = lambda_class(GluingPair::make(PrimeModulus(5), 1, 4), TilingFlavor::Equilateral);
  CHECK(e.pairs == std::vector<ResiduePair>{{1, 4}, {4, 1}, {4, 4}});
  auto f = lambda_class(GluingPair::make(PrimeModulus(7), 1, 1), TilingFlavor::Equilateral);
  CHECK(f.pairs == std::vector<ResiduePair>{{1, 1}, {1, 4}, {2, 2}, {4, 1}});
  auto g = lambda_class(GluingPair::make(PrimeModulus(13), 2, 3), TilingFlavor::Generic);
  CHECK(g.members.size() == 12);
}

TEST_CASE("class keys do not depend on the representative") {
  for (int q : {3, 5, 7, 11, 13, 17, 19, 23}) {
    PrimeModulus p(q);
    for (auto flavor : {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square}) {
      for (const auto& cls : enumerate_classes(p, flavor)) {
        for (const auto& r : cls.key) {
          auto other = lambda_class(GluingPair::make(p, r.first, r.second), flavor);
          REQUIRE(other == cls);
        }
      }
    }
  }
}

TEST_CASE("generic classes partition sigma times angles") {
  for (int q : {3, 5, 7, 11, 13, 29, 31}) {
    PrimeModulus p(q);
    std::set<SubindexedPair> seen;
    std::size_t total = 0;
    for (const auto& cls : enumerate_classes(p, TilingFlavor::Generic)) {
      total += cls.members.size();
      seen.insert(cls.members.begin(), cls.members.end());
    }
    REQUIRE(total == seen.size());
    REQUIRE(seen.size() == 3 * sigma_pairs(p).size());
  }
}

TEST_CASE("kappa detection on published columns") {
  CHECK(kappa_case(GluingPair::make(PrimeModulus(13), 5, 8)) == KappaCase::K5);
  CHECK(kappa_case(GluingPair::make(PrimeModulus(13), 2, 11)) == KappaCase::K4);
  CHECK(kappa_case(GluingPair::make(PrimeModulus(11), 2, 3)) == KappaCase::K6);
  CHECK(kappa_case(GluingPair::make(PrimeModulus(7), 1, 6)) == KappaCase::K3);
  CHECK(kappa_case(GluingPair::make(PrimeModulus(13), 1, 1)) == KappaCase::K1);
  CHECK(kappa_case(GluingPair::make(PrimeModulus(3), 2, 2)) == KappaCase::K3);
  CHECK_THROWS_AS(kappa_case(GluingPair::make(PrimeModulus(3), 2, 2), KappaMode::Strict), Error);
}

TEST_CASE("kappa is constant on equilateral classes") {
  for (int q : primes_in(5, 61)) {
    PrimeModulus p(q);
    for (const auto& cls : enumerate_classes(p, TilingFlavor::Equilateral))
      for (const auto& r : cls.pairs) REQUIRE(kappa_case(GluingPair::make(p, r.first, r.second)) == cls.kappa);
  }
}

TEST_CASE("class counts match the closed forms for all primes below 200") {
  CHECK(enumerate_classes(PrimeModulus(5), TilingFlavor::Equilateral).size() == 3);
  CHECK(enumerate_classes(PrimeModulus(13), TilingFlavor::Equilateral).size() == 15);
  CHECK(enumerate_classes(PrimeModulus(5), TilingFlavor::Generic).size() == 7);
  CHECK(enumerate_classes(PrimeModulus(5), TilingFlavor::Square).size() == 5);
  CHECK(gimel_class_count(PrimeModulus(3), TilingFlavor::Equilateral) == 1);
  for (int q : primes_in(3, 199)) {
    PrimeModulus p(q);
    for (auto flavor : {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square})
      REQUIRE(static_cast<std::int64_t>(enumerate_classes(p, flavor).size()) == gimel_class_count(p, flavor));
  }
}

TEST_CASE("kappa census per prime") {
  for (int q : primes_in(5, 97)) {
    std::map<KappaCase, int> count;
    for (const auto& cls : enumerate_classes(PrimeModulus(q), TilingFlavor::Equilateral)) ++count[cls.kappa];
    REQUIRE(count[KappaCase::K1] == 1);
    REQUIRE(count[KappaCase::K3] == 1);
    REQUIRE((count[KappaCase::K5] > 0) == (q % 4 == 1));
  }
}

TEST_CASE("flavor and notation helpers") {
  CHECK(parse_flavor("square") == TilingFlavor::Square);
  CHECK_FALSE(parse_flavor("round").has_value());
  CHECK(ResiduePair{10, 1}.dotted() == "10.1");
  CHECK(sp(2, 3, 1).dotted() == "2.3_1");
  CHECK(to_string(KappaCase::K4) == "κ4");
  CHECK(TilingShape::generic({0.5, 0.0}).parameter().has_value());
  CHECK_FALSE(TilingShape::square().parameter().has_value());
}
