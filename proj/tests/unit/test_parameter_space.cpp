#include <doctest.h>

#include <random>
#include <set>

#include "atlas/error.hpp"
#include "atlas/parameter_space.hpp"

using namespace atlas;

namespace {

ComponentType type_of(int p, int i, int j) { return component_of(PrimeModulus(p), GluingPair::make(PrimeModulus(p), i, j)).type; }

}  // namespace

TEST_CASE("component membership") {
  CHECK(type_of(7, 1, 6) == ComponentType::Type2);
  CHECK(type_of(7, 2, 5) == ComponentType::Type3);
  CHECK(type_of(13, 1, 1) == ComponentType::Type1);
  auto graph = build_component_graph(PrimeModulus(11));
  auto a = component_of(graph, GluingPair::make(PrimeModulus(11), 2, 3));
  auto b = component_of(graph, GluingPair::make(PrimeModulus(11), 2, 3));
  CHECK(a == b);
  CHECK_THROWS_AS(GluingPair::make(PrimeModulus(11), 5, 5), Error);
}

TEST_CASE("component counts") {
  CHECK(component_counts(PrimeModulus(5)).total == 3);
  CHECK(component_counts(PrimeModulus(7)).total == 4);
  CHECK(component_counts(PrimeModulus(11)).total == 8);
  CHECK(component_counts(PrimeModulus(3)) == ComponentCounts{0, 1, 0, 1});
  for (int q : primes_in(3, 199)) REQUIRE(component_counts(PrimeModulus(q)) == component_counts_closed_form(PrimeModulus(q)));
}

TEST_CASE("sheet, equilateral and square accounting") {
  for (int q : primes_in(5, 101)) {
    PrimeModulus p(q);
    auto graph = build_component_graph(p);
    std::int64_t sheets = 0, equilateral = 0, square = 0;
    std::set<ResiduePair> heads;
    for (const auto& c : graph.components) {
      REQUIRE(static_cast<int>(c.sheets.size()) == sheet_count(c.type));
      REQUIRE(c.type == component_type_for(c.kappa));
      REQUIRE(c.equilateral_points.size() == (c.type == ComponentType::Type3 ? 2u : 1u));
      for (const auto& e : c.equilateral_points) REQUIRE(e.sheets.size() == (c.type == ComponentType::Type1 ? 1u : 3u));
      sheets += static_cast<std::int64_t>(c.sheets.size());
      equilateral += static_cast<std::int64_t>(c.equilateral_points.size());
      square += static_cast<std::int64_t>(c.square_points.size());
      heads.insert(c.sheets.begin(), c.sheets.end());
    }
    REQUIRE(sheets == (static_cast<std::int64_t>(q) * q + 3) / 4);
    REQUIRE(heads.size() == static_cast<std::size_t>(sheets));
    REQUIRE(equilateral == gimel_class_count(p, TilingFlavor::Equilateral));
    REQUIRE(square == gimel_class_count(p, TilingFlavor::Square));
    for (std::size_t t = 0; t < graph.components.size(); ++t) REQUIRE(graph.components[t].id == static_cast<int>(t));
  }
}

TEST_CASE("four-point parameter at special configurations") {
  const std::complex<double> w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  auto sq = four_point_parameter({ExtendedComplex::finite(1.0), ExtendedComplex::finite({0.0, 1.0}),
                                  ExtendedComplex::finite(-1.0), ExtendedComplex::finite({0.0, -1.0})});
  CHECK(std::abs(sq.value - 1728.0) <= 1e-9 * 1728.0);
  CHECK(sq.special == SpecialPoint::SquarePoint);
  auto eq = four_point_parameter({ExtendedComplex::finite(1.0), ExtendedComplex::finite(w),
                                  ExtendedComplex::finite(w * w), ExtendedComplex::infinity()});
  CHECK(std::abs(eq.value) <= 1e-9);
  CHECK(eq.special == SpecialPoint::EquilateralPoint);
  auto generic = four_point_parameter({ExtendedComplex::finite(0.0), ExtendedComplex::finite(1.0),
                                       ExtendedComplex::finite(3.0), ExtendedComplex::infinity()});
  CHECK(generic.special == SpecialPoint::Generic);
}

TEST_CASE("four-point parameter rejects coincident points") {
  try {
    four_point_parameter({ExtendedComplex::finite(1.0), ExtendedComplex::finite(1.0), ExtendedComplex::finite(2.0),
                          ExtendedComplex::infinity()});
    FAIL("expected DegeneratePoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePoints);
  }
  CHECK_THROWS_AS(four_point_parameter({ExtendedComplex::infinity(), ExtendedComplex::finite(1.0),
                                        ExtendedComplex::finite(2.0), ExtendedComplex::infinity()}),
                  Error);
}

TEST_CASE("four-point parameter invariance") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  auto rnd = [&] { return std::complex<double>(normal(rng), normal(rng)); };
  for (int trial = 0; trial < 50; ++trial) {
    std::array<ExtendedComplex, 4> z;
    for (auto& x : z) x = ExtendedComplex::finite(rnd());
    auto base = four_point_parameter(z).value;
    std::array<int, 4> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::array<ExtendedComplex, 4> y;
      for (int t = 0; t < 4; ++t) y[t] = z[perm[t]];
      REQUIRE(std::abs(four_point_parameter(y).value - base) <= 1e-9 * std::max(1.0, std::abs(base)));
    }
  }
}
