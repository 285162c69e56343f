#include <doctest.h>

#include "atlas/automorphisms.hpp"
#include "atlas/error.hpp"
#include "atlas/json_io.hpp"

using namespace atlas;

namespace {

template <class T>
T round_trip(const T& value) {
  return from_json<T>(Json::parse(to_json(value).dump()));
}

}  // namespace

TEST_CASE("envelope") {
  auto doc = document("counts", Json{{"x", 1}});
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(document_payload(doc, "counts")["x"] == 1);
  CHECK_THROWS_AS(document_payload(doc, "atlas"), Error);
  auto bad = doc;
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(document_payload(bad, "counts"), Error);
}

TEST_CASE("round trips") {
  PrimeModulus p(11);
  CHECK(round_trip(ResiduePair{2, 3}) == ResiduePair{2, 3});
  CHECK(round_trip(SubindexedPair{{2, 3}, 2}) == SubindexedPair{{2, 3}, 2});
  for (const auto& omega : partition_omega(p)) CHECK(round_trip(omega) == omega);
  for (auto f : {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square}) {
    for (const auto& cls : enumerate_classes(p, f)) {
      REQUIRE(round_trip(cls) == cls);
      auto shape = f == TilingFlavor::Equilateral ? TilingShape::equilateral()
                   : f == TilingFlavor::Square    ? TilingShape::square()
                                                  : TilingShape::generic({0.2, 0.4});
      auto aut = gimel_aut_prime(cls, shape);
      REQUIRE(round_trip(aut) == aut);
      auto full = gimel_full_aut(cls, shape);
      REQUIRE(round_trip(full) == full);
    }
  }
  auto d = domain_assignment(GluingPair::make(p, 2, 3));
  auto d2 = round_trip(d);
  CHECK(d2.p == d.p);
  CHECK(d2.slots == d.slots);
  for (const auto& eq : {lefschetz_equation(p, 1), hyperelliptic_equation(p, {2.0, 0.5}), equilateral_equation(p, 2, 6),
                         square_equation(p, 1, 1)})
    CHECK(round_trip(eq) == eq);
  auto graph = build_component_graph(p);
  CHECK(round_trip(graph) == graph);
  CHECK(round_trip(component_counts(graph)) == component_counts(graph));
  auto report = singular_locus_report(6);
  CHECK(round_trip(report) == report);
  CHECK(round_trip(AutGroupDescriptor::exceptional168()) == AutGroupDescriptor::exceptional168());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(from_json<ResiduePair>(Json::parse(R"({"first": 1})")), Error);
  CHECK_THROWS_AS(from_json<SubindexedPair>(Json::parse(R"({"pair": [1, 2], "angle": 4})")), Error);
  CHECK_THROWS_AS(from_json<ComponentCounts>(Json::parse("[1, 2]")), Error);
  try {
    from_json<SuperellipticEquation>(Json::parse(R"({"family": 3})"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("dotted pairs") {
  CHECK(parse_dotted_pair("2.10") == ResiduePair{2, 10});
  CHECK_THROWS_AS(parse_dotted_pair("2,10"), Error);
  CHECK_THROWS_AS(parse_dotted_pair("x.1"), Error);
  CHECK_THROWS_AS(parse_dotted_pair("1."), Error);
}
