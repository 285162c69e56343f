#include "atlas/json_io.hpp"

#include <charconv>

#include "atlas/error.hpp"

namespace atlas {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

template <class E, std::size_t N>
E parse_enum(const std::array<E, N>& values, std::string_view s, std::string_view what) {
  for (E v : values)
    if (to_string(v) == s) return v;
  fail("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

constexpr std::array<CardinalityCase, 3> kCardinalities = {CardinalityCase::Two, CardinalityCase::Three,
                                                           CardinalityCase::Six};
constexpr std::array<TilingFlavor, 3> kFlavors = {TilingFlavor::Generic, TilingFlavor::Equilateral,
                                                  TilingFlavor::Square};
constexpr std::array<KappaCase, 6> kKappas = {KappaCase::K1, KappaCase::K2, KappaCase::K3,
                                              KappaCase::K4, KappaCase::K5, KappaCase::K6};
constexpr std::array<GroupStructure, 7> kStructures = {
    GroupStructure::Cyclic, GroupStructure::Dihedral, GroupStructure::SemidirectCyclic,
    GroupStructure::TwoByTwoPSemidirect, GroupStructure::ExceptionalOrder48, GroupStructure::ExceptionalOrder120,
    GroupStructure::ExceptionalOrder168};
constexpr std::array<AutSource, 2> kSources = {AutSource::Classification, AutSource::ExternalLiterature};
constexpr std::array<ComponentType, 3> kTypes = {ComponentType::Type1, ComponentType::Type2, ComponentType::Type3};
constexpr std::array<CheckStatus, 3> kStatuses = {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped};

Json pair_list(const std::vector<ResiduePair>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.dotted());
  return out;
}

std::vector<ResiduePair> parse_pair_list(const Json& j) {
  std::vector<ResiduePair> out;
  for (const auto& e : j) out.push_back(parse_dotted_pair(e.get<std::string>()));
  return out;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> parse_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("complex values are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json site_json(const GluingSite& s) { return {{"key", s.key.dotted()}, {"sheets", pair_list(s.sheets)}}; }

GluingSite parse_site(const Json& j) {
  return {parse_pair_list(j.at("sheets")), parse_dotted_pair(j.at("key").get<std::string>())};
}

Json check_json(const CheckResult& c) {
  return {{"name", c.name},
          {"status", to_string(c.status)},
          {"expected", c.expected},
          {"actual", c.actual},
          {"detail", c.detail}};
}

Json witness_json(const Witness& w) { return {{"family", w.family}, {"p", w.p}, {"descriptor", w.descriptor}}; }

}  // namespace

ResiduePair parse_dotted_pair(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) fail("expected i.j, got '" + std::string(s) + "'");
  ResiduePair r;
  auto a = std::from_chars(s.data(), s.data() + dot, r.first);
  auto b = std::from_chars(s.data() + dot + 1, s.data() + s.size(), r.second);
  if (a.ec != std::errc{} || a.ptr != s.data() + dot || b.ec != std::errc{} || b.ptr != s.data() + s.size())
    fail("expected i.j, got '" + std::string(s) + "'");
  return r;
}

Json document(std::string_view kind, Json payload) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"data", std::move(payload)}};
}

const Json& document_payload(const Json& doc, std::string_view kind) {
  return guarded([&]() -> const Json& {
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      fail("unsupported schema_version " + doc.at("schema_version").dump());
    if (doc.at("kind").get<std::string>() != kind)
      fail("expected a '" + std::string(kind) + "' document, got '" + doc.at("kind").get<std::string>() + "'");
    return doc.at("data");
  });
}

Json to_json(const ResiduePair& r) { return r.dotted(); }

Json to_json(const SubindexedPair& s) { return {{"pair", s.pair.dotted()}, {"angle", s.angle}}; }

Json to_json(const OmegaClass& omega) {
  return {{"p", omega.p.value()},
          {"canonical_k", omega.canonical_k},
          {"members", omega.members},
          {"cardinality", to_string(omega.cardinality)}};
}

Json to_json(const LambdaClass& cls) {
  Json members = Json::array();
  for (const auto& m : cls.members) members.push_back(to_json(m));
  return {{"p", cls.p.value()},
          {"flavor", to_string(cls.flavor)},
          {"kappa", to_string(cls.kappa)},
          {"key", pair_list(cls.key)},
          {"members", members},
          {"pairs", pair_list(cls.pairs)}};
}

Json to_json(const DomainAssignment& a) {
  Json slots = Json::array();
  for (DomainLabel d : kDomainOrder)
    slots.push_back({{"domain", to_string(d)}, {"pair", a.at(d).pair.dotted()}, {"angle", a.at(d).angle}});
  return {{"p", a.p.value()}, {"slots", slots}};
}

Json to_json(const AutGroupDescriptor& aut) {
  return {{"structure", to_string(aut.structure())},
          {"tag", aut.tag()},
          {"order", aut.order()},
          {"n", aut.n()},
          {"q", aut.q()},
          {"source", to_string(aut.source())}};
}

Json to_json(const SuperellipticEquation& eq) {
  Json factors = Json::array();
  for (const auto& f : eq.factors) {
    if (f.kind == FactorKind::Linear) {
      Json e = {{"root", to_string(f.root.tag)}, {"mult", f.multiplicity}};
      if (f.root.tag == RootTag::Parameter) {
        e["name"] = f.root.name;
        if (f.root.value) e["value"] = complex_json(*f.root.value);
      }
      factors.push_back(e);
    } else {
      factors.push_back({{"binomial",
                          {{"degree", f.degree},
                           {"constant", complex_json(f.constant)},
                           {"text", f.constant_text}}},
                         {"mult", f.multiplicity}});
    }
  }
  Json rotation = Json::array();
  for (const auto& r : eq.rotation)
    rotation.push_back({{"point", r.point}, {"mult", r.multiplicity}, {"sigma", r.rotation}});
  return {{"family", eq.family},
          {"exponent", eq.exponent},
          {"factors", factors},
          {"genus", eq.genus},
          {"rotation", rotation},
          {"generators", eq.generators},
          {"text", render(eq, Notation::Unicode)},
          {"ascii", render(eq, Notation::Ascii)}};
}

Json to_json(const Component& c) {
  Json eq = Json::array(), sq = Json::array();
  for (const auto& s : c.equilateral_points) eq.push_back(site_json(s));
  for (const auto& s : c.square_points) sq.push_back(site_json(s));
  return {{"id", c.id},
          {"type", to_string(c.type)},
          {"kappa", to_string(c.kappa)},
          {"sheets", pair_list(c.sheets)},
          {"equilateral_points", eq},
          {"square_points", sq}};
}

Json to_json(const ComponentGraph& graph) {
  Json comps = Json::array();
  for (const auto& c : graph.components) comps.push_back(to_json(c));
  return {{"p", graph.p.value()}, {"components", comps}};
}

Json to_json(const ComponentCounts& c) {
  return {{"type1", c.type1}, {"type2", c.type2}, {"type3", c.type3}, {"total", c.total}};
}

Json to_json(const SingularLocusReport& r) {
  Json w = Json::array(), c = Json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_json(x));
  for (const auto& x : r.checks) c.push_back(check_json(x));
  return {{"g", r.g}, {"isolated", r.isolated}, {"dim_one", r.dim_one},
          {"witnesses", w}, {"checks", c}, {"notes", r.notes}};
}

Json to_json(const CrossCheckReport& r) {
  Json w = Json::array(), c = Json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_json(x));
  for (const auto& x : r.checks) c.push_back(check_json(x));
  return {{"p", r.p}, {"passed", r.passed()}, {"witnesses", w}, {"checks", c}, {"notes", r.notes}};
}

Json to_json(const FixtureReport& r) {
  Json m = Json::array();
  for (const auto& x : r.mismatches)
    m.push_back({{"column", x.column},
                 {"row", x.row},
                 {"expected", x.expected},
                 {"actual", x.actual},
                 {"erratum", x.erratum}});
  return {{"p", r.p},
          {"passed", r.passed()},
          {"columns", r.columns},
          {"cells_checked", r.cells_checked},
          {"labels_checked", r.labels_checked},
          {"mismatches", m}};
}

Json to_json(const TilingParameter& t) {
  return {{"j", complex_json(t.value)}, {"special", to_string(t.special)}};
}

template <>
ResiduePair from_json<ResiduePair>(const Json& j) {
  return guarded([&] { return parse_dotted_pair(j.get<std::string>()); });
}

template <>
SubindexedPair from_json<SubindexedPair>(const Json& j) {
  return guarded([&] {
    return SubindexedPair{parse_dotted_pair(j.at("pair").get<std::string>()), j.at("angle").get<int>()};
  });
}

template <>
OmegaClass from_json<OmegaClass>(const Json& j) {
  return guarded([&] {
    return OmegaClass{PrimeModulus(j.at("p").get<std::int64_t>()), j.at("members").get<std::vector<int>>(),
                      j.at("canonical_k").get<int>(),
                      parse_enum(kCardinalities, j.at("cardinality").get<std::string>(), "cardinality")};
  });
}

template <>
LambdaClass from_json<LambdaClass>(const Json& j) {
  return guarded([&] {
    std::vector<SubindexedPair> members;
    for (const auto& m : j.at("members")) members.push_back(from_json<SubindexedPair>(m));
    return LambdaClass{PrimeModulus(j.at("p").get<std::int64_t>()),
                       parse_enum(kFlavors, j.at("flavor").get<std::string>(), "flavor"),
                       parse_pair_list(j.at("key")),
                       std::move(members),
                       parse_pair_list(j.at("pairs")),
                       parse_enum(kKappas, j.at("kappa").get<std::string>(), "kappa")};
  });
}

template <>
DomainAssignment from_json<DomainAssignment>(const Json& j) {
  return guarded([&] {
    DomainAssignment a{PrimeModulus(j.at("p").get<std::int64_t>()), {}};
    const Json& slots = j.at("slots");
    if (slots.size() != 12) fail("a domain assignment has twelve slots");
    for (std::size_t t = 0; t < 12; ++t) {
      if (slots[t].at("domain").get<std::string>() != to_string(kDomainOrder[t])) fail("slots out of order");
      a.slots[t] = from_json<SubindexedPair>(slots[t]);
    }
    return a;
  });
}

template <>
AutGroupDescriptor from_json<AutGroupDescriptor>(const Json& j) {
  return guarded([&] {
    auto aut = AutGroupDescriptor::from_parts(parse_enum(kStructures, j.at("structure").get<std::string>(), "structure"),
                                              j.at("n").get<int>(), j.at("q").get<int>(),
                                              parse_enum(kSources, j.at("source").get<std::string>(), "source"));
    if (aut.order() != j.at("order").get<std::int64_t>()) fail("order does not match structure");
    return aut;
  });
}

template <>
SuperellipticEquation from_json<SuperellipticEquation>(const Json& j) {
  return guarded([&] {
    SuperellipticEquation eq;
    eq.family = j.at("family").get<std::string>();
    eq.exponent = j.at("exponent").get<int>();
    eq.genus = j.at("genus").get<int>();
    for (const auto& f : j.at("factors")) {
      Factor out;
      out.multiplicity = f.at("mult").get<int>();
      if (f.contains("binomial")) {
        const Json& b = f.at("binomial");
        out.kind = FactorKind::Binomial;
        out.degree = b.at("degree").get<int>();
        out.constant = parse_complex(b.at("constant"));
        out.constant_text = b.at("text").get<std::string>();
      } else {
        auto tag = parse_root_tag(f.at("root").get<std::string>());
        if (!tag) fail("unknown root tag " + f.at("root").dump());
        out.root = SymbolicRoot::of(*tag);
        if (*tag == RootTag::Parameter) {
          out.root.name = f.value("name", std::string{});
          if (f.contains("value")) out.root.value = parse_complex(f.at("value"));
        }
      }
      eq.factors.push_back(std::move(out));
    }
    for (const auto& r : j.at("rotation"))
      eq.rotation.push_back({r.at("point").get<std::string>(), r.at("mult").get<int>(), r.at("sigma").get<int>()});
    eq.generators = j.at("generators").get<std::vector<std::string>>();
    return eq;
  });
}

template <>
Component from_json<Component>(const Json& j) {
  return guarded([&] {
    Component c;
    c.id = j.at("id").get<int>();
    c.type = parse_enum(kTypes, j.at("type").get<std::string>(), "component type");
    c.kappa = parse_enum(kKappas, j.at("kappa").get<std::string>(), "kappa");
    c.sheets = parse_pair_list(j.at("sheets"));
    for (const auto& s : j.at("equilateral_points")) c.equilateral_points.push_back(parse_site(s));
    for (const auto& s : j.at("square_points")) c.square_points.push_back(parse_site(s));
    return c;
  });
}

template <>
ComponentGraph from_json<ComponentGraph>(const Json& j) {
  return guarded([&] {
    ComponentGraph g{PrimeModulus(j.at("p").get<std::int64_t>()), {}};
    for (const auto& c : j.at("components")) g.components.push_back(from_json<Component>(c));
    return g;
  });
}

template <>
ComponentCounts from_json<ComponentCounts>(const Json& j) {
  return guarded([&] {
    return ComponentCounts{j.at("type1").get<std::int64_t>(), j.at("type2").get<std::int64_t>(),
                           j.at("type3").get<std::int64_t>(), j.at("total").get<std::int64_t>()};
  });
}

template <>
SingularLocusReport from_json<SingularLocusReport>(const Json& j) {
  return guarded([&] {
    SingularLocusReport r;
    r.g = j.at("g").get<int>();
    r.isolated = j.at("isolated").get<int>();
    r.dim_one = j.at("dim_one").get<int>();
    for (const auto& w : j.at("witnesses"))
      r.witnesses.push_back(
          {w.at("family").get<std::string>(), w.at("p").get<int>(), w.at("descriptor").get<std::string>()});
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(),
                          parse_enum(kStatuses, c.at("status").get<std::string>(), "status"),
                          c.at("expected").get<std::int64_t>(), c.at("actual").get<std::int64_t>(),
                          c.at("detail").get<std::string>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

}  // namespace atlas
