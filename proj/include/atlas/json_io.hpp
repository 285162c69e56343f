#pragma once

#include <json.hpp>

#include "atlas/automorphisms.hpp"
#include "atlas/equations.hpp"
#include "atlas/gimel.hpp"
#include "atlas/lefschetz.hpp"
#include "atlas/moduli.hpp"
#include "atlas/oracle.hpp"
#include "atlas/parameter_space.hpp"

namespace atlas {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Wraps a payload as {"schema_version": 1, "kind": kind, "data": payload}.
Json document(std::string_view kind, Json payload);

/// Unwraps a document, checking kind and schema version.
const Json& document_payload(const Json& doc, std::string_view kind);

Json to_json(const ResiduePair& r);
Json to_json(const SubindexedPair& s);
Json to_json(const OmegaClass& omega);
Json to_json(const LambdaClass& cls);
Json to_json(const DomainAssignment& assignment);
Json to_json(const AutGroupDescriptor& aut);
Json to_json(const SuperellipticEquation& eq);
Json to_json(const Component& c);
Json to_json(const ComponentGraph& graph);
Json to_json(const ComponentCounts& counts);
Json to_json(const SingularLocusReport& report);
Json to_json(const CrossCheckReport& report);
Json to_json(const FixtureReport& report);
Json to_json(const TilingParameter& t);

/// Decoders; every one throws ParseError on malformed input.
template <class T>
T from_json(const Json& j);

template <> ResiduePair from_json<ResiduePair>(const Json& j);
template <> SubindexedPair from_json<SubindexedPair>(const Json& j);
template <> OmegaClass from_json<OmegaClass>(const Json& j);
template <> LambdaClass from_json<LambdaClass>(const Json& j);
template <> DomainAssignment from_json<DomainAssignment>(const Json& j);
template <> AutGroupDescriptor from_json<AutGroupDescriptor>(const Json& j);
template <> SuperellipticEquation from_json<SuperellipticEquation>(const Json& j);
template <> Component from_json<Component>(const Json& j);
template <> ComponentGraph from_json<ComponentGraph>(const Json& j);
template <> ComponentCounts from_json<ComponentCounts>(const Json& j);
template <> SingularLocusReport from_json<SingularLocusReport>(const Json& j);

/// "i.j" -> pair; throws ParseError.
ResiduePair parse_dotted_pair(std::string_view s);

}  // namespace atlas
