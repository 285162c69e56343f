#include "atlas/atlas_file.hpp"

#include <fstream>
#include <sstream>

#include "atlas/automorphisms.hpp"
#include "atlas/equations.hpp"
#include "atlas/error.hpp"
#include "atlas/lefschetz.hpp"

namespace atlas {

namespace {

Json class_list(PrimeModulus p, TilingFlavor flavor) {
  TilingShape shape = flavor == TilingFlavor::Generic       ? TilingShape::generic({})
                      : flavor == TilingFlavor::Equilateral ? TilingShape::equilateral()
                                                            : TilingShape::square();
  Json out = Json::array();
  for (const auto& cls : enumerate_classes(p, flavor)) {
    Json row = {{"class", to_json(cls)},
                {"aut_prime", to_json(gimel_aut_prime(cls, shape))},
                {"aut", to_json(gimel_full_aut(cls, shape))}};
    ResiduePair h = cls.head();
    if (flavor == TilingFlavor::Equilateral) row["equation"] = to_json(equilateral_equation(p, h.first, h.second));
    if (flavor == TilingFlavor::Square) row["equation"] = to_json(square_equation(p, h.first, h.second));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json build_atlas(PrimeModulus p) {
  Json lefschetz = Json::array();
  if (p.value() > 3) {
    for (const auto& omega : partition_omega(p))
      lefschetz.push_back({{"class", to_json(omega)},
                           {"aut", to_json(lefschetz_aut(omega))},
                           {"equation", to_json(lefschetz_equation(p, omega.canonical_k))}});
  }
  ComponentGraph graph = build_component_graph(p);
  Json data = {{"p", p.value()},
               {"lefschetz", lefschetz},
               {"generic", class_list(p, TilingFlavor::Generic)},
               {"equilateral", class_list(p, TilingFlavor::Equilateral)},
               {"square", class_list(p, TilingFlavor::Square)},
               {"components", to_json(graph)},
               {"component_counts", to_json(component_counts(graph))},
               {"hyperelliptic", to_json(hyperelliptic_equation(p, {1.0, 0.0}))}};
  return document("atlas", std::move(data));
}

std::filesystem::path atlas_path(const std::filesystem::path& dir, int p) {
  return dir / ("atlas_p" + std::to_string(p) + ".json");
}

std::vector<std::filesystem::path> persist_atlas(const std::filesystem::path& dir, int max_p) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::OutOfRange, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (int q : primes_in(3, max_p)) {
    auto path = atlas_path(dir, q);
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::OutOfRange, "cannot write " + path.string());
    out << build_atlas(PrimeModulus(q)).dump(1) << "\n";
    written.push_back(path);
  }
  return written;
}

Json load_atlas(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Json doc = Json::parse(buf.str());
    document_payload(doc, "atlas");
    return doc;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
  }
}

}  // namespace atlas
