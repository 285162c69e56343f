#include "atlas/render.hpp"

#include <cstdio>

#include "atlas/automorphisms.hpp"
#include "atlas/error.hpp"
#include "atlas/lefschetz.hpp"

namespace atlas {

namespace {

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t t = 0; t < fields.size(); ++t) {
    if (t) out += ",";
    out += csv_field(fields[t]);
  }
  return out + "\n";
}

std::string pad_left(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string join_pairs(const std::vector<ResiduePair>& v, std::string_view sep) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) out += sep;
    out += v[t].dotted();
  }
  return out;
}

std::string site_keys(const std::vector<GluingSite>& sites) {
  std::string out;
  for (std::size_t t = 0; t < sites.size(); ++t) {
    if (t) out += " ";
    out += sites[t].key.dotted();
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string format_j(std::complex<double> j) {
  double scale = std::max(1.0, std::abs(j));
  if (std::abs(j.imag()) <= 1e-9 * scale) return format_number(j.real());
  std::string im = format_number(j.imag());
  return format_number(j.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

void reject_dot(OutputFormat f) {
  if (f == OutputFormat::Dot) throw Error(ErrorCode::OutOfRange, "dot output is only available for components");
}

std::string omega_label(const OmegaClass& omega) {
  return "Ω_" + std::to_string(omega.canonical_k) + "^" + std::to_string(omega.p.value());
}

std::string flavor_title(TilingFlavor f) { return std::string(to_string(f)); }

TilingShape shape_for(TilingFlavor f) {
  switch (f) {
    case TilingFlavor::Equilateral: return TilingShape::equilateral();
    case TilingFlavor::Square: return TilingShape::square();
    case TilingFlavor::Generic: break;
  }
  return TilingShape::generic({});
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view s) noexcept {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

std::size_t display_width(std::string_view s) noexcept {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], display_width(row[c]));
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string set_notation(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t t = 0; t < members.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(members[t]);
  }
  return out + "}";
}

std::string render_lefschetz(PrimeModulus p, OutputFormat format) {
  reject_dot(format);
  auto classes = partition_omega(p);
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& omega : classes) {
      rows.push_back({{"class", to_json(omega)},
                      {"aut", to_json(lefschetz_aut(omega))},
                      {"equation", to_json(lefschetz_equation(p, omega.canonical_k))}});
    }
    return dump(document("lefschetz", {{"p", p.value()}, {"classes", rows}}));
  }
  if (format == OutputFormat::Csv) {
    std::string out = csv_line({"p", "k", "members", "cardinality", "aut", "order", "equation"});
    for (const auto& omega : classes) {
      auto aut = lefschetz_aut(omega);
      std::string members;
      for (int m : omega.members) members += (members.empty() ? "" : " ") + std::to_string(m);
      out += csv_line({std::to_string(p.value()), std::to_string(omega.canonical_k), members,
                       std::string(to_string(omega.cardinality)), aut.tag(), std::to_string(aut.order()),
                       render(lefschetz_equation(p, omega.canonical_k))});
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& omega : classes) {
    rows.push_back({omega_label(omega) + "=" + set_notation(omega.members), std::string(to_string(omega.cardinality)),
                    lefschetz_aut(omega).tag(), render(lefschetz_equation(p, omega.canonical_k))});
  }
  return "p=" + std::to_string(p.value()) + " classes=" + std::to_string(classes.size()) + "\n" + align_columns(rows);
}

std::string render_domains(PrimeModulus p, const std::vector<ResiduePair>& pairs, OutputFormat format) {
  reject_dot(format);
  std::vector<DomainAssignment> cols;
  std::vector<KappaCase> kappas;
  for (const auto& r : pairs) {
    GluingPair g = GluingPair::make(p, r.first, r.second);
    cols.push_back(domain_assignment(g));
    kappas.push_back(kappa_case(g));
  }
  if (format == OutputFormat::Json) {
    Json out = Json::array();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Json col = to_json(cols[c]);
      col["column"] = pairs[c].dotted();
      col["kappa"] = to_string(kappas[c]);
      out.push_back(col);
    }
    return dump(document("domains", {{"p", p.value()}, {"columns", out}}));
  }
  auto row_label = [](DomainLabel d) { return "[" + std::string(to_string(d)) + "]_" + std::to_string(angle_of(d)); };
  if (format == OutputFormat::Csv) {
    std::vector<std::string> header{"domain"};
    for (const auto& r : pairs) header.push_back(r.dotted());
    std::string out = csv_line(header);
    for (DomainLabel d : kDomainOrder) {
      std::vector<std::string> line{row_label(d)};
      for (const auto& a : cols) line.push_back(a.at(d).pair.dotted());
      out += csv_line(line);
    }
    std::vector<std::string> footer{"kappa"};
    for (KappaCase k : kappas) footer.push_back(std::string(to_string(k)));
    return out + csv_line(footer);
  }
  constexpr std::size_t kCell = 6;
  std::string out = "p=" + std::to_string(p.value()) + "\n";
  for (std::size_t r = 0; r < kDomainOrder.size(); ++r) {
    if (r > 0 && r % 3 == 0) out += "\n";
    DomainLabel d = kDomainOrder[r];
    out += row_label(d);
    for (const auto& a : cols) out += pad_left(a.at(d).pair.dotted(), kCell);
    out += "\n";
  }
  out += "\nkappa ";
  for (KappaCase k : kappas) out += pad_left(std::string(to_string(k)), kCell);
  return out + "\n";
}

std::string render_gimel(PrimeModulus p, TilingFlavor flavor, OutputFormat format) {
  reject_dot(format);
  auto classes = enumerate_classes(p, flavor);
  TilingShape shape = shape_for(flavor);
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& cls : classes) {
      Json row = {{"class", to_json(cls)},
                  {"aut_prime", to_json(gimel_aut_prime(cls, shape))},
                  {"aut", to_json(gimel_full_aut(cls, shape))},
                  {"hyperelliptic", is_hyperelliptic(cls)}};
      ResiduePair h = cls.head();
      if (flavor == TilingFlavor::Equilateral) row["equation"] = to_json(equilateral_equation(p, h.first, h.second));
      if (flavor == TilingFlavor::Square) row["equation"] = to_json(square_equation(p, h.first, h.second));
      rows.push_back(row);
    }
    return dump(document("gimel", {{"p", p.value()},
                                   {"tiling", to_string(flavor)},
                                   {"count", classes.size()},
                                   {"closed_form", gimel_class_count(p, flavor)},
                                   {"classes", rows}}));
  }
  if (format == OutputFormat::Csv) {
    std::string out = csv_line({"p", "tiling", "head", "kappa", "aut_prime", "aut", "aut_order", "pairs"});
    for (const auto& cls : classes) {
      auto full = gimel_full_aut(cls, shape);
      out += csv_line({std::to_string(p.value()), flavor_title(flavor), cls.head().dotted(),
                       std::string(to_string(cls.kappa)), gimel_aut_prime(cls, shape).tag(), full.tag(),
                       std::to_string(full.order()), join_pairs(cls.pairs, " ")});
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"head", "kappa", "aut'", "aut", "order"}};
  for (const auto& cls : classes) {
    auto full = gimel_full_aut(cls, shape);
    rows.push_back({cls.head().dotted(), std::string(to_string(cls.kappa)), gimel_aut_prime(cls, shape).tag(),
                    full.tag(), std::to_string(full.order())});
  }
  return "p=" + std::to_string(p.value()) + " tiling=" + flavor_title(flavor) +
         " classes=" + std::to_string(classes.size()) + "\n" + align_columns(rows);
}

std::string render_components(PrimeModulus p, OutputFormat format) {
  ComponentGraph graph = build_component_graph(p);
  ComponentCounts counts = component_counts(graph);
  if (format == OutputFormat::Json) {
    Json payload = to_json(graph);
    payload["counts"] = to_json(counts);
    return dump(document("components", payload));
  }
  if (format == OutputFormat::Csv) {
    std::string out = csv_line({"p", "id", "type", "kappa", "sheets", "equilateral_points", "square_points"});
    for (const auto& c : graph.components)
      out += csv_line({std::to_string(p.value()), std::to_string(c.id), std::string(to_string(c.type)),
                       std::string(to_string(c.kappa)), join_pairs(c.sheets, " "), site_keys(c.equilateral_points),
                       site_keys(c.square_points)});
    return out;
  }
  if (format == OutputFormat::Dot) {
    std::string out = "graph gimel_" + std::to_string(p.value()) + " {\n";
    for (const auto& c : graph.components) {
      std::string cid = std::to_string(c.id);
      out += "  subgraph cluster_" + cid + " {\n";
      out += "    label=\"" + cid + " " + std::string(to_string(c.type)) + " " + std::string(to_string(c.kappa)) +
             "\";\n";
      for (const auto& s : c.sheets) out += "    \"s" + s.dotted() + "\" [label=\"" + s.dotted() + "\"];\n";
      for (const auto& e : c.equilateral_points) {
        out += "    \"e" + e.key.dotted() + "\" [shape=triangle,label=\"E " + e.key.dotted() + "\"];\n";
        for (const auto& s : e.sheets) out += "    \"s" + s.dotted() + "\" -- \"e" + e.key.dotted() + "\";\n";
      }
      for (const auto& q : c.square_points) {
        out += "    \"q" + q.key.dotted() + "\" [shape=box,label=\"S " + q.key.dotted() + "\"];\n";
        for (const auto& s : q.sheets) out += "    \"s" + s.dotted() + "\" -- \"q" + q.key.dotted() + "\";\n";
      }
      out += "  }\n";
    }
    return out + "}\n";
  }
  std::vector<std::vector<std::string>> rows{{"id", "type", "kappa", "sheets", "equilateral", "square"}};
  for (const auto& c : graph.components)
    rows.push_back({std::to_string(c.id), std::string(to_string(c.type)), std::string(to_string(c.kappa)),
                    join_pairs(c.sheets, " "), site_keys(c.equilateral_points), site_keys(c.square_points)});
  return "p=" + std::to_string(p.value()) + " components=" + std::to_string(counts.total) +
         " type1=" + std::to_string(counts.type1) + " type2=" + std::to_string(counts.type2) +
         " type3=" + std::to_string(counts.type3) + "\n" + align_columns(rows);
}

std::string render_moduli(int g, OutputFormat format) {
  reject_dot(format);
  SingularLocusReport r = singular_locus_report(g);
  if (format == OutputFormat::Json) return dump(document("moduli", to_json(r)));
  if (format == OutputFormat::Csv) {
    std::string out = csv_line({"g", "isolated", "dim_one"});
    return out + csv_line({std::to_string(r.g), std::to_string(r.isolated), std::to_string(r.dim_one)});
  }
  std::string out = "g=" + std::to_string(r.g) + "\nisolated=" + std::to_string(r.isolated) +
                    "\ndim_one=" + std::to_string(r.dim_one) + "\n";
  for (const auto& w : r.witnesses)
    out += "witness " + w.family + " p=" + std::to_string(w.p) + " " + w.descriptor + "\n";
  for (const auto& c : r.checks)
    out += "check " + c.name + " " + std::string(to_string(c.status)) + " expected=" + std::to_string(c.expected) +
           " actual=" + std::to_string(c.actual) + "\n";
  for (const auto& n : r.notes) out += "note " + n + "\n";
  return out;
}

std::string render_equation(const SuperellipticEquation& eq, OutputFormat format, Notation notation) {
  reject_dot(format);
  if (format == OutputFormat::Json) return dump(document("equation", to_json(eq)));
  if (format == OutputFormat::Csv) {
    std::string out = csv_line({"family", "exponent", "genus", "equation"});
    return out + csv_line({eq.family, std::to_string(eq.exponent), std::to_string(eq.genus), render(eq, notation)});
  }
  std::string out = render(eq, notation) + "\ngenus=" + std::to_string(eq.genus) + "\n";
  for (const auto& r : eq.rotation)
    out += "point " + r.point + " mult=" + std::to_string(r.multiplicity) + " sigma=" + std::to_string(r.rotation) + "\n";
  for (const auto& g : eq.generators) out += "generator " + g + "\n";
  return out;
}

std::string render_fourpoint(const TilingParameter& t, OutputFormat format) {
  reject_dot(format);
  if (format == OutputFormat::Json) return dump(document("fourpoint", to_json(t)));
  if (format == OutputFormat::Csv)
    return csv_line({"j_re", "j_im", "special"}) +
           csv_line({format_number(t.value.real()), format_number(t.value.imag()), std::string(to_string(t.special))});
  return "j=" + format_j(t.value) + "\nspecial=" + std::string(to_string(t.special)) + "\n";
}

}  // namespace atlas
