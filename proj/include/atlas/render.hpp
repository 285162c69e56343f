#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/equations.hpp"
#include "atlas/gimel.hpp"
#include "atlas/json_io.hpp"
#include "atlas/moduli.hpp"
#include "atlas/parameter_space.hpp"

namespace atlas {

enum class OutputFormat { Text, Json, Csv, Dot };

std::optional<OutputFormat> parse_format(std::string_view s) noexcept;

/// Display width in code points, so κ and Ω line up with ASCII.
std::size_t display_width(std::string_view utf8) noexcept;

/// Left-aligned columns separated by two spaces, without trailing blanks.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

/// Quotes a CSV field when needed.
std::string csv_field(std::string_view s);

/// "{1,6,11}"
std::string set_notation(const std::vector<int>& members);

// Every renderer returns the complete output, ending in a newline. Json
// output is a schema-versioned document. Dot is accepted by components only.

std::string render_lefschetz(PrimeModulus p, OutputFormat format);

/// One table column per pair, rows in the order [AD]_1 ... [DB]_2 with a κ
/// footer.
std::string render_domains(PrimeModulus p, const std::vector<ResiduePair>& pairs, OutputFormat format);

std::string render_gimel(PrimeModulus p, TilingFlavor flavor, OutputFormat format);

std::string render_components(PrimeModulus p, OutputFormat format);

std::string render_moduli(int g, OutputFormat format);

std::string render_equation(const SuperellipticEquation& eq, OutputFormat format, Notation notation);

std::string render_fourpoint(const TilingParameter& t, OutputFormat format);

}  // namespace atlas
