#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "atlas/json_io.hpp"

namespace atlas {

/// Everything known at one prime: Lefschetz classes with groups and
/// equations, the three class lists with κ labels and groups, equations for
/// equilateral and square classes, and the component graph.
Json build_atlas(PrimeModulus p);

/// Path of the file holding prime p inside `dir`.
std::filesystem::path atlas_path(const std::filesystem::path& dir, int p);

/// Writes one file per prime 3 <= p <= max_p; returns the paths written.
std::vector<std::filesystem::path> persist_atlas(const std::filesystem::path& dir, int max_p);

/// Reads a persisted file; throws ParseError on malformed content.
Json load_atlas(const std::filesystem::path& file);

}  // namespace atlas
