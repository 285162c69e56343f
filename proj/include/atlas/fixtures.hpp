#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "atlas/gimel.hpp"

namespace atlas {

// Published reference tables, transcribed cell for cell as printed.

struct OmegaFixture {
  int p;
  int k;
  std::vector<int> members;  // printed order
};

struct LambdaFixtureColumn {
  int p;
  std::array<std::string_view, 12> cells;  // row order [AD]_1 ... [DB]_2
  int kappa;                               // 1..6
};

/// A printed cell known to disagree with the defining gluing formulas.
struct FixtureErratum {
  int p;
  std::string_view column;  // the [AD]_1 cell naming the column
  DomainLabel row;
  std::string_view printed;
  std::string_view corrected;
};

const std::vector<OmegaFixture>& omega_fixtures();
std::vector<OmegaFixture> omega_fixtures(int p);

const std::vector<LambdaFixtureColumn>& lambda_fixtures();
std::vector<LambdaFixtureColumn> lambda_fixtures(int p);

std::span<const FixtureErratum> fixture_errata();

/// Printed cell after applying the errata list.
std::string_view corrected_cell(const LambdaFixtureColumn& column, DomainLabel row);

inline constexpr std::array<int, 6> kOmegaFixturePrimes = {5, 7, 11, 13, 17, 19};
inline constexpr std::array<int, 5> kLambdaFixturePrimes = {3, 5, 7, 11, 13};

}  // namespace atlas
