#include "atlas/fixtures.hpp"

namespace atlas {

namespace {

const std::vector<OmegaFixture> kOmega = {
    {5, 1, {1, 2, 3}},
    {7, 1, {1, 3, 5}},
    {7, 2, {2, 4}},
    {11, 1, {1, 5, 9}},
    {11, 2, {2, 3, 4, 6, 7, 8}},
    {13, 1, {1, 6, 11}},
    {13, 2, {2, 10, 5, 7, 8, 4}},
    {13, 3, {3, 9}},
    {17, 1, {1, 8, 15}},
    {17, 2, {2, 5, 7, 9, 11, 14}},
    {17, 3, {3, 4, 6, 10, 12, 13}},
    {19, 1, {1, 9, 17}},
    {19, 2, {2, 6, 8, 10, 12, 16}},
    {19, 3, {3, 4, 5, 13, 14, 15}},
    {19, 7, {7, 11}},
};

// One entry per printed column; cells run down the column.
const std::vector<LambdaFixtureColumn> kLambda = {
    {3, {"2.2", "2.1", "1.2", "1.2", "2.2", "2.1", "2.1", "1.2", "2.2", "2.2", "2.1", "1.2"}, 3},
    {5, {"1.1", "1.2", "2.1", "1.1", "1.2", "2.1", "1.1", "1.2", "2.1", "3.3", "3.3", "3.3"}, 1},
    {5, {"1.4", "4.4", "4.1", "4.1", "1.4", "4.4", "4.4", "4.1", "1.4", "1.4", "4.4", "4.1"}, 3},
    {5, {"2.3", "3.4", "4.2", "4.3", "3.2", "2.4", "2.4", "4.3", "3.2", "2.3", "3.4", "4.2"}, 5},
    {7, {"1.1", "1.4", "4.1", "1.1", "1.4", "4.1", "1.1", "1.4", "4.1", "2.2", "2.2", "2.2"}, 1},
    {7, {"1.2", "2.3", "3.1", "2.1", "1.3", "3.2", "4.4", "4.5", "5.4", "3.5", "5.5", "5.3"}, 2},
    {7, {"1.6", "6.6", "6.1", "6.1", "1.6", "6.6", "6.6", "6.1", "1.6", "1.6", "6.6", "6.1"}, 3},
    {7, {"2.5", "5.6", "6.2", "6.4", "4.3", "3.6", "3.6", "6.4", "4.3", "2.5", "5.6", "6.2"}, 4},
    {7, {"3.4", "4.6", "6.3", "6.5", "5.2", "2.6", "2.6", "6.5", "5.2", "3.4", "4.6", "6.3"}, 4},
    {11, {"1.1", "1.8", "8.1", "1.1", "1.8", "8.1", "1.1", "1.8", "8.1", "7.7", "7.7", "7.7"}, 1},
    {11, {"1.2", "2.7", "7.1", "2.1", "1.7", "7.2", "6.6", "6.9", "9.6", "5.8", "8.8", "8.5"}, 2},
    {11, {"1.3", "3.6", "6.1", "3.1", "1.6", "6.3", "4.4", "4.2", "2.4", "6.2", "2.2", "2.6"}, 2},
    {11, {"1.4", "4.5", "5.1", "4.1", "1.5", "5.4", "3.3", "3.4", "4.3", "3.9", "9.9", "9.3"}, 2},
    {11, {"1.10", "10.10", "10.10", "10.10", "1.10", "10.10", "10.10", "10.10", "1.10", "1.10", "10.10", "10.10"}, 3},
    {11, {"2.3", "3.5", "5.2", "7.6", "6.8", "8.7", "4.8", "8.9", "9.4", "5.7", "7.9", "9.5"}, 6},
    {11, {"2.5", "5.3", "3.2", "8.6", "6.7", "7.8", "9.7", "7.5", "5.9", "9.8", "8.4", "4.9"}, 6},
    {11, {"2.10", "10.9", "9.2", "5.6", "6.10", "10.5", "10.9", "9.2", "2.10", "6.10", "10.5", "5.6"}, 4},
    {11, {"8.10", "10.3", "3.8", "4.7", "7.10", "10.4", "10.3", "3.8", "8.10", "7.10", "10.4", "4.7"}, 4},
    {11, {"3.10", "10.8", "8.3", "7.4", "4.10", "10.7", "10.8", "8.3", "3.10", "4.10", "10.7", "7.4"}, 4},
    {11, {"5.10", "10.6", "6.5", "2.9", "9.10", "10.2", "10.6", "6.5", "5.10", "9.10", "10.2", "2.9"}, 4},
    {13, {"1.1", "1.10", "10.1", "1.1", "1.10", "10.1", "1.1", "1.10", "10.1", "4.4", "4.4", "4.4"}, 1},
    {13, {"1.2", "2.9", "9.1", "2.1", "1.9", "9.2", "7.7", "7.11", "11.7", "6.3", "3.3", "3.6"}, 2},
    {13, {"1.3", "3.8", "8.1", "3.1", "1.8", "8.3", "9.9", "9.7", "7.9", "2.5", "5.5", "5.2"}, 2},
    {13, {"1.4", "4.7", "7.1", "4.1", "1.7", "7.4", "10.10", "10.5", "5.10", "8.2", "2.2", "2.8"}, 2},
    {13, {"1.5", "5.6", "6.1", "5.1", "1.6", "6.5", "8.8", "8.9", "9.8", "3.11", "11.11", "11.3"}, 2},
    {13, {"1.12", "12.12", "12.1", "12.1", "1.12", "12.12", "12.12", "12.1", "1.12", "1.12", "12.12", "12.1"}, 3},
    {13, {"2.3", "3.7", "7.2", "8.7", "7.10", "10.8", "9.5", "5.11", "11.9", "6.4", "4.2", "2.6"}, 6},
    {13, {"2.4", "4.6", "6.2", "2.7", "7.3", "3.2", "10.7", "7.8", "8.10", "5.9", "9.11", "11.5"}, 6},
    {13, {"2.11", "11.12", "12.2", "12.7", "7.6", "6.12", "6.12", "12.7", "7.6", "2.11", "11.12", "12.2"}, 4},
    {13, {"2.12", "12.11", "11.2", "6.7", "7.12", "12.6", "12.11", "11.2", "2.12", "7.12", "12.6", "6.7"}, 4},
    {13, {"3.4", "4.5", "5.3", "10.9", "9.6", "6.10", "10.4", "4.11", "11.10", "6.11", "11.8", "8.6"}, 6},
    {13, {"3.5", "5.4", "4.3", "6.9", "9.10", "10.6", "8.11", "11.6", "6.8", "11.4", "4.10", "10.11"}, 6},
    {13, {"3.10", "10.12", "12.3", "12.9", "9.4", "4.12", "4.12", "12.9", "9.4", "3.10", "10.12", "12.3"}, 4},
    {13, {"3.12", "12.10", "10.3", "4.9", "9.12", "12.4", "12.10", "10.3", "3.12", "9.12", "12.4", "4.9"}, 4},
    {13, {"5.8", "8.12", "12.5", "12.8", "8.5", "5.12", "5.12", "12.8", "8.5", "5.8", "8.12", "12.5"}, 5},
};

// The column headed 1.10 at p = 11 prints 10.10 in its four beta rows.
constexpr std::array<FixtureErratum, 4> kErrata = {{
    {11, "1.10", DomainLabel::AC, "10.10", "10.1"},
    {11, "1.10", DomainLabel::BD, "10.10", "10.1"},
    {11, "1.10", DomainLabel::CA, "10.10", "10.1"},
    {11, "1.10", DomainLabel::DB, "10.10", "10.1"},
}};

}  // namespace

const std::vector<OmegaFixture>& omega_fixtures() { return kOmega; }

std::vector<OmegaFixture> omega_fixtures(int p) {
  std::vector<OmegaFixture> out;
  for (const auto& f : kOmega)
    if (f.p == p) out.push_back(f);
  return out;
}

const std::vector<LambdaFixtureColumn>& lambda_fixtures() { return kLambda; }

std::vector<LambdaFixtureColumn> lambda_fixtures(int p) {
  std::vector<LambdaFixtureColumn> out;
  for (const auto& c : kLambda)
    if (c.p == p) out.push_back(c);
  return out;
}

std::span<const FixtureErratum> fixture_errata() { return kErrata; }

std::string_view corrected_cell(const LambdaFixtureColumn& column, DomainLabel row) {
  std::string_view printed = column.cells[static_cast<std::size_t>(row)];
  for (const auto& e : kErrata)
    if (e.p == column.p && e.column == column.cells[0] && e.row == row && e.printed == printed) return e.corrected;
  return printed;
}

}  // namespace atlas
