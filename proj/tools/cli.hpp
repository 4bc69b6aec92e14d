#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adjstat/algebra/poly.hpp"

namespace adjstat::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Polynomial cell: ascending coefficients as decimal strings.
struct PolyCell {
  std::string var;
  std::vector<std::string> coeffs;
};

using Cell = std::variant<std::string, PolyCell>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

PolyCell poly_cell(const QPoly& p, const std::string& var = "q");

std::string to_json(const Table& t);
/// Polynomial cells are written as their coefficients joined by ';'.
std::string to_csv(const Table& t);

/// Parses "a..b" or "a"; throws std::invalid_argument on an empty or
/// malformed range.
std::pair<int, int> parse_range(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjstat::cli
