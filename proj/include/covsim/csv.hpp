#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace covsim {

// 9 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

// Shortest text that parses back to exactly `value`.
std::string format_round_trip(double value);

// Strict locale-free parse of the whole string; throws std::invalid_argument.
double parse_double(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

// Rectangular numeric table with `#` provenance lines ahead of the header.
struct SweepTable {
  std::vector<std::string> provenance;  // written as "# <line>"
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  void write(std::ostream& out) const;
  // The part that must be byte-identical between reruns: header and rows.
  std::string body() const;
};

}  // namespace covsim
