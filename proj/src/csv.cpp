#include "covsim/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace covsim {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  if (ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  return {buf.data(), end};
}

std::string format_round_trip(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  return {buf.data(), end};
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n";
  const std::size_t first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) {
    return {};
  }
  const std::size_t last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match column count");
  }
  rows.push_back(std::move(row));
}

std::string SweepTable::body() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out += c ? "," : "";
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += c ? "," : "";
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

void SweepTable::write(std::ostream& out) const {
  for (const auto& line : provenance) {
    out << "# " << line << '\n';
  }
  out << body();
}

}  // namespace covsim
