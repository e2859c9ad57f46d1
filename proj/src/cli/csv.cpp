#include "hamfrac/cli/csv.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hamfrac/cli/run_config.hpp"

namespace hamfrac::cli {

std::string format_real(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return {buf.data(), ptr};
}

void CsvTable::add_row(Row row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("csv: row has " + std::to_string(row.size()) + " cells, header " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

int CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_real(*row[i]);
    }
    out += '\n';
  }
  return out;
}

CsvTable CsvTable::parse(std::string_view text) {
  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    lines.push_back(text.substr(pos, eol - pos));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (lines.empty()) throw std::invalid_argument("csv: missing header");

  std::vector<std::string> header;
  for (auto cell : split(lines.front())) header.emplace_back(cell);
  CsvTable table(std::move(header));
  for (std::size_t l = 1; l < lines.size(); ++l) {
    Row row;
    for (auto cell : split(lines[l])) {
      if (cell.empty()) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(parse_real(cell));
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace hamfrac::cli
