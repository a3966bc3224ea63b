#include "fanalg/cli/csv.hpp"

#include <charconv>
#include <cmath>

#include "fanalg/error.hpp"

namespace fanalg::cli {

namespace {

struct Cell {
  std::string text;
  std::size_t column = 0;  // 1-based character position
};

std::vector<Cell> split(const std::string& line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto end = comma == std::string::npos ? line.size() : comma;
    std::size_t a = start, b = end;
    while (a < b && (line[a] == ' ' || line[a] == '\t')) ++a;
    while (b > a && (line[b - 1] == ' ' || line[b - 1] == '\t')) --b;
    cells.push_back({line.substr(a, b - a), a + 1});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parse_double(const std::string& text, double& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  if (*first == '+') ++first;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CsvData read_csv(std::istream& is) {
  CsvData data;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto cells = split(line);
    if (width != 0 && cells.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " cells, found " + std::to_string(cells.size()), lineno,
                       cells.back().column);
    }
    std::vector<double> values;
    bool numeric = true;
    for (const auto& cell : cells) {
      double v = 0.0;
      if (!parse_double(cell.text, v)) {
        numeric = false;
        break;
      }
      values.push_back(v);
    }
    if (!numeric && width == 0 && data.header.empty()) {
      for (const auto& cell : cells) data.header.push_back(cell.text);
      width = cells.size();
      continue;
    }
    for (const auto& cell : cells) {
      double v = 0.0;
      if (cell.text.empty()) throw ParseError("empty cell", lineno, cell.column);
      if (!parse_double(cell.text, v)) throw ParseError("not a number: '" + cell.text + "'", lineno, cell.column);
      if (!std::isfinite(v)) throw ParseError("non-finite value '" + cell.text + "'", lineno, cell.column);
    }
    width = cells.size();
    rows.push_back(std::move(values));
  }
  data.rows = poly::Matrix<double>(rows.size(), width, 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) data.rows(r, c) = rows[r][c];
  }
  return data;
}

}  // namespace fanalg::cli
