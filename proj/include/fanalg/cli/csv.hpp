#pragma once

#include <istream>
#include <string>
#include <vector>

#include "fanalg/polyring/matrix.hpp"

namespace fanalg::cli {

struct CsvData {
  std::vector<std::string> header;  // empty when the file has none
  poly::Matrix<double> rows;
};

// Comma-separated decimal floats, one observation per line. A first line
// with any non-numeric cell is taken as a header. A UTF-8 byte order mark
// and CRLF endings are accepted; NaN, Inf, empty cells and ragged rows
// raise ParseError with the line and column.
CsvData read_csv(std::istream& is);

}  // namespace fanalg::cli
