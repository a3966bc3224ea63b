#pragma once

#include <iosfwd>

#include "fanalg/groebner/groebner.hpp"

namespace fanalg::groebner {

// One generator per line in the polynomial text format, preceded by
// "# order: <spec>" and "# status: <status>". Other '#' lines are comments.
void write_basis(std::ostream& os, const Basis<poly::RationalField>& basis);

// A missing status line reads as raw. Throws ParseError with the file line.
Basis<poly::RationalField> read_basis(std::istream& is, const poly::TablePtr& table);

}  // namespace fanalg::groebner
