#include "fanalg/groebner/basis_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "fanalg/error.hpp"
#include "fanalg/polyring/text_format.hpp"

namespace fanalg::groebner {

void write_basis(std::ostream& os, const Basis<poly::RationalField>& basis) {
  const auto& table = basis.generators.empty() ? nullptr : basis.generators[0].table();
  if (!table) throw DomainError("cannot write an empty basis without a ring");
  os << "# order: " << basis.order.spec(*table) << "\n";
  os << "# status: " << to_string(basis.status) << "\n";
  for (const auto& g : basis.generators) os << poly::format_polynomial(g) << "\n";
}

Basis<poly::RationalField> read_basis(std::istream& is, const poly::TablePtr& table) {
  std::optional<MonomialOrder> order;
  BasisStatus status = BasisStatus::raw;
  std::vector<poly::QPoly> gens;
  std::string line;
  std::size_t number = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(is, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      const std::string body = trim(text.substr(1));
      try {
        if (body.rfind("order:", 0) == 0) order = MonomialOrder::parse(trim(body.substr(6)), *table);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), number, 1);
      }
      if (body.rfind("status:", 0) == 0) {
        const std::string s = trim(body.substr(7));
        if (s == "raw") {
          status = BasisStatus::raw;
        } else if (s == "groebner") {
          status = BasisStatus::groebner;
        } else if (s == "reduced-groebner") {
          status = BasisStatus::reduced_groebner;
        } else {
          throw ParseError("unknown basis status '" + s + "'", number, 1);
        }
      }
      continue;
    }
    try {
      gens.push_back(poly::parse_polynomial(text, table, poly::RationalField()));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), number, e.column());
    }
  }
  if (!order) throw ParseError("basis file has no '# order:' header", 0, 0);
  return Basis<poly::RationalField>{std::move(gens), *order, status, {}};
}

}  // namespace fanalg::groebner
