#include "fanalg/invariants/record.hpp"

#include <map>
#include <mutex>

#include "fanalg/error.hpp"
#include "fanalg/invariants/resultant.hpp"
#include "fanalg/polyring/text_format.hpp"

namespace fanalg::inv {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::tetrad: return "tetrad";
    case InvariantKind::offdiag_minor: return "offdiag-minor";
    case InvariantKind::linear_eliminant: return "linear-eliminant";
    case InvariantKind::k_ad: return "k-ad";
    case InvariantKind::resultant: return "resultant";
  }
  return "unknown";
}

bool InvariantRecord::is_two_by_two() const {
  if (kind != InvariantKind::tetrad && kind != InvariantKind::offdiag_minor) return false;
  const auto r = indices.find("rows");
  return r != indices.end() && r->second.size() == 2;
}

TablePtr psi_table(int p) {
  static std::mutex mutex;
  static std::map<int, TablePtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[p];
  if (!slot) slot = poly::VariableTable::symmetric(p);
  return slot;
}

namespace {

template <class T>
poly::Assignment<T> fill(const Matrix<T>& psi, const poly::VariableTable& table) {
  if (!psi.square() || static_cast<int>(psi.rows()) != table.p()) {
    throw DomainError("matrix size does not match the variable table");
  }
  poly::Assignment<T> out(table.size());
  for (std::size_t v = 0; v < table.psi_count(); ++v) {
    const auto [i, j] = table.psi_indices(v);
    out[v] = psi(i - 1, j - 1);
  }
  return out;
}

}  // namespace

poly::Assignment<Rational> assignment_from(const Matrix<Rational>& psi, const poly::VariableTable& table) {
  return fill(psi, table);
}

poly::Assignment<double> assignment_from(const Matrix<double>& psi, const poly::VariableTable& table) {
  return fill(psi, table);
}

Rational evaluate(const InvariantRecord& record, const Matrix<Rational>& psi) {
  if (record.poly) return record.poly->evaluate(assignment_from(psi, *record.poly->table()));
  if (!record.selection) throw DomainError("invariant has neither a polynomial nor a formula");
  const int n = static_cast<int>(record.selection->d.size());
  return record.scale * multilinear_resultant<Rational>(n, resultant_system(*record.selection, psi));
}

double evaluate(const InvariantRecord& record, const Matrix<double>& psi) {
  if (record.poly) return record.poly->evaluate_float(assignment_from(psi, *record.poly->table())).value;
  if (!record.selection) throw DomainError("invariant has neither a polynomial nor a formula");
  const int n = static_cast<int>(record.selection->d.size());
  return record.scale.get_d() * multilinear_resultant<double>(n, resultant_system(*record.selection, psi));
}

nlohmann::ordered_json to_json(const InvariantRecord& record) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(record.kind);
  j["p"] = record.p;
  j["m"] = record.m;
  nlohmann::ordered_json idx = nlohmann::ordered_json::object();
  for (const auto& [name, values] : record.indices) idx[name] = values;
  j["indices"] = idx;
  j["degree"] = record.degree;
  if (record.poly) {
    j["poly"] = poly::format_polynomial(*record.poly);
    j["terms"] = record.poly->size();
  } else {
    j["poly"] = nullptr;
  }
  j["normalization"] = record.normalization;
  if (record.selection) {
    j["selection"] = {{"d", record.selection->d}, {"rows", record.selection->rows}, {"cols", record.selection->cols}};
  }
  if (record.scale != 1) j["scale"] = record.scale.get_str();
  return j;
}

}  // namespace fanalg::inv
