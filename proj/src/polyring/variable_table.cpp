#include "fanalg/polyring/variable_table.hpp"

#include "fanalg/error.hpp"
#include "fanalg/polyring/monomial.hpp"

namespace fanalg::poly {

std::string VariableTable::psi_name(int i, int j, int p) {
  if (i > j) std::swap(i, j);
  if (p < 10) return "p" + std::to_string(i) + std::to_string(j);
  auto two = [](int v) { return (v < 10 ? "0" : "") + std::to_string(v); };
  return "p" + two(i) + two(j);
}

VariableTable::VariableTable(int p, std::vector<std::string> names) : p_(p), names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw DomainError("ring has " + std::to_string(names_.size()) + " variables; at most " +
                      std::to_string(kMaxVars) + " are supported");
  }
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (!lookup_.emplace(names_[k], k).second) throw DomainError("duplicate variable name " + names_[k]);
  }
  for (int i = 1; i <= p_; ++i) {
    for (int j = i; j <= p_; ++j) psi_pairs_.emplace_back(i, j);
  }
}

TablePtr VariableTable::symmetric(int p, std::vector<std::string> auxiliary) {
  if (p < 1) throw DomainError("matrix size p must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= p; ++i) {
    for (int j = i; j <= p; ++j) names.push_back(psi_name(i, j, p));
  }
  for (auto& a : auxiliary) names.push_back(std::move(a));
  return TablePtr(new VariableTable(p, std::move(names)));
}

TablePtr VariableTable::plain(std::vector<std::string> names) {
  return TablePtr(new VariableTable(0, std::move(names)));
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableTable::psi(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > p_) {
    throw DomainError("psi index (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1," +
                      std::to_string(p_) + "]");
  }
  // Rows 1..i-1 contribute p, p-1, ..., p-i+2 entries.
  const int before = (i - 1) * p_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(before + (j - i));
}

bool VariableTable::is_diagonal(std::size_t index) const {
  return is_psi(index) && psi_pairs_[index].first == psi_pairs_[index].second;
}

std::pair<int, int> VariableTable::psi_indices(std::size_t index) const {
  if (!is_psi(index)) throw DomainError("variable " + name(index) + " is not a psi symbol");
  return psi_pairs_[index];
}

std::vector<std::size_t> VariableTable::diagonal() const {
  std::vector<std::size_t> out;
  for (int i = 1; i <= p_; ++i) out.push_back(psi(i, i));
  return out;
}

std::vector<std::size_t> VariableTable::off_diagonal() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < psi_count(); ++k) {
    if (!is_diagonal(k)) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> VariableTable::auxiliary() const {
  std::vector<std::size_t> out;
  for (std::size_t k = psi_count(); k < size(); ++k) out.push_back(k);
  return out;
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace fanalg::poly
