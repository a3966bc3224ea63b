#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fanalg::poly {

class VariableTable;
using TablePtr = std::shared_ptr<const VariableTable>;

// Symbols of a polynomial ring. A symmetric table for size p holds the
// p(p+1)/2 entries psi_ij (i <= j) in row-major order
// psi_11, psi_12, ..., psi_1p, psi_22, ... followed by auxiliary symbols.
// Symbol names follow the text format: "p12", or "p0112" once p >= 10.
class VariableTable {
 public:
  static TablePtr symmetric(int p, std::vector<std::string> auxiliary = {});
  static TablePtr plain(std::vector<std::string> names);

  int p() const { return p_; }
  std::size_t size() const { return names_.size(); }
  std::size_t psi_count() const { return static_cast<std::size_t>(p_) * (p_ + 1) / 2; }

  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Index of psi_ij; 1-based, either argument order.
  std::size_t psi(int i, int j) const;
  bool is_psi(std::size_t index) const { return index < psi_count(); }
  bool is_diagonal(std::size_t index) const;
  bool is_off_diagonal(std::size_t index) const { return is_psi(index) && !is_diagonal(index); }
  // (i, j) with i <= j for a psi symbol.
  std::pair<int, int> psi_indices(std::size_t index) const;

  std::vector<std::size_t> diagonal() const;
  std::vector<std::size_t> off_diagonal() const;
  std::vector<std::size_t> auxiliary() const;

  bool operator==(const VariableTable& other) const { return p_ == other.p_ && names_ == other.names_; }

  static std::string psi_name(int i, int j, int p);

 private:
  VariableTable(int p, std::vector<std::string> names);

  int p_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::pair<int, int>> psi_pairs_;
};

// Same pointer, or structurally equal tables.
bool same_table(const TablePtr& a, const TablePtr& b);

}  // namespace fanalg::poly
