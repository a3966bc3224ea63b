#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fanalg/polyring/monomial.hpp"
#include "fanalg/polyring/variable_table.hpp"

namespace fanalg::poly {

// Total, multiplicative monomial order with 1 minimal.
//
// Every kind works on a variable ranking: ranking()[0] is the largest
// variable. Block elimination compares the total degree in the first block,
// then breaks ties by graded reverse lex over all variables, so any monomial
// involving a first-block variable exceeds every monomial free of them.
//
// Circular lex is lex with psi_ij ranked by the circular distance between i
// and j on a p-cycle (smaller distance is larger), then by i, then by j.
// Diagonal symbols have distance 0 and therefore come first; auxiliary
// symbols come last.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block_elimination, circular_lex };

  static MonomialOrder lex(std::size_t nvars, std::vector<std::size_t> ranking = {});
  static MonomialOrder grevlex(std::size_t nvars, std::vector<std::size_t> ranking = {});
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& first_block,
                                   std::vector<std::size_t> ranking = {});
  static MonomialOrder circular_lex(const VariableTable& table);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  const std::vector<std::size_t>& first_block() const { return block_; }
  bool in_first_block(std::size_t var) const { return var < in_block_.size() && in_block_[var]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  // Text form used in basis files: "grevlex", "lex", "circular-lex",
  // "elimination(p11,p22)", optionally followed by "[v1,v2,...]" giving the
  // ranking when it is not the table order.
  std::string spec(const VariableTable& table) const;
  static MonomialOrder parse(const std::string& spec, const VariableTable& table);

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::vector<std::size_t> block);

  Kind kind_;
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> block_;
  std::vector<bool> in_block_;
};

int circular_distance(int i, int j, int p);

}  // namespace fanalg::poly
