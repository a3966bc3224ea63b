#include "fanalg/polyring/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fanalg/error.hpp"

namespace fanalg::poly {
namespace {

std::vector<std::size_t> identity_ranking(std::size_t nvars) {
  std::vector<std::size_t> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

void check_ranking(const std::vector<std::size_t>& ranking) {
  std::vector<bool> seen(ranking.size(), false);
  for (std::size_t v : ranking) {
    if (v >= ranking.size() || seen[v]) throw DomainError("variable ranking is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t lookup(const VariableTable& table, const std::string& name) {
  auto idx = table.index_of(name);
  if (!idx) throw DomainError("unknown variable " + name + " in order spec");
  return *idx;
}

}  // namespace

int circular_distance(int i, int j, int p) {
  const int d = std::abs(i - j);
  return std::min(d, p - d);
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::vector<std::size_t> block)
    : kind_(kind), ranking_(std::move(ranking)), block_(std::move(block)) {
  check_ranking(ranking_);
  in_block_.assign(ranking_.size(), false);
  for (std::size_t v : block_) {
    if (v >= ranking_.size()) throw DomainError("elimination block variable out of range");
    in_block_[v] = true;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars, std::vector<std::size_t> ranking) {
  if (ranking.empty()) ranking = identity_ranking(nvars);
  return MonomialOrder(Kind::lex, std::move(ranking), {});
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars, std::vector<std::size_t> ranking) {
  if (ranking.empty()) ranking = identity_ranking(nvars);
  return MonomialOrder(Kind::grevlex, std::move(ranking), {});
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& first_block,
                                         std::vector<std::size_t> ranking) {
  if (ranking.empty()) ranking = identity_ranking(nvars);
  return MonomialOrder(Kind::block_elimination, std::move(ranking), first_block);
}

MonomialOrder MonomialOrder::circular_lex(const VariableTable& table) {
  const int p = table.p();
  std::vector<std::size_t> psi;
  for (std::size_t k = 0; k < table.psi_count(); ++k) psi.push_back(k);
  std::stable_sort(psi.begin(), psi.end(), [&](std::size_t a, std::size_t b) {
    auto [ia, ja] = table.psi_indices(a);
    auto [ib, jb] = table.psi_indices(b);
    return std::make_tuple(circular_distance(ia, ja, p), ia, ja) <
           std::make_tuple(circular_distance(ib, jb, p), ib, jb);
  });
  for (std::size_t k : table.auxiliary()) psi.push_back(k);
  return MonomialOrder(Kind::circular_lex, std::move(psi), {});
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
    case Kind::circular_lex:
      for (std::size_t v : ranking_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      return std::strong_ordering::equal;
    case Kind::block_elimination: {
      unsigned da = 0, db = 0;
      for (std::size_t v : block_) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da <=> db;
      [[fallthrough]];
    }
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t k = ranking_.size(); k > 0; --k) {
        const std::size_t v = ranking_[k - 1];
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::spec(const VariableTable& table) const {
  std::string out;
  switch (kind_) {
    case Kind::lex: out = "lex"; break;
    case Kind::grevlex: out = "grevlex"; break;
    case Kind::circular_lex: return "circular-lex";
    case Kind::block_elimination: {
      out = "elimination(";
      for (std::size_t k = 0; k < block_.size(); ++k) {
        if (k) out += ",";
        out += table.name(block_[k]);
      }
      out += ")";
      break;
    }
  }
  if (ranking_ != identity_ranking(ranking_.size())) {
    out += "[";
    for (std::size_t k = 0; k < ranking_.size(); ++k) {
      if (k) out += ",";
      out += table.name(ranking_[k]);
    }
    out += "]";
  }
  return out;
}

MonomialOrder MonomialOrder::parse(const std::string& spec_text, const VariableTable& table) {
  std::string s = spec_text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  std::vector<std::size_t> ranking;
  if (auto open = s.find('['); open != std::string::npos) {
    if (s.back() != ']') throw ParseError("unterminated ranking in order spec '" + spec_text + "'", 0, 0);
    for (const auto& name : split_list(s.substr(open + 1, s.size() - open - 2))) {
      ranking.push_back(lookup(table, name));
    }
    if (ranking.size() != table.size()) throw DomainError("order ranking must list every variable");
    s = s.substr(0, open);
  }
  if (s == "lex") return lex(table.size(), std::move(ranking));
  if (s == "grevlex") return grevlex(table.size(), std::move(ranking));
  if (s == "circular-lex") return circular_lex(table);
  if (s.rfind("elimination(", 0) == 0 && s.back() == ')') {
    std::vector<std::size_t> block;
    for (const auto& name : split_list(s.substr(12, s.size() - 13))) block.push_back(lookup(table, name));
    return elimination(table.size(), block, std::move(ranking));
  }
  throw ParseError("unknown monomial order '" + spec_text + "'", 0, 0);
}

}  // namespace fanalg::poly
