#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanalg/groebner/groebner.hpp"

namespace fanalg::groebner {

struct SliceSpec {
  std::size_t codim = 1;
  std::uint32_t modulus = 101;
  std::uint64_t seed = 1;
};

struct SliceTrial {
  std::uint64_t seed = 0;
  bool zero_dimensional = false;
  std::size_t degree = 0;
  std::string note;
  // For every variable of the input (by table index) that occurs in the
  // generators: its image c0 + c1*s1 + ... + ck*sk as {variable, c0..ck}.
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> substitution;
};

struct SliceResult {
  std::optional<std::size_t> modal_degree;
  std::vector<SliceTrial> trials;
  std::size_t discarded = 0;
};

// Degree of the projective variety of a homogeneous ideal: substitute a
// random affine c-dimensional plane over GF(q), compute a Groebner basis of
// the zero-dimensional result and count standard monomials. Trials whose
// slice is not zero-dimensional are discarded and reported.
SliceResult degree_by_slicing(const std::vector<poly::QPoly>& generators, const SliceSpec& spec, std::size_t trials,
                              const Limits& limits = {});

// Vector-space dimension of k[x]/<leads> when finite.
std::optional<std::size_t> count_standard_monomials(const std::vector<poly::Monomial>& leads, std::size_t nvars);

}  // namespace fanalg::groebner
