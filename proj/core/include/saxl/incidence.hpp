#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "saxl/bigint.hpp"

namespace saxl {

// Square integer matrix over an ordered list of poset elements.
struct IncidenceMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<BigInt>> entries;

  std::size_t size() const { return entries.size(); }
  bool is_unit_upper_triangular() const;
  bool is_identity() const;
  static IncidenceMatrix identity(std::vector<std::string> labels);
};

IncidenceMatrix multiply(const IncidenceMatrix &a, const IncidenceMatrix &b);
std::vector<BigInt> multiply(const IncidenceMatrix &m, const std::vector<BigInt> &v);

// Exact inverse by back substitution, checked by M * M^-1 = I.
// Throws std::invalid_argument unless M is upper triangular with unit diagonal.
IncidenceMatrix invert_incidence(const IncidenceMatrix &m);

// A total order of 0..n-1 compatible with leq (leq(i,j) means i precedes j);
// ties go to the smaller index. Throws std::invalid_argument on a cycle.
std::vector<std::size_t> linear_extension(std::size_t n,
                                          const std::function<bool(std::size_t, std::size_t)> &leq);

} // namespace saxl
