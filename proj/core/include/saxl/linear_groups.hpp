#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "saxl/finite_field.hpp"
#include "saxl/permutation.hpp"

namespace saxl {

using Elem = FiniteField::Elem;
// n x n, row-major, entries in the scalar subfield.
using Matrix = std::vector<Elem>;

// PG(n-1, q) where F_q is the subfield of order q of a field E. Points are
// row vectors whose first nonzero coordinate is 1, numbered in increasing
// order of their base-q encoding; matrices act on the right, v -> vA, so that
// permutation_of(A B) = compose(permutation_of(A), permutation_of(B)).
class ProjectiveSpace {
public:
  ProjectiveSpace(std::shared_ptr<const FiniteField> E, std::uint32_t q, unsigned n);

  const FiniteField &field() const { return *E_; }
  std::uint32_t q() const { return q_; }
  unsigned dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }

  // The scalars F_q inside E, and a generator of F_q^*.
  const std::vector<Elem> &scalars() const { return scalars_; }
  Elem primitive_scalar() const { return mu_; }
  bool is_scalar(Elem a) const { return scalar_index_[a] >= 0; }

  const std::vector<Elem> &point(std::size_t i) const { return points_[i]; }
  // Index of the point spanned by a nonzero vector.
  std::size_t index_of(const std::vector<Elem> &v) const;

  Matrix identity() const;
  Matrix multiply(const Matrix &a, const Matrix &b) const;
  Elem determinant(const Matrix &a) const;
  Permutation permutation_of(const Matrix &a) const;
  // x -> x^(p^e) on every coordinate.
  Permutation field_automorphism(unsigned e) const;

  // Generators of GL_n(q) and SL_n(q): transvections I + b E_12 for b in an
  // F_p-basis of F_q, a permutation matrix of an n-cycle (sign-adjusted for
  // SL) and, for GL, diag(mu, 1, ..., 1); for SL also diag(mu, mu^-1, 1, ...).
  std::vector<Matrix> gl_generators() const;
  std::vector<Matrix> sl_generators() const;

private:
  std::uint64_t encode(const std::vector<Elem> &v) const;

  std::shared_ptr<const FiniteField> E_;
  std::uint32_t q_;
  unsigned n_;
  Elem mu_;
  std::vector<Elem> scalars_;
  std::vector<std::int32_t> scalar_index_;
  std::vector<std::vector<Elem>> points_;
  std::vector<std::uint32_t> index_; // by encoding; kNone for non-normalized vectors
  static constexpr std::uint32_t kNone = 0xffffffffu;
};

// E = F_(q^r) viewed as an r-dimensional space over F_q with basis
// 1, w, ..., w^(r-1), w = E.generator(). Gives the matrices of F_q-linear maps
// of E.
class ExtensionBasis {
public:
  ExtensionBasis(const ProjectiveSpace &space);

  // Coordinates of x in E.
  std::vector<Elem> coordinates(Elem x) const;
  // Matrix of multiplication by c.
  Matrix multiplication(Elem c) const;
  // Matrix of x -> x^q.
  Matrix frobenius() const;

private:
  const ProjectiveSpace &space_;
  std::vector<std::uint64_t> coords_; // element -> base-q code of its coordinates
};

} // namespace saxl
