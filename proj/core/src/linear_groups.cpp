#include "saxl/linear_groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace saxl {

ProjectiveSpace::ProjectiveSpace(std::shared_ptr<const FiniteField> E, std::uint32_t q, unsigned n)
    : E_(std::move(E)), q_(q), n_(n) {
  const std::uint32_t Q = E_->size();
  if (n < 2)
    throw std::invalid_argument("projective space needs dimension >= 2");
  if (q < 2 || (Q - 1) % (q - 1) != 0)
    throw std::invalid_argument("no subfield of order " + std::to_string(q));
  // F_q^* is the subgroup of E^* of order q - 1.
  mu_ = E_->exp((Q - 1) / (q - 1));
  scalars_.push_back(0);
  for (std::uint32_t i = 0; i < q - 1; ++i)
    scalars_.push_back(E_->pow(mu_, i));
  std::sort(scalars_.begin(), scalars_.end());
  for (Elem s : scalars_)
    if (E_->pow(s, q) != s)
      throw std::invalid_argument("order " + std::to_string(q) + " is not a subfield order");
  scalar_index_.assign(Q, -1);
  for (std::size_t i = 0; i < scalars_.size(); ++i)
    scalar_index_[scalars_[i]] = static_cast<std::int32_t>(i);

  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= q;
    if (total > (1u << 22))
      throw std::invalid_argument("projective space too large");
  }
  index_.assign(total, kNone);
  std::vector<Elem> v(n);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i, c /= q)
      v[i] = scalars_[c % q];
    auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (*first != 1)
      continue;
    index_[code] = static_cast<std::uint32_t>(points_.size());
    points_.push_back(v);
  }
}

std::uint64_t ProjectiveSpace::encode(const std::vector<Elem> &v) const {
  std::uint64_t code = 0;
  for (unsigned i = n_; i-- > 0;) {
    const std::int32_t s = scalar_index_[v[i]];
    if (s < 0)
      throw std::invalid_argument("vector entry outside the scalar field");
    code = code * q_ + static_cast<std::uint64_t>(s);
  }
  return code;
}

std::size_t ProjectiveSpace::index_of(const std::vector<Elem> &v) const {
  auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (first == v.end())
    throw std::invalid_argument("the zero vector is not a projective point");
  const Elem s = E_->inv(*first);
  std::vector<Elem> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = E_->mul(v[i], s);
  return index_[encode(w)];
}

Matrix ProjectiveSpace::identity() const {
  Matrix m(n_ * n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    m[i * n_ + i] = 1;
  return m;
}

Matrix ProjectiveSpace::multiply(const Matrix &a, const Matrix &b) const {
  Matrix c(n_ * n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const Elem x = a[i * n_ + k];
      if (x == 0)
        continue;
      for (unsigned j = 0; j < n_; ++j)
        c[i * n_ + j] = E_->add(c[i * n_ + j], E_->mul(x, b[k * n_ + j]));
    }
  return c;
}

Elem ProjectiveSpace::determinant(const Matrix &a) const {
  Matrix m = a;
  Elem det = 1;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned piv = col;
    while (piv < n_ && m[piv * n_ + col] == 0)
      ++piv;
    if (piv == n_)
      return 0;
    if (piv != col) {
      for (unsigned j = 0; j < n_; ++j)
        std::swap(m[piv * n_ + j], m[col * n_ + j]);
      det = E_->neg(det);
    }
    const Elem p = m[col * n_ + col];
    det = E_->mul(det, p);
    const Elem pinv = E_->inv(p);
    for (unsigned i = col + 1; i < n_; ++i) {
      const Elem f = E_->mul(m[i * n_ + col], pinv);
      if (f == 0)
        continue;
      for (unsigned j = col; j < n_; ++j)
        m[i * n_ + j] = E_->sub(m[i * n_ + j], E_->mul(f, m[col * n_ + j]));
    }
  }
  return det;
}

Permutation ProjectiveSpace::permutation_of(const Matrix &a) const {
  if (determinant(a) == 0)
    throw std::invalid_argument("singular matrix");
  std::vector<Point> images(points_.size());
  std::vector<Elem> w(n_);
  for (std::size_t p = 0; p < points_.size(); ++p) {
    const auto &v = points_[p];
    std::fill(w.begin(), w.end(), 0);
    for (unsigned k = 0; k < n_; ++k)
      if (v[k] != 0)
        for (unsigned j = 0; j < n_; ++j)
          w[j] = E_->add(w[j], E_->mul(v[k], a[k * n_ + j]));
    images[p] = static_cast<Point>(index_of(w));
  }
  return Permutation(std::move(images));
}

Permutation ProjectiveSpace::field_automorphism(unsigned e) const {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i)
    pe *= E_->characteristic();
  std::vector<Point> images(points_.size());
  std::vector<Elem> w(n_);
  for (std::size_t p = 0; p < points_.size(); ++p) {
    for (unsigned j = 0; j < n_; ++j)
      w[j] = E_->pow(points_[p][j], pe);
    images[p] = static_cast<Point>(index_of(w));
  }
  return Permutation(std::move(images));
}

std::vector<Matrix> ProjectiveSpace::sl_generators() const {
  std::vector<Matrix> gens;
  // 1, mu, ..., mu^(f-1) span F_q over F_p
  std::uint32_t f = 0;
  for (std::uint32_t s = 1; s < q_; s *= E_->characteristic())
    ++f;
  for (std::uint32_t i = 0; i < f; ++i) {
    Matrix t = identity();
    t[1] = E_->pow(mu_, i);
    gens.push_back(std::move(t));
  }
  Matrix c(n_ * n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    c[i * n_ + (i + 1) % n_] = 1;
  if (n_ % 2 == 0)
    c[(n_ - 1) * n_] = E_->neg(1);
  gens.push_back(std::move(c));
  return gens;
}

std::vector<Matrix> ProjectiveSpace::gl_generators() const {
  auto gens = sl_generators();
  Matrix d = identity();
  d[0] = mu_;
  gens.push_back(std::move(d));
  return gens;
}

ExtensionBasis::ExtensionBasis(const ProjectiveSpace &space) : space_(space) {
  const FiniteField &E = space.field();
  const unsigned r = space.dimension();
  const std::uint32_t q = space.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < r; ++i)
    total *= q;
  if (total != E.size())
    throw std::invalid_argument("E is not of order q^r");
  const Elem w = E.generator();
  std::vector<Elem> basis(r);
  for (unsigned i = 0; i < r; ++i)
    basis[i] = E.pow(w, i);
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  coords_.assign(E.size(), kUnset);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    Elem x = 0;
    for (unsigned i = 0; i < r; ++i, c /= q)
      x = E.add(x, E.mul(space.scalars()[c % q], basis[i]));
    if (coords_[x] != kUnset)
      throw std::logic_error("1, w, ..., w^(r-1) is not a basis");
    coords_[x] = code;
  }
}

std::vector<Elem> ExtensionBasis::coordinates(Elem x) const {
  const unsigned r = space_.dimension();
  const std::uint32_t q = space_.q();
  std::vector<Elem> v(r);
  std::uint64_t c = coords_[x];
  for (unsigned i = 0; i < r; ++i, c /= q)
    v[i] = space_.scalars()[c % q];
  return v;
}

Matrix ExtensionBasis::multiplication(Elem c) const {
  const FiniteField &E = space_.field();
  const unsigned r = space_.dimension();
  Matrix m(r * r);
  for (unsigned i = 0; i < r; ++i) {
    auto row = coordinates(E.mul(c, E.pow(E.generator(), i)));
    std::copy(row.begin(), row.end(), m.begin() + i * r);
  }
  return m;
}

Matrix ExtensionBasis::frobenius() const {
  const FiniteField &E = space_.field();
  const unsigned r = space_.dimension();
  Matrix m(r * r);
  for (unsigned i = 0; i < r; ++i) {
    auto row = coordinates(E.pow(E.pow(E.generator(), i), space_.q()));
    std::copy(row.begin(), row.end(), m.begin() + i * r);
  }
  return m;
}

} // namespace saxl
