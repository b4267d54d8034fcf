#pragma once

#include <cstdint>
#include <vector>

namespace saxl {

// F_(p^k) with elements encoded as integers 0..p^k-1: the coefficient vector
// (c0, ..., c_(k-1)) of a polynomial in x, c0 least significant, base p.
// The modulus is the monic irreducible of degree k whose lower coefficients,
// read the same way, form the smallest integer. Multiplication goes through
// log tables of a verified primitive element.
class FiniteField {
public:
  using Elem = std::uint32_t;

  // Throws std::invalid_argument unless p is prime, k >= 1 and p^k <= 2^20.
  FiniteField(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  // Coefficients c0..ck of the modulus, ck = 1.
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }
  // The smallest primitive element, by encoding.
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const; // throws std::domain_error on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // log of a nonzero element to the base generator(); exp(i) = generator()^i.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  // Embedding of F_p.
  Elem from_prime(std::uint32_t c) const { return c % p_; }
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t> &c) const;

private:
  Elem poly_mul_mod(Elem a, Elem b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  Elem gen_ = 1;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_; // p^i
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

// Monic irreducibility over F_p of the polynomial with coefficients c0..cn.
bool is_irreducible(const std::vector<std::uint32_t> &poly, std::uint32_t p);

} // namespace saxl
