#include "saxl/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "saxl/number_theory.hpp"

namespace saxl {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// a mod m over F_p; m monic.
Poly poly_mod(Poly a, const Poly &m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * static_cast<std::uint64_t>(m[i])) % p);
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t v, std::uint32_t p, unsigned n) {
  Poly d(n);
  for (unsigned i = 0; i < n; ++i, v /= p)
    d[i] = static_cast<std::uint32_t>(v % p);
  return d;
}

} // namespace

bool is_irreducible(const std::vector<std::uint32_t> &poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2)
    return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly m = digits(v, p, d);
      m.push_back(1);
      if (poly_mod(f, m, p).empty())
        return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || k < 1)
    throw std::invalid_argument("field needs a prime p and k >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > (1u << 20))
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  for (std::uint64_t v = 0;; ++v) {
    Poly m = digits(v, p, k);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }

  // smallest element of order q - 1
  const auto primes = prime_divisors(q_ - 1 == 0 ? 1 : q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1)
        r = poly_mul_mod(r, a);
      a = poly_mul_mod(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 1;
  for (Elem c = 1; c < q_; ++c) {
    bool primitive = true;
    for (auto l : primes)
      if (slow_pow(c, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = c;
      break;
    }
  }
  gen_ = g;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0xffffffffu);
  Elem x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    if (log_[x] != 0xffffffffu)
      throw std::logic_error("field generator has order below q - 1");
    exp_[i] = x;
    log_[x] = i;
    x = poly_mul_mod(x, g);
  }
  if (x != 1)
    throw std::logic_error("field generator does not have order q - 1");
}

FiniteField::Elem FiniteField::poly_mul_mod(Elem a, Elem b) const {
  Poly pa = coefficients(a), pb = coefficients(b);
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    if (pa[i])
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const { return digits(a, p_, k_); }

FiniteField::Elem FiniteField::from_coefficients(const std::vector<std::uint32_t> &c) const {
  Elem v = 0;
  for (unsigned i = 0; i < k_ && i < c.size(); ++i)
    v += (c[i] % p_) * pow_p_[i];
  return v;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2)
    return a ^ b;
  Elem r = 0;
  for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_)
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2)
    return a;
  Elem r = 0;
  for (unsigned i = 0; i < k_; ++i, a /= p_)
    r += ((p_ - a % p_) % p_) * pow_p_[i];
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0)
    throw std::domain_error("log of zero");
  return log_[a];
}

} // namespace saxl
