#include "saxl/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace saxl {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0)
    return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
      return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t> &out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

bool is_prime(const BigInt &n) {
  if (fits_u64(n))
    return is_prime(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("factorize(0)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

int mobius(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("mobius(0)");
  auto f = factorize(n);
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1])
      return 0;
  return f.size() % 2 ? -1 : 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("euler_phi(0)");
  std::uint64_t r = n;
  for (std::uint64_t p : prime_divisors(n))
    r = r / p * (p - 1);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("divisors(0)");
  std::vector<std::uint64_t> ds{1};
  auto f = factorize(n);
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i])
      ++j;
    std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= f[i];
      for (std::size_t k = 0; k < base; ++k)
        ds.push_back(ds[k] * pk);
    }
    i = j;
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t r) {
  if (r == 0 || std::gcd(q, r) != 1)
    throw std::invalid_argument("multiplicative_order requires gcd(q, r) = 1");
  if (r == 1)
    return 1;
  std::uint64_t ord = euler_phi(r);
  for (std::uint64_t p : prime_divisors(ord))
    while (ord % p == 0 && powmod(q, ord / p, r) == 1)
      ord /= p;
  return ord;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  auto f = factorize(n);
  if (f.front() != f.back())
    return std::nullopt;
  return std::make_pair(f.front(), static_cast<unsigned>(f.size()));
}

bool is_prime_power(const BigInt &n) {
  if (n < 2)
    return false;
  if (fits_u64(n))
    return prime_power(n.get_ui()).has_value();
  // n = p^f with f >= 1: try every root degree
  for (unsigned long f = 1; f <= mpz_sizeinbase(n.get_mpz_t(), 2); ++f) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), f) != 0 && is_prime(root))
      return true;
  }
  return false;
}

std::optional<std::uint64_t> zsigmondy_primitive_prime(std::uint64_t q, unsigned n, Sign e) {
  if (q < 2 || n < 2)
    throw std::invalid_argument("zsigmondy_primitive_prime requires q >= 2 and n >= 2");
  const int eps = sign_value(e);
  auto value = [&](unsigned j) -> BigInt { return power(big(q), j) - eps; };
  // Strip from q^n - e every prime that divides some earlier q^j - e.
  BigInt rest = value(n);
  for (unsigned j = 1; j < n; ++j) {
    BigInt earlier = value(j);
    if (earlier == 0)
      continue;
    for (;;) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), earlier.get_mpz_t());
      if (g == 1)
        break;
      rest /= g;
    }
  }
  if (rest == 1)
    return std::nullopt;
  // the smallest prime factor of what remains
  if (fits_u64(rest))
    return factorize(rest.get_ui()).front();
  for (std::uint64_t p = 2;; ++p)
    if (is_prime(p) && mpz_divisible_ui_p(rest.get_mpz_t(), p))
      return p;
}

} // namespace saxl
