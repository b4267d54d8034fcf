#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saxl/bigint.hpp"

namespace saxl {

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt &n);
// Prime factors with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Smallest k >= 1 with q^k = 1 mod r; throws std::invalid_argument unless gcd(q,r) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t r);

// (p, f) with n = p^f, if n is a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);
bool is_prime_power(const BigInt &n);

enum class Sign { kPlus = 1, kMinus = -1 };
inline int sign_value(Sign e) { return e == Sign::kPlus ? 1 : -1; }

// A prime s dividing q^n - e with s not dividing q^j - e for 0 < j < n, or
// nothing in the exceptional cases of Zsigmondy's theorem.
std::optional<std::uint64_t> zsigmondy_primitive_prime(std::uint64_t q, unsigned n, Sign e);

} // namespace saxl
