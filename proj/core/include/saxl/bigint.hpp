#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace saxl {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt big(std::uint64_t v);
BigInt factorial(std::uint64_t n);
BigInt power(const BigInt &base, std::uint64_t exp);
std::string to_string(const BigInt &v);
BigInt parse_bigint(const std::string &text);

// Throws std::overflow_error when v does not fit.
std::uint64_t to_u64(const BigInt &v);
bool fits_u64(const BigInt &v);

// Returns the integer value of q, throwing Inconsistency if q is not integral.
BigInt exact_integer(const BigRational &q, const char *what);

} // namespace saxl
