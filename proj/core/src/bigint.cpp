#include "saxl/bigint.hpp"

#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

BigInt big(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt power(const BigInt &base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::string to_string(const BigInt &v) { return v.get_str(10); }

BigInt parse_bigint(const std::string &text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  return r;
}

bool fits_u64(const BigInt &v) { return v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()); }

std::uint64_t to_u64(const BigInt &v) {
  if (!fits_u64(v))
    throw std::overflow_error("integer " + to_string(v) + " does not fit in 64 bits");
  return v.get_ui();
}

BigInt exact_integer(const BigRational &q, const char *what) {
  BigRational c = q;
  c.canonicalize();
  if (c.get_den() != 1)
    throw Inconsistency(std::string(what) + " is not an integer: " + c.get_str());
  return c.get_num();
}

} // namespace saxl
