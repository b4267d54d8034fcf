#include <doctest.h>

#include <numeric>

#include "saxl/closed_forms.hpp"
#include "saxl/number_theory.hpp"

using namespace saxl;

namespace {

BigInt sum_rule(const SubdegreeReport &r) {
  BigInt s = 0;
  for (const auto &e : r.entries)
    s += e.length * e.multiplicity;
  return s;
}

// phi(s) s^((p-1)/s) ((p-1)/s)!, the normalizer in S_p of a subgroup of order
// s of the complement, written out independently of the library.
BigInt sym_normalizer(std::uint64_t p, std::uint64_t s) {
  BigInt v = big(euler_phi(s)) * factorial((p - 1) / s);
  for (std::uint64_t i = 0; i < (p - 1) / s; ++i)
    v *= static_cast<unsigned long>(s);
  return v;
}

bool prime_power_big(const BigInt &n) { return n > 1 && is_prime_power(n); }

} // namespace

TEST_CASE("Frobenius valency of S7 on AGL1(7)") {
  const FrobeniusInput in{7, 6, {{2, 48}, {3, 36}, {6, 12}}, 120};
  CHECK(frobenius_valency(in) == 42);
  const auto m = frobenius_multiplicities(in);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == SubdegreeEntry{7, 1});
  CHECK(m[1] == SubdegreeEntry{14, 2});
  CHECK(m[2] == SubdegreeEntry{21, 2});
  const SubdegreeReport r = frobenius_report(in, "S7");
  CHECK(sum_rule(r) == 120);
  CHECK(r.passed());
}

TEST_CASE("Frobenius preconditions") {
  CHECK_THROWS_AS(frobenius_valency({1, 6, {{2, 48}, {3, 36}, {6, 12}}, 120}), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_valency({6, 6, {{2, 48}, {3, 36}, {6, 12}}, 120}), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_valency({7, 6, {{2, 48}, {3, 36}}, 120}), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_valency({7, 6, {{2, 47}, {3, 36}, {6, 12}}, 120}), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_valency({7, 6, {{2, 48}, {3, 36}, {6, 12}}, 0}), std::invalid_argument);
}

TEST_CASE("l prime has a single non-regular multiplicity") {
  const FrobeniusInput in{23, 11, {{11, 55}}, 40320};
  const auto m = frobenius_multiplicities(in);
  REQUIRE(m.size() == 1);
  CHECK(m[0].length == 23);
  CHECK(m[0].multiplicity == (55 - 11) / 11);
  CHECK(frobenius_valency(in) == 40320 + 22 - 23 * 55 / 11);
}

TEST_CASE("socle-style Frobenius stabiliser in L3(7)") {
  const FrobeniusInput in{19, 3, {{3, 72}}, 32928};
  CHECK(frobenius_multiplicities(in)[0].multiplicity == 23);
}

TEST_CASE("symmetric and alternating closed forms") {
  CHECK(val_sym_p(7) == 42);
  CHECK(val_sym_p(11) == 358490);
  CHECK(val_alt_p(13) == 39862836);
  CHECK(mult_sym_p(7, 1) == 1);
  CHECK(mult_sym_p(7, 2) == 2);
  CHECK(mult_sym_p(7, 3) == 2);
  CHECK(mult_alt_p(13, 1) == 11);
  CHECK(val_alt_p_warning(7));
  CHECK(val_alt_p_warning(23));
  CHECK_FALSE(val_alt_p_warning(13));
  CHECK_THROWS_AS(val_sym_p(9), std::invalid_argument);
  CHECK_THROWS_AS(val_sym_p(5), std::invalid_argument);
}

TEST_CASE("identity suite for primes up to 101") {
  for (std::uint64_t p = 7; p <= 101; ++p) {
    if (!is_prime(p))
      continue;
    CAPTURE(p);
    // independent normalizer display
    FrobeniusInput sym{p, p - 1, {}, factorial(p - 2)};
    FrobeniusInput alt{p, (p - 1) / 2, {}, factorial(p - 2)};
    for (auto s : divisors(p - 1))
      if (s > 1)
        sym.normalizer_orders[s] = sym_normalizer(p, s);
    for (auto s : divisors((p - 1) / 2))
      if (s > 1)
        alt.normalizer_orders[s] = sym_normalizer(p, s) / 2;
    CHECK(val_sym_p(p) == frobenius_valency(sym));
    CHECK(val_alt_p(p) == frobenius_valency(alt));
    for (const auto &in : {sym, alt}) {
      const SubdegreeReport r = frobenius_report(in, "G");
      CHECK(sum_rule(r) == in.index);
      for (const auto &e : r.entries)
        CHECK(e.multiplicity >= 0);
      if (r.valency > 0)
        CHECK(r.valency % static_cast<unsigned long>(in.k * in.l) == 0);
    }
  }
}

TEST_CASE("PSL2 and PGL2 closed forms") {
  CHECK(val_psl2(13, Torus::kSplit) == 60);
  CHECK(val_psl2(11, Torus::kNonsplit) == 24);
  // brute force gives 96 at q = 17; 48 would need the opposite sign in 2^f(2^(f-2) + 2)
  CHECK(val_psl2(17, Torus::kSplit) == 96);
  CHECK(val_pgl2(9, Torus::kSplit) == 16);
  CHECK(val_pgl2(17, Torus::kSplit) == 32);
  CHECK(val_pgl2(7, Torus::kNonsplit) == 0);
  for (std::uint64_t q : {7, 8, 9, 11, 13, 16, 17, 25, 27, 32})
    CHECK(val_pgl2(q, Torus::kSplit) == 2 * (q - 1));
  CHECK_THROWS_AS(val_psl2(12, Torus::kSplit), std::invalid_argument);
  CHECK_THROWS_AS(val_psl2(16, Torus::kSplit), std::invalid_argument);
}

TEST_CASE("Singer normalizer parameters") {
  const LrEpsParams a = lr_eps_params(3, 7, Sign::kPlus);
  CHECK(a.a_sec7 == 57);
  CHECK(a.a_thm14 == 19);
  CHECK(a.N == 216);
  CHECK(a.order_G == 5630688);
  CHECK(a.order_H == 171);
  CHECK(a.r_divides_q_minus_eps);
  CHECK(lr_eps_params(3, 3, Sign::kPlus).N == 18);
  const LrEpsParams c = lr_eps_params(5, 2, Sign::kPlus);
  CHECK(c.k == 4);
  CHECK(c.N == 60);
  CHECK(c.index == 64512);
  CHECK_THROWS_AS(lr_eps_params(3, 2, Sign::kMinus), std::invalid_argument);
  CHECK_THROWS_AS(lr_eps_params(3, 3, Sign::kMinus), std::invalid_argument);
  CHECK_THROWS_AS(lr_eps_params(5, 2, Sign::kMinus), std::invalid_argument);
  CHECK_THROWS_AS(lr_eps_params(4, 3, Sign::kPlus), std::invalid_argument);
}

TEST_CASE("Singer normalizer subdegrees") {
  const SubdegreeReport full = lr_eps_subdegrees(3, 7, Sign::kPlus, LrVariant::kFull);
  CHECK(full.valency == 31122);
  CHECK(full.multiplicity(57) == 31);
  CHECK(full.multiplicity(19) == 2);
  const SubdegreeReport g52 = lr_eps_subdegrees(5, 2, Sign::kPlus, LrVariant::kFull);
  CHECK(g52.valency == 64170);
  CHECK(g52.multiplicity(31) == 11);
  CHECK(lr_eps_subdegrees(3, 2, Sign::kPlus, LrVariant::kFull).valency == 0);
  const SubdegreeReport soc = lr_eps_subdegrees(3, 7, Sign::kPlus, LrVariant::kSocle);
  CHECK(soc.valency == 32490);
  CHECK(soc.multiplicity(19) == 23);

  // sum rule and integrality over a range of parameters, both signs
  for (std::uint64_t r : {3, 5, 7}) {
    for (std::uint64_t q = 2; q <= 32; ++q) {
      if (!prime_power(q))
        continue;
      for (Sign e : {Sign::kPlus, Sign::kMinus}) {
        for (LrVariant v : {LrVariant::kFull, LrVariant::kSocle}) {
          CAPTURE(r);
          CAPTURE(q);
          try {
            const SubdegreeReport rep = lr_eps_subdegrees(r, q, e, v);
            CHECK(sum_rule(rep) == rep.index);
            CHECK(rep.passed());
          } catch (const std::invalid_argument &) {
            // excluded parameters
          }
        }
      }
    }
  }
}

TEST_CASE("r cubed normalizer") {
  CHECK(corollary_r3_check(3, 7, Sign::kPlus) == 27);
  CHECK(corollary_r3_check(3, 4, Sign::kPlus) == 27);
  CHECK(corollary_r3_check(5, 11, Sign::kPlus) == 125);
  CHECK_THROWS_AS(corollary_r3_check(3, 5, Sign::kPlus), std::invalid_argument);
}

TEST_CASE("prime-power classification") {
  const auto pgl17 = classify_prime_power_stabiliser({PrimePowerFamily::kPgl2Split, 17, 0, Sign::kPlus});
  CHECK(pgl17.row_accepted);
  CHECK(pgl17.valency == BigInt(32));
  CHECK(pgl17.prime_power_valency);

  const auto psl17 = classify_prime_power_stabiliser({PrimePowerFamily::kPsl2Split, 17, 0, Sign::kPlus});
  CHECK(psl17.row_accepted);
  CHECK(psl17.valency == BigInt(96));
  CHECK_FALSE(psl17.prime_power_valency);

  CHECK_FALSE(classify_prime_power_stabiliser({PrimePowerFamily::kLrEps, 7, 3, Sign::kPlus}).row_accepted);
  CHECK(classify_prime_power_stabiliser({PrimePowerFamily::kM10, 9, 0, Sign::kPlus}).valency == BigInt(32));
  CHECK(classify_prime_power_stabiliser({PrimePowerFamily::kPgl2_9, 9, 0, Sign::kPlus}).valency == BigInt(16));
  CHECK_FALSE(classify_prime_power_stabiliser({PrimePowerFamily::kPgl2Split, 13, 0, Sign::kPlus}).row_accepted);

  for (const char *tag : {"psl2-split", "psl2-nonsplit", "pgl2-split", "pgl2-nonsplit", "pgl2-9", "m10", "pgammal2-9",
                          "lreps"}) {
    auto f = parse_family(tag);
    REQUIRE(f);
    CHECK(family_tag(*f) == tag);
  }
  CHECK_FALSE(parse_family("nope"));
}

TEST_CASE("classification agrees with direct primality") {
  for (std::uint64_t p = 7; p <= 257; ++p) {
    if (!is_prime(p))
      continue;
    for (PrimePowerFamily f : {PrimePowerFamily::kPsl2Split, PrimePowerFamily::kPsl2Nonsplit,
                               PrimePowerFamily::kPgl2Split, PrimePowerFamily::kPgl2Nonsplit}) {
      CAPTURE(p);
      CAPTURE(family_tag(f));
      const auto res = classify_prime_power_stabiliser({f, p, 0, Sign::kPlus});
      if (!res.row_accepted || !res.valency)
        continue;
      CHECK(res.prime_power_valency == prime_power_big(*res.valency));
    }
  }
  CHECK(is_fermat_prime(17));
  CHECK(is_fermat_prime(257));
  CHECK_FALSE(is_fermat_prime(7));
  CHECK(is_mersenne_prime(31));
  CHECK_FALSE(is_mersenne_prime(15));
}

TEST_CASE("Singer normalizer orders are never prime powers") {
  for (std::uint64_t r : {3, 5, 7, 11, 13}) {
    for (std::uint64_t q = 2; q <= 32; ++q) {
      if (!prime_power(q))
        continue;
      for (Sign e : {Sign::kPlus, Sign::kMinus}) {
        CAPTURE(r);
        CAPTURE(q);
        const BigInt a = (power(big(q), r) - sign_value(e)) / (big(q) - sign_value(e));
        const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(static_cast<long long>(q) - sign_value(e)));
        const BigInt ar = a / static_cast<unsigned long>(g) * static_cast<unsigned long>(r);
        const bool exception = q == 2 && r == 3 && e == Sign::kMinus; // U3(2): 2^3 + 1 = 9
        CHECK(prime_power_big(ar) == exception);
        CHECK(zsigmondy_primitive_prime(q, static_cast<unsigned>(r), e).has_value() == !exception);
      }
    }
  }
}
