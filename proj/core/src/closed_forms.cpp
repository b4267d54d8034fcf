#include "saxl/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigInt nonneg_integer(const BigRational &q, const char *what) {
  BigInt v = exact_integer(q, what);
  if (v < 0)
    throw Inconsistency(std::string(what) + " is negative: " + to_string(v));
  return v;
}

BigRational ratio(const BigInt &num, const BigInt &den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

const BigInt &norm_at(const FrobeniusInput &in, std::uint64_t s) {
  if (s == 1)
    throw std::logic_error("normalizer of the trivial subgroup is not an input");
  auto it = in.normalizer_orders.find(s);
  if (it == in.normalizer_orders.end())
    throw std::invalid_argument("missing normalizer order for the subgroup of order " + std::to_string(s));
  return it->second;
}

void require_prime_above_5(std::uint64_t p) {
  if (p <= 5 || !is_prime(p))
    throw std::invalid_argument("p must be a prime greater than 5, got " + std::to_string(p));
}

std::uint64_t sym_alt_l(SymAlt v, std::uint64_t p) { return v == SymAlt::kSym ? p - 1 : (p - 1) / 2; }

void require_proper_divisor(std::uint64_t d, std::uint64_t l) {
  if (d == 0 || d >= l || l % d != 0)
    throw std::invalid_argument("d = " + std::to_string(d) + " is not a proper divisor of " + std::to_string(l));
}

bool power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

} // namespace

void check_frobenius_input(const FrobeniusInput &in) {
  if (in.k < 2)
    throw std::invalid_argument("the Frobenius kernel must be nontrivial (k >= 2)");
  if (in.l < 2)
    throw std::invalid_argument("the Frobenius complement must be nontrivial (l >= 2)");
  if (gcd64(in.k, in.l) != 1)
    throw std::invalid_argument("k and l must be coprime");
  if (in.index < 1)
    throw std::invalid_argument("index must be positive");
  for (auto s : divisors(in.l)) {
    if (s == 1)
      continue;
    const BigInt &n = norm_at(in, s);
    if (n % in.l != 0)
      throw std::invalid_argument("normalizer order for subgroup order " + std::to_string(s) +
                                  " is not divisible by l");
  }
}

BigInt frobenius_valency(const FrobeniusInput &in) {
  check_frobenius_input(in);
  BigInt sum = 0;
  for (auto d : divisors(in.l))
    if (d != 1)
      sum += mobius(d) * norm_at(in, d);
  BigRational v = BigRational(in.index + in.k - 1) + ratio(big(in.k) * sum, big(in.l));
  return nonneg_integer(v, "Frobenius valency");
}

std::vector<SubdegreeEntry> frobenius_multiplicities(const FrobeniusInput &in) {
  check_frobenius_input(in);
  std::vector<SubdegreeEntry> out;
  for (auto d : divisors(in.l)) {
    if (d == in.l)
      break;
    BigRational m;
    if (d == 1) {
      m = ratio(norm_at(in, in.l) - in.l, big(in.l));
    } else {
      BigInt sum = 0;
      for (auto e : divisors(d))
        sum += mobius(e) * norm_at(in, in.l * e / d);
      m = ratio(sum, big(d) * in.l);
    }
    out.push_back({big(d) * in.k, nonneg_integer(m, "Frobenius multiplicity")});
  }
  return out;
}

SubdegreeReport frobenius_report(const FrobeniusInput &in, const std::string &group_name) {
  SubdegreeReport r;
  r.group_name = group_name;
  r.order_H = big(in.k) * in.l;
  r.index = in.index;
  r.order_G = r.index * r.order_H;
  r.method = Method::kClosedForm;
  r.valency = frobenius_valency(in);
  add_subdegree(r, 1, 1);
  for (const auto &e : frobenius_multiplicities(in))
    add_subdegree(r, e.length, e.multiplicity);
  if (r.valency % r.order_H != 0)
    throw Inconsistency("Frobenius valency " + to_string(r.valency) + " is not a multiple of |H|");
  add_subdegree(r, r.order_H, r.valency / r.order_H);
  finalize_checks(r);
  if (!r.checks.sum_rule)
    throw Inconsistency("Frobenius subdegrees violate the sum rule for " + group_name);
  return r;
}

BigInt sym_alt_normalizer_order(SymAlt v, std::uint64_t p, std::uint64_t s) {
  if ((p - 1) % s != 0)
    throw std::invalid_argument("subgroup order must divide p - 1");
  const std::uint64_t m = (p - 1) / s;
  BigInt n = big(euler_phi(s)) * power(big(s), m) * factorial(m);
  if (v == SymAlt::kAlt)
    n /= 2;
  return n;
}

FrobeniusInput sym_alt_frobenius_input(SymAlt v, std::uint64_t p) {
  require_prime_above_5(p);
  FrobeniusInput in;
  in.k = p;
  in.l = sym_alt_l(v, p);
  in.index = factorial(p - 2);
  for (auto s : divisors(in.l))
    if (s != 1)
      in.normalizer_orders[s] = sym_alt_normalizer_order(v, p, s);
  return in;
}

namespace {

// (p-2)! + p - 1 + p sum_{1 != d | l} mu(d) phi(d) d^((p-1)/d - 1) ((p-1)/d - 1)!
BigInt sym_alt_display(std::uint64_t p, std::uint64_t l) {
  BigInt sum = 0;
  for (auto d : divisors(l)) {
    if (d == 1 || mobius(d) == 0)
      continue;
    const std::uint64_t m = (p - 1) / d;
    sum += mobius(d) * big(euler_phi(d)) * power(big(d), m - 1) * factorial(m - 1);
  }
  return factorial(p - 2) + (p - 1) + big(p) * sum;
}

} // namespace

BigInt val_sym_p(std::uint64_t p) {
  require_prime_above_5(p);
  return sym_alt_display(p, p - 1);
}

BigInt val_alt_p(std::uint64_t p) {
  require_prime_above_5(p);
  return sym_alt_display(p, (p - 1) / 2);
}

std::optional<std::string> val_alt_p_warning(std::uint64_t p) {
  if (p == 7 || p == 11 || p == 17 || p == 23)
    return "AGL_1(" + std::to_string(p) + ") n A_" + std::to_string(p) +
           " is not maximal; the formula value need not be the valency";
  return std::nullopt;
}

BigInt mult_sym_p(std::uint64_t p, std::uint64_t d) {
  require_prime_above_5(p);
  require_proper_divisor(d, p - 1);
  if (d == 1)
    return big(euler_phi(p - 1)) - 1;
  BigInt sum = 0;
  for (auto e : divisors(d)) {
    const std::uint64_t s = (p - 1) * e / d, t = d / e;
    sum += mobius(e) * big(euler_phi(s)) * power(big(s), t) * factorial(t);
  }
  return nonneg_integer(ratio(sum, big(d) * (p - 1)), "S_p multiplicity");
}

BigInt mult_alt_p(std::uint64_t p, std::uint64_t d) {
  require_prime_above_5(p);
  const std::uint64_t l = (p - 1) / 2;
  require_proper_divisor(d, l);
  if (d == 1)
    return big(euler_phi(l)) * l - 1;
  BigInt sum = 0;
  for (auto e : divisors(d)) {
    const std::uint64_t s = (p - 1) * e / (2 * d), t = 2 * d / e;
    sum += mobius(e) * big(euler_phi(s)) * power(big(s), t) * factorial(t);
  }
  return nonneg_integer(ratio(sum, big(d) * (p - 1)), "A_p multiplicity");
}

SubdegreeReport sym_alt_report(SymAlt v, std::uint64_t p) {
  require_prime_above_5(p);
  const std::uint64_t l = sym_alt_l(v, p);
  SubdegreeReport r;
  r.group_name = (v == SymAlt::kSym ? "S" : "A") + std::to_string(p);
  r.order_H = big(p) * l;
  r.index = factorial(p - 2);
  r.order_G = r.order_H * r.index;
  r.method = Method::kClosedForm;
  r.valency = v == SymAlt::kSym ? val_sym_p(p) : val_alt_p(p);
  add_subdegree(r, 1, 1);
  for (auto d : divisors(l))
    if (d != l)
      add_subdegree(r, big(d) * p, v == SymAlt::kSym ? mult_sym_p(p, d) : mult_alt_p(p, d));
  add_subdegree(r, r.order_H, exact_integer(ratio(r.valency, r.order_H), "valency / |H|"));
  finalize_checks(r);
  return r;
}

std::string torus_name(Torus t) { return t == Torus::kSplit ? "split" : "nonsplit"; }

Torus parse_torus(const std::string &s) {
  if (s == "split")
    return Torus::kSplit;
  if (s == "nonsplit")
    return Torus::kNonsplit;
  throw std::invalid_argument("torus case must be split or nonsplit, got '" + s + "'");
}

BigInt val_psl2(std::uint64_t q, Torus t) {
  if (q % 2 == 0 || !prime_power(q))
    throw std::invalid_argument("q must be an odd prime power");
  const BigInt Q = big(q);
  if (t == Torus::kSplit) {
    if (q < 13)
      throw std::invalid_argument("split case needs q >= 13");
    return q % 4 == 1 ? (Q - 1) * (Q + 7) / 4 : (Q - 1) * (Q + 5) / 4;
  }
  if (q < 11)
    throw std::invalid_argument("nonsplit case needs q >= 11");
  return q % 4 == 1 ? (Q + 1) * (Q - 1) / 4 : (Q + 1) * (Q - 3) / 4;
}

BigInt val_pgl2(std::uint64_t q, Torus t) {
  if (q < 7 || !prime_power(q))
    throw std::invalid_argument("q must be a prime power >= 7");
  return t == Torus::kSplit ? big(2 * (q - 1)) : BigInt(0);
}

BigInt pgl_order(std::uint64_t r, std::uint64_t q, Sign eps) {
  const BigInt Q = big(q);
  BigInt order = power(Q, r * (r - 1) / 2);
  for (std::uint64_t i = 2; i <= r; ++i) {
    const int e = (i % 2 == 0) ? 1 : sign_value(eps);
    order *= power(Q, i) - e;
  }
  return order;
}

LrEpsParams lr_eps_params(std::uint64_t r, std::uint64_t q, Sign eps) {
  if (r < 3 || !is_prime(r))
    throw std::invalid_argument("r must be an odd prime");
  if (!prime_power(q))
    throw std::invalid_argument("q must be a prime power");
  if (eps == Sign::kMinus && ((r == 3 && (q == 2 || q == 3)) || (r == 5 && q == 2)))
    throw std::invalid_argument("U_" + std::to_string(r) + "(" + std::to_string(q) + ") is excluded");
  LrEpsParams P;
  P.r = r;
  P.q = q;
  P.eps = eps;
  const int e = sign_value(eps);
  const BigInt Q = big(q), qe = Q - e;
  P.a_sec7 = (power(Q, r) - e) / qe;
  const std::uint64_t g = qe % r == 0 ? r : 1;
  P.r_divides_q_minus_eps = g == r;
  P.a_thm14 = P.a_sec7 / g;
  P.k = q % r == 0 ? 0 : multiplicative_order(q, r);

  if (q % r == 0) {
    P.N = big(r - 1) * power(Q, r - 1);
  } else if (P.r_divides_q_minus_eps) {
    P.N = big(r * (r - 1)) * power(qe, r - 1);
  } else {
    const std::uint64_t k = P.k;
    BigInt base;
    std::uint64_t num, den;
    if (eps == Sign::kPlus || k % 4 == 0) {
      base = power(Q, k) - 1, num = r - 1, den = k;
    } else if (k % 4 == 2) {
      base = power(Q, k / 2) + 1, num = 2 * r - 2, den = k;
    } else {
      base = power(Q, 2 * k) - 1, num = r - 1, den = 2 * k;
    }
    if (num % den != 0)
      throw Inconsistency("non-integral exponent in |N_G(<sigma>)|");
    P.N = big(r - 1) * power(base, num / den);
  }
  P.order_G = pgl_order(r, q, eps);
  P.order_socle = P.order_G / g;
  P.order_H = P.a_sec7 * r;
  P.index = P.order_G / P.order_H;
  return P;
}

SubdegreeReport lr_eps_subdegrees(std::uint64_t r, std::uint64_t q, Sign eps, LrVariant v) {
  const LrEpsParams P = lr_eps_params(r, q, eps);
  const BigInt R = big(r), a = P.a_sec7;
  const char sign = eps == Sign::kPlus ? '+' : '-';
  SubdegreeReport rep;
  rep.method = Method::kClosedForm;
  rep.index = P.index;
  add_subdegree(rep, 1, 1);

  if (!P.r_divides_q_minus_eps) {
    // soc(G) = G here, so both variants coincide.
    rep.group_name = "PGL" + std::string(1, sign) + "(" + std::to_string(r) + "," + std::to_string(q) + ")";
    rep.order_G = P.order_G;
    rep.order_H = P.order_H;
    rep.valency = nonneg_integer(BigRational(P.index + a - 1) - ratio(a * P.N, R), "valency");
    add_subdegree(rep, a, nonneg_integer(ratio(P.N - R, R), "m(|H|/r)"));
  } else if (v == LrVariant::kSocle) {
    rep.group_name = "L" + std::string(1, sign) + "(" + std::to_string(r) + "," + std::to_string(q) + ")";
    rep.order_G = P.order_socle;
    rep.order_H = a;
    const BigInt n_soc = P.N / R;
    rep.valency = nonneg_integer(BigRational(P.index + a / R - 1) - ratio(a * n_soc, R * R), "socle valency");
    add_subdegree(rep, a / R, nonneg_integer(ratio(n_soc - R, R), "m(a/r)"));
  } else {
    rep.group_name = "PGL" + std::string(1, sign) + "(" + std::to_string(r) + "," + std::to_string(q) + ")";
    rep.order_G = P.order_G;
    rep.order_H = P.order_H;
    const BigInt H = P.order_H, qe = big(q) - sign_value(eps);
    const BigInt qe_r1 = power(qe, r - 1);
    BigRational val = BigRational(P.index) - ratio(H * (r - 1) * ((r - 1) * (H / R - R) + qe_r1), power(R, 3)) +
                      ratio(H, R * R) - 1;
    rep.valency = nonneg_integer(val, "valency");
    BigInt num = R * (r - 1) * qe_r1 - power(R, 4) + power(R, 3) - R * R + big((r - 1) * (r - 1)) * H;
    add_subdegree(rep, a, nonneg_integer(ratio(num, power(R, 3)), "m(a)"));
    add_subdegree(rep, a / R, R - 1);
  }
  add_subdegree(rep, rep.order_H, exact_integer(ratio(rep.valency, rep.order_H), "valency / |H|"));
  finalize_checks(rep);
  if (!rep.checks.sum_rule)
    throw Inconsistency("subdegrees of " + rep.group_name + " violate the sum rule");
  return rep;
}

BigInt corollary_r3_check(std::uint64_t r, std::uint64_t q, Sign eps) {
  const LrEpsParams P = lr_eps_params(r, q, eps);
  if (!P.r_divides_q_minus_eps)
    throw std::invalid_argument("r does not divide q - e");
  return power(big(r), 3);
}

bool is_fermat_prime(std::uint64_t p) { return p >= 3 && is_prime(p) && power_of_two(p - 1); }
bool is_mersenne_prime(std::uint64_t p) { return p >= 3 && is_prime(p) && power_of_two(p + 1); }

std::optional<PrimePowerFamily> parse_family(const std::string &tag) {
  static const std::pair<const char *, PrimePowerFamily> tags[] = {
      {"psl2-split", PrimePowerFamily::kPsl2Split}, {"psl2-nonsplit", PrimePowerFamily::kPsl2Nonsplit},
      {"pgl2-split", PrimePowerFamily::kPgl2Split}, {"pgl2-nonsplit", PrimePowerFamily::kPgl2Nonsplit},
      {"pgl2-9", PrimePowerFamily::kPgl2_9},        {"m10", PrimePowerFamily::kM10},
      {"pgammal2-9", PrimePowerFamily::kPGammaL2_9}, {"lreps", PrimePowerFamily::kLrEps},
  };
  for (auto [t, f] : tags)
    if (tag == t)
      return f;
  return std::nullopt;
}

std::string family_tag(PrimePowerFamily f) {
  switch (f) {
  case PrimePowerFamily::kPsl2Split: return "psl2-split";
  case PrimePowerFamily::kPsl2Nonsplit: return "psl2-nonsplit";
  case PrimePowerFamily::kPgl2Split: return "pgl2-split";
  case PrimePowerFamily::kPgl2Nonsplit: return "pgl2-nonsplit";
  case PrimePowerFamily::kPgl2_9: return "pgl2-9";
  case PrimePowerFamily::kM10: return "m10";
  case PrimePowerFamily::kPGammaL2_9: return "pgammal2-9";
  case PrimePowerFamily::kLrEps: return "lreps";
  }
  return "?";
}

ClassificationResult classify_prime_power_stabiliser(const FamilyParams &fp) {
  ClassificationResult res;
  const std::uint64_t q = fp.q;
  auto accept = [&](std::string row, std::optional<BigInt> val) {
    res.row_accepted = true;
    res.row = std::move(row);
    res.valency = std::move(val);
    res.prime_power_valency = res.valency && is_prime_power(*res.valency);
  };
  auto reject = [&](std::string why) {
    res.row_accepted = false;
    res.row = std::move(why);
  };
  const std::string qs = std::to_string(q);
  switch (fp.family) {
  case PrimePowerFamily::kPsl2Split:
    if (q >= 17 && is_fermat_prime(q))
      accept("L2(" + qs + "), D" + std::to_string(q - 1) + ": q >= 17 a Fermat prime", val_psl2(q, Torus::kSplit));
    else
      reject("L2(q), D(q-1) has 2-group stabiliser only for q >= 17 a Fermat prime");
    break;
  case PrimePowerFamily::kPsl2Nonsplit:
    if (q >= 31 && is_mersenne_prime(q))
      accept("L2(" + qs + "), D" + std::to_string(q + 1) + ": q >= 31 a Mersenne prime",
             val_psl2(q, Torus::kNonsplit));
    else
      reject("L2(q), D(q+1) has 2-group stabiliser only for q >= 31 a Mersenne prime");
    break;
  case PrimePowerFamily::kPgl2Split:
    if (q == 9)
      accept("PGL2(9), D16", val_pgl2(9, Torus::kSplit));
    else if (q >= 17 && is_fermat_prime(q))
      accept("PGL2(" + qs + "), D" + std::to_string(2 * (q - 1)) + ": q >= 17 a Fermat prime",
             val_pgl2(q, Torus::kSplit));
    else
      reject("PGL2(q), D(2(q-1)) has 2-group stabiliser only for q = 9 or q >= 17 a Fermat prime");
    break;
  case PrimePowerFamily::kPgl2Nonsplit:
    if (q >= 7 && is_mersenne_prime(q))
      accept("PGL2(" + qs + "), D" + std::to_string(2 * (q + 1)) + ": q >= 7 a Mersenne prime",
             val_pgl2(q, Torus::kNonsplit));
    else
      reject("PGL2(q), D(2(q+1)) has 2-group stabiliser only for q >= 7 a Mersenne prime");
    break;
  case PrimePowerFamily::kPgl2_9:
    accept("PGL2(9), D16", val_pgl2(9, Torus::kSplit));
    break;
  case PrimePowerFamily::kM10:
    accept("M10, 8:2", BigInt(32));
    break;
  case PrimePowerFamily::kPGammaL2_9:
    // On the list, but the valency is not a prime power; no closed form here.
    accept("PGammaL2(9), 8:2^2", std::nullopt);
    break;
  case PrimePowerFamily::kLrEps: {
    const LrEpsParams P = lr_eps_params(fp.r, q, fp.eps);
    const BigInt h0 = P.a_thm14 * fp.r;
    if (is_prime_power(h0)) {
      reject("L_r^e(q), Z_a:Z_r: |H_0| = " + to_string(h0) + " is a prime power, outside the classified range");
      break;
    }
    std::string why = "L_r^e(q), Z_a:Z_r does not arise: |H_0| = a r = " + to_string(h0) + " is not a prime power";
    if (auto s = zsigmondy_primitive_prime(q, static_cast<unsigned>(fp.r), fp.eps))
      why += " (primitive prime divisor " + std::to_string(*s) + " of q^r - e divides it)";
    reject(why);
    break;
  }
  }
  return res;
}

} // namespace saxl
