#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saxl/bigint.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/report.hpp"

namespace saxl {

// Stabiliser H = K:L Frobenius with K cyclic of order k and L = <y> of order l.
// normalizer_orders[s] = |N_G(<y^(l/s)>)|, the normalizer of the subgroup of
// L of order s, for every divisor s > 1 of l.
struct FrobeniusInput {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::map<std::uint64_t, BigInt> normalizer_orders;
  BigInt index;
};

// Throws std::invalid_argument on a broken precondition and Inconsistency when
// a result is not a non-negative integer.
void check_frobenius_input(const FrobeniusInput &in);
BigInt frobenius_valency(const FrobeniusInput &in);
// (d*k, multiplicity) for each proper divisor d of l, ascending.
std::vector<SubdegreeEntry> frobenius_multiplicities(const FrobeniusInput &in);
SubdegreeReport frobenius_report(const FrobeniusInput &in, const std::string &group_name);

// S_p / AGL_1(p) and A_p / AGL_1(p) n A_p.
enum class SymAlt { kSym, kAlt };

// |N_G(C)| for C <= L of order s, in S_p or A_p.
BigInt sym_alt_normalizer_order(SymAlt v, std::uint64_t p, std::uint64_t s);
FrobeniusInput sym_alt_frobenius_input(SymAlt v, std::uint64_t p);

BigInt val_sym_p(std::uint64_t p);
BigInt val_alt_p(std::uint64_t p);
// Set for p in {7, 11, 17, 23}, where H is not maximal in A_p.
std::optional<std::string> val_alt_p_warning(std::uint64_t p);
// d a proper divisor of p-1 (sym) or (p-1)/2 (alt).
BigInt mult_sym_p(std::uint64_t p, std::uint64_t d);
BigInt mult_alt_p(std::uint64_t p, std::uint64_t d);
SubdegreeReport sym_alt_report(SymAlt v, std::uint64_t p);

enum class Torus { kSplit, kNonsplit };
std::string torus_name(Torus t);
Torus parse_torus(const std::string &s);

// PSL_2(q), q odd, H = D_(q-1) (split, q >= 13) or D_(q+1) (nonsplit, q >= 11).
BigInt val_psl2(std::uint64_t q, Torus t);
// PGL_2(q), q >= 7, H = D_(2(q-1)) or D_(2(q+1)).
BigInt val_pgl2(std::uint64_t q, Torus t);

struct LrEpsParams {
  std::uint64_t r = 0;
  std::uint64_t q = 0;
  Sign eps = Sign::kPlus;
  BigInt a_sec7;  // (q^r - e)/(q - e), the order of the Singer-type cyclic part of H in PGL
  BigInt a_thm14; // a_sec7 / (r, q - e)
  std::uint64_t k = 0; // least k with r | q^k - 1; 0 when r | q
  BigInt N;            // |N_G(<sigma>)|
  BigInt order_G;      // |PGL_r^e(q)|
  BigInt order_socle;  // |L_r^e(q)|
  BigInt order_H;      // a_sec7 * r
  BigInt index;
  bool r_divides_q_minus_eps = false;
};

// Throws std::invalid_argument for r not an odd prime, q not a prime power, or
// the excluded socles U_3(2), U_3(3), U_5(2).
LrEpsParams lr_eps_params(std::uint64_t r, std::uint64_t q, Sign eps);

enum class LrVariant { kFull, kSocle };

// Subdegrees of PGL_r^e(q) (full) or L_r^e(q) (socle) on the cosets of the
// Singer normalizer. The socle variant reads |H| as |H n soc(G)| = a_sec7, and
// its multiplicity of a/r is (N/r - r)/r. Throws Inconsistency if the sum rule
// or integrality fails.
SubdegreeReport lr_eps_subdegrees(std::uint64_t r, std::uint64_t q, Sign eps, LrVariant v);

// |N_G(<x, sigma>)| = r^3; throws std::invalid_argument unless r | q - e.
BigInt corollary_r3_check(std::uint64_t r, std::uint64_t q, Sign eps);

// Rows of the classification of almost simple primitive groups with
// prime-power stabiliser order.
enum class PrimePowerFamily {
  kPsl2Split,    // L_2(q), D_(q-1)
  kPsl2Nonsplit, // L_2(q), D_(q+1)
  kPgl2Split,    // PGL_2(q), D_(2(q-1))
  kPgl2Nonsplit, // PGL_2(q), D_(2(q+1))
  kPgl2_9,       // PGL_2(9), D_16
  kM10,          // M_10, 8:2
  kPGammaL2_9,   // PGammaL_2(9), 8:2^2
  kLrEps,        // L_r^e(q), Z_a:Z_r
};

struct FamilyParams {
  PrimePowerFamily family = PrimePowerFamily::kM10;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  Sign eps = Sign::kPlus;
};

struct ClassificationResult {
  bool row_accepted = false;
  std::string row;    // the accepted row, or the reason for rejection
  std::optional<BigInt> valency;
  bool prime_power_valency = false;
};

std::optional<PrimePowerFamily> parse_family(const std::string &tag);
std::string family_tag(PrimePowerFamily f);
ClassificationResult classify_prime_power_stabiliser(const FamilyParams &fp);

bool is_fermat_prime(std::uint64_t p);
bool is_mersenne_prime(std::uint64_t p);

// Order of PGL_r^e(q).
BigInt pgl_order(std::uint64_t r, std::uint64_t q, Sign eps);

} // namespace saxl
