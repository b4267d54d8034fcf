#include "saxl/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "saxl/conjugacy.hpp"
#include "saxl/linear_groups.hpp"
#include "saxl/number_theory.hpp"

namespace saxl {

namespace {

std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(pp->first), pp->second};
}

std::vector<Permutation> perms_of(const ProjectiveSpace &P, const std::vector<Matrix> &ms) {
  std::vector<Permutation> out;
  for (const auto &m : ms)
    out.push_back(P.permutation_of(m));
  return out;
}

GroupAction finish(std::string name, std::vector<Permutation> gens, ActionSpace space, std::size_t cap) {
  PermGroup G(gens);
  Subgroup H = stabilizer_of_label(space, G, ActionSpace::base_label, cap);
  return GroupAction{std::move(name), std::move(G), std::move(space), std::move(H), {}};
}

void expect_order(const GroupAction &a, const BigInt &order) {
  if (big(a.H.order()) != order)
    throw Inconsistency(a.name + ": stabiliser has order " + std::to_string(a.H.order()) + ", expected " +
                        to_string(order));
}

} // namespace

GroupAction build_psl2_action(std::uint64_t q, Torus t, Linear2 kind, std::size_t cap) {
  auto [p, f] = split_prime_power(q);
  const std::string name = std::string(kind == Linear2::kPSL ? "PSL2(" : "PGL2(") + std::to_string(q) + ") " +
                           torus_name(t);
  const unsigned field_degree = t == Torus::kSplit ? f : 2 * f;
  auto E = std::make_shared<const FiniteField>(p, field_degree);
  ProjectiveSpace P(E, static_cast<std::uint32_t>(q), 2);
  auto gens = perms_of(P, kind == Linear2::kPSL ? P.sl_generators() : P.gl_generators());
  const std::uint64_t g = kind == Linear2::kPSL ? std::gcd<std::uint64_t>(2, q - 1) : 1;
  std::optional<GroupAction> out;
  if (t == Torus::kSplit) {
    std::vector<Point> base{static_cast<Point>(P.index_of({1, 0})), static_cast<Point>(P.index_of({0, 1}))};
    out.emplace(finish(name, gens, ActionSpace::subsets(gens, P.size(), base, cap), cap));
  } else {
    ExtensionBasis B(P);
    Permutation z = P.permutation_of(B.multiplication(E->generator()));
    auto seed = Subgroup::generated_by({z.pow(static_cast<long long>(g))}, P.size());
    out.emplace(finish(name, gens, ActionSpace::conjugates(gens, P.size(), seed, cap), cap));
    out->named.emplace("z", z);
  }
  const std::uint64_t torus = t == Torus::kSplit ? q - 1 : q + 1;
  expect_order(*out, big(2 * torus / g));
  return std::move(*out);
}

GroupAction build_singer_normalizer_action(std::uint64_t r, std::uint64_t q, LrVariant v, std::size_t cap) {
  if (r < 2 || !is_prime(r))
    throw std::invalid_argument("r must be prime");
  auto [p, f] = split_prime_power(q);
  auto E = std::make_shared<const FiniteField>(p, static_cast<unsigned>(f * r));
  ProjectiveSpace P(E, static_cast<std::uint32_t>(q), static_cast<unsigned>(r));
  ExtensionBasis B(P);
  const Permutation z = P.permutation_of(B.multiplication(E->generator()));
  const Permutation sigma = P.permutation_of(B.frobenius());
  const std::uint64_t a = P.size(); // (q^r - 1)/(q - 1)
  const std::uint64_t g = std::gcd(r, q - 1);
  const bool socle = v == LrVariant::kSocle;
  const std::string name = std::string(socle ? "L" : "PGL") + std::to_string(r) + "(" + std::to_string(q) + ")";
  auto gens = perms_of(P, socle ? P.sl_generators() : P.gl_generators());
  auto seed = Subgroup::generated_by({socle ? z.pow(static_cast<long long>(g)) : z}, P.size());
  GroupAction out = finish(name, gens, ActionSpace::conjugates(gens, P.size(), seed, cap), cap);
  out.named.emplace("z", z);
  if (!socle) {
    out.named.emplace("sigma", sigma);
    if (out.H != Subgroup::generated_by({z, sigma}, P.size()))
      throw Inconsistency(name + ": the stabiliser is not <z, sigma>");
    if ((q - 1) % r == 0)
      out.named.emplace("x", z.pow(static_cast<long long>(a / r)));
  }
  expect_order(out, big(a * r / (socle ? g : 1)));
  return out;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("primitive root of a non-prime");
  if (p == 2)
    return 1;
  for (std::uint64_t g = 2;; ++g)
    if (multiplicative_order(g, p) == p - 1)
      return g;
}

GroupAction build_sym_alt_action(std::uint64_t p, SymAlt v, std::size_t cap) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("p must be a prime >= 5");
  const bool alt = v == SymAlt::kAlt;
  std::vector<Point> cyc(p), y(p);
  const std::uint64_t g = least_primitive_root(p);
  for (std::uint64_t j = 0; j < p; ++j) {
    cyc[j] = static_cast<Point>((j + 1) % p);
    y[j] = static_cast<Point>(g * j % p);
  }
  const Permutation c(cyc);
  Permutation yy(y);
  if (alt)
    yy = compose(yy, yy);
  std::vector<Permutation> gens{c, alt ? Permutation::parse("(1 2 3)", p) : Permutation::parse("(1 2)", p)};
  auto seed = Subgroup::generated_by({c}, p);
  const std::string name = (alt ? "A" : "S") + std::to_string(p);
  GroupAction out = finish(name, gens, ActionSpace::conjugates(gens, p, seed, cap), cap);
  out.named.emplace("c", c);
  out.named.emplace("y", yy);
  expect_order(out, big(p * (alt ? (p - 1) / 2 : p - 1)));
  if (out.H != Subgroup::generated_by({c, yy}, p))
    throw Inconsistency(name + ": the stabiliser is not <c, y>");
  return out;
}

} // namespace saxl
