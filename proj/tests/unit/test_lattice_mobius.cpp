#include <doctest.h>

#include <map>
#include <set>

#include "saxl/constructions.hpp"
#include "saxl/incidence.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/subgroup_lattice.hpp"

using namespace saxl;

namespace {

Permutation P(const char *text, std::size_t n) { return Permutation::parse(text, n); }

IncidenceMatrix matrix(std::vector<std::vector<long>> rows) {
  IncidenceMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.labels.push_back("c" + std::to_string(i));
    std::vector<BigInt> r;
    for (long v : rows[i])
      r.emplace_back(v);
    m.entries.push_back(std::move(r));
  }
  return m;
}

// Sum of 1/phi(ord h) over h, i.e. the number of cyclic subgroups.
std::size_t count_cyclic(const Subgroup &H) {
  std::map<std::uint64_t, std::size_t> by_order;
  for (const auto &h : H.elements())
    ++by_order[h.order()];
  std::size_t n = 0;
  for (auto [o, c] : by_order)
    n += c / euler_phi(o);
  return n;
}

void check_table_invariants(const Subgroup &H) {
  const SubgroupClassTable t(H);
  std::size_t total = 0, cyclic = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto &c = t.classes()[i];
    CHECK(c.class_size * c.normalizer_order == H.order());
    total += c.class_size;
    if (c.cyclic)
      cyclic += c.class_size;
    CHECK(t.eta(t.ambient().trivial(), i) == c.class_size);
    CHECK(t.eta(c.representative, t.size() - 1) == 1);
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto &d = t.classes()[j];
      const std::size_t e = t.eta(c.representative, j);
      CHECK(e <= d.class_size);
      if (d.order % c.order != 0)
        CHECK(e == 0);
    }
  }
  CHECK(total == t.total_subgroups());
  CHECK(cyclic == count_cyclic(H));
}

} // namespace

TEST_CASE("subgroup classes of Z6 and S3") {
  const SubgroupClassTable z6(Subgroup::generated_by({P("(1 2 3 4 5 6)", 6)}, 6));
  REQUIRE(z6.size() == 4);
  for (const auto &c : z6.classes())
    CHECK(c.class_size == 1);

  const SubgroupClassTable s3(Subgroup::generated_by({P("(1 2 3)", 3), P("(1 2)", 3)}, 3));
  REQUIRE(s3.size() == 4);
  std::vector<std::pair<std::size_t, std::size_t>> got;
  for (const auto &c : s3.classes())
    got.emplace_back(c.order, c.class_size);
  CHECK(got == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});
}

TEST_CASE("class table invariants") {
  check_table_invariants(Subgroup::generated_by({P("(1 2 3 4)", 4), P("(1 3)", 4)}, 4));
  check_table_invariants(Subgroup::generated_by({P("(1 2 3 4)", 4), P("(1 2)", 4)}, 4));
  check_table_invariants(build_psl2_action(17, Torus::kSplit, Linear2::kPSL).H);
  check_table_invariants(build_sym_alt_action(7, SymAlt::kSym).H);
}

TEST_CASE("Singer normalizer lattice in PGL3(7)") {
  const GroupAction a = build_singer_normalizer_action(3, 7, LrVariant::kFull);
  const SubgroupClassTable t(a.H);
  check_table_invariants(a.H);
  const std::size_t n = a.space.degree();
  const Permutation &x = a.named.at("x");
  const Permutation &s = a.named.at("sigma");
  auto cls = [&](std::vector<Permutation> g) { return t.class_of(Subgroup::generated_by(g, n)); };
  const std::size_t c_sigma = cls({s});
  const std::set<std::size_t> distinct{cls({}), c_sigma, cls({compose(x, s)}), cls({compose(compose(x, x), s)}),
                                       cls({x}), cls({x, s}), t.size() - 1};
  CHECK(distinct.size() == 7);
  CHECK(t.eta(t.ambient().trivial(), c_sigma) == 19);
  CHECK(t.classes()[cls({x, s})].order == 9);
}

TEST_CASE("incidence inversion") {
  const IncidenceMatrix I = IncidenceMatrix::identity({"a", "b", "c"});
  CHECK(invert_incidence(I).is_identity());

  const IncidenceMatrix chain = matrix({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  const IncidenceMatrix ci = invert_incidence(chain);
  CHECK(ci.entries[0][1] == -1);
  CHECK(ci.entries[1][2] == -1);
  CHECK(ci.entries[0][2] == 0);
  CHECK(multiply(chain, ci).is_identity());

  const IncidenceMatrix M = matrix({{1, 19, 38, 19, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}});
  const IncidenceMatrix Mi = invert_incidence(M);
  CHECK(Mi.entries[0] == std::vector<BigInt>{1, -19, -38, 38, 18});
  CHECK(multiply(M, Mi).is_identity());
  CHECK(multiply(Mi, M).is_identity());

  CHECK_THROWS_AS(invert_incidence(matrix({{1, 0}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(invert_incidence(matrix({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("linear extensions") {
  // divisibility on 1, 2, 3, 6 listed in a shuffled order
  const std::vector<int> v{6, 2, 1, 3};
  auto order = linear_extension(4, [&](std::size_t i, std::size_t j) { return v[j] % v[i] == 0; });
  std::vector<int> seen;
  for (auto i : order)
    seen.push_back(v[i]);
  CHECK(seen == std::vector<int>{1, 2, 3, 6});
  CHECK_THROWS_AS(linear_extension(2, [](std::size_t, std::size_t) { return true; }), std::invalid_argument);
}

TEST_CASE("arithmetic functions") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(12) == 4);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(is_prime((std::uint64_t{1} << 31) - 1));
  CHECK_FALSE(is_prime(std::uint64_t{561}));
  CHECK(factorize(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
  CHECK(factorize(std::uint64_t{1000000007} * 998244353) == std::vector<std::uint64_t>{998244353, 1000000007});
  CHECK(prime_power(128) == std::optional<std::pair<std::uint64_t, unsigned>>({2, 7}));
  CHECK_FALSE(prime_power(12));
}

TEST_CASE("Mobius and totient sums") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    long mu = 0;
    std::uint64_t phi = 0;
    for (auto d : divisors(n)) {
      mu += mobius(d);
      phi += euler_phi(d);
    }
    REQUIRE(mu == (n == 1 ? 1 : 0));
    REQUIRE(phi == n);
  }
}

TEST_CASE("primitive prime divisors") {
  CHECK_FALSE(zsigmondy_primitive_prime(2, 6, Sign::kPlus));
  CHECK_FALSE(zsigmondy_primitive_prime(2, 3, Sign::kMinus));
  CHECK(zsigmondy_primitive_prime(2, 4, Sign::kPlus) == 5u);
  CHECK(zsigmondy_primitive_prime(7, 3, Sign::kPlus) == 19u);

  // brute-force oracle: s | q^n - e and s does not divide q^j - e for j < n
  for (std::uint64_t q = 2; q <= 12; ++q) {
    for (unsigned n = 2; n <= 8; ++n) {
      for (Sign e : {Sign::kPlus, Sign::kMinus}) {
        const BigInt top = power(big(q), n) - sign_value(e);
        auto s = zsigmondy_primitive_prime(q, n, e);
        if (!s)
          continue;
        CAPTURE(q);
        CAPTURE(n);
        CHECK(is_prime(*s));
        CHECK(top % static_cast<unsigned long>(*s) == 0);
        for (unsigned j = 1; j < n; ++j)
          CHECK((power(big(q), j) - sign_value(e)) % static_cast<unsigned long>(*s) != 0);
      }
    }
  }
}
