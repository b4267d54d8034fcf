#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "saxl/catalog.hpp"
#include "saxl/finite_field.hpp"
#include "saxl/group_file.hpp"
#include "saxl/linear_groups.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/suborbits.hpp"

using namespace saxl;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("saxl-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::create_directories(p);
  return p;
}

} // namespace

TEST_CASE("finite fields") {
  const FiniteField f7(7, 1);
  CHECK(f7.size() == 7);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.generator() == 3);

  const FiniteField f9(3, 2);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1
  const FiniteField f32(2, 5);
  CHECK(f32.size() == 32);
  CHECK(is_irreducible(f32.modulus(), 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2)); // (x + 1)^2

  CHECK_THROWS_AS(FiniteField(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(f9.inv(0), std::domain_error);
}

TEST_CASE("field arithmetic properties") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {7, 1}, {3, 2}, {2, 5}, {7, 3}, {2, 6}, {5, 4}, {2, 15}}) {
    const FiniteField F(p, k);
    CAPTURE(F.size());
    CHECK(is_irreducible(F.modulus(), p));
    CHECK(F.modulus().size() == k + 1);
    const std::uint64_t n = F.size() - 1;
    // generator order is exactly p^k - 1
    CHECK(F.pow(F.generator(), n) == 1);
    for (auto r : prime_divisors(n))
      CHECK(F.pow(F.generator(), n / r) != 1);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto a = pick(rng), b = pick(rng);
      REQUIRE(F.mul(a, F.inv(a)) == 1);
      REQUIRE(F.add(F.sub(a, b), b) == a);
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      REQUIRE(F.exp(F.log(a)) == a);
    }
  }
}

TEST_CASE("projective spaces and linear groups") {
  auto E = std::make_shared<const FiniteField>(7, 1);
  const ProjectiveSpace P(E, 7, 3);
  CHECK(P.size() == 57);
  CHECK(PermGroup([&] {
          std::vector<Permutation> g;
          for (const auto &m : P.gl_generators())
            g.push_back(P.permutation_of(m));
          return g;
        }())
            .order() == 5630688);
  const auto gens = P.gl_generators();
  const Matrix ab = P.multiply(gens[0], gens.back());
  CHECK(P.permutation_of(ab) == compose(P.permutation_of(gens[0]), P.permutation_of(gens.back())));
  for (const auto &m : P.sl_generators())
    CHECK(P.determinant(m) == 1);
}

TEST_CASE("constructions") {
  const GroupAction pgl7 = build_psl2_action(7, Torus::kSplit, Linear2::kPGL);
  CHECK(pgl7.space.size() == 28);
  CHECK(pgl7.H.order() == 12);
  const GroupAction psl13 = build_psl2_action(13, Torus::kSplit, Linear2::kPSL);
  CHECK(psl13.space.size() == 91);
  CHECK(psl13.H.order() == 12);
  const GroupAction pgl9 = build_psl2_action(9, Torus::kSplit, Linear2::kPGL);
  CHECK(pgl9.space.size() == 45);
  CHECK(suborbits_bruteforce(pgl9.space, pgl9.G, pgl9.H, pgl9.name).valency == 16);

  const GroupAction l32 = build_singer_normalizer_action(3, 2, LrVariant::kFull);
  CHECK(l32.G.order() == 168);
  CHECK(l32.H.order() == 21);
  CHECK(l32.space.size() == 8);
  const GroupAction g52 = build_singer_normalizer_action(5, 2, LrVariant::kFull);
  CHECK(g52.H.order() == 155);
  CHECK(g52.space.size() == 64512);

  const GroupAction s7 = build_sym_alt_action(7, SymAlt::kSym);
  CHECK(s7.space.size() == 120);
  CHECK(s7.H.order() == 42);
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(41) == 6);
  CHECK_THROWS_AS(build_sym_alt_action(9, SymAlt::kSym), std::invalid_argument);
  CHECK_THROWS_AS(build_psl2_action(10, Torus::kSplit, Linear2::kPSL), std::invalid_argument);
  CHECK_THROWS_AS(build_sym_alt_action(11, SymAlt::kSym, 1000), CapExceeded);
}

TEST_CASE("group files") {
  const GroupFile f = parse_group_file(
      R"({"name": "S4", "degree": 4, "generators": [[[1,2,3,4]], [[1,2]]], "stabilizer_generators": [[[1,2,3]], [[1,2]]]})");
  CHECK(f.generators.size() == 2);
  const GroupAction a = group_action_from(f);
  CHECK(a.G.order() == 24);
  CHECK(a.H.order() == 6);
  CHECK(a.space.size() == 4);
  CHECK(parse_group_file(group_file_to_json(f)).generators == f.generators);

  // a non-bijection names the generator and the point
  try {
    parse_group_file(R"({"name": "x", "degree": 4, "generators": [[[1,2]], [[1,2],[2,3]]], "stabilizer_generators": []})");
    FAIL("accepted a non-bijection");
  } catch (const ParseError &e) {
    const std::string what = e.what();
    CHECK(what.find("generators[1]") != std::string::npos);
    CHECK(what.find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_file(R"({"name": "x", "degree": 3, "generators": [[[1,4]]], "stabilizer_generators": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_group_file(R"({"name": "x", "degree": 3})"), ParseError);
  CHECK_THROWS_AS(parse_group_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_group_file(R"({"name": "x", "degree": 3, "generators": [], "stabilizer_generators": []})"),
                  ParseError);

  // H not inside G
  CHECK_THROWS_AS(group_action_from(parse_group_file(
                      R"({"name": "x", "degree": 4, "generators": [[[1,2,3]]], "stabilizer_generators": [[[1,2]]]})")),
                  std::invalid_argument);
}

TEST_CASE("report JSON round trip") {
  const auto e = find_entry("m10_8colon2");
  REQUIRE(e);
  const GroupAction a = e->build(kDefaultLabelCap);
  SubdegreeReport r = suborbits_bruteforce(a.space, a.G, a.H, a.name);
  CHECK(report_from_json(report_to_json(r)) == r);
  r.checks.cross_method_agreement = true;
  r.method = Method::kDeltaEngine;
  CHECK(report_from_json(report_to_json(r, -1)) == r);
  const std::string text = report_to_json(r);
  for (const char *key : {"\"group\"", "\"order_G\"", "\"subdegrees\"", "\"valency\"", "\"cross_method_agreement\""})
    CHECK(text.find(key) != std::string::npos);
  CHECK(text.find("\"valency\": \"32\"") != std::string::npos);
  CHECK_THROWS_AS(report_from_json("{}"), ParseError);
  CHECK_THROWS_AS(report_from_json(R"({"group": 1})"), ParseError);
}

TEST_CASE("catalog entries reproduce their expected values") {
  for (const auto &e : catalog()) {
    CAPTURE(e.name);
    const GroupAction a = e.build(kDefaultLabelCap);
    const auto bad = check_expected(e, a);
    for (const auto &b : bad)
      FAIL_CHECK(b);
    CHECK(e.expected.count("index"));
  }
}

TEST_CASE("catalog lookup") {
  CHECK(find_entry("pgl3_7"));
  CHECK(find_entry("psl2_23_split"));
  CHECK(find_entry("pgl2_25_nonsplit"));
  CHECK(find_entry("sym_13"));
  CHECK(find_entry("singer_3_5_socle"));
  CHECK_FALSE(find_entry("sym_12"));
  CHECK_FALSE(find_entry("psl2_6_split"));
  CHECK_FALSE(find_entry("singer_4_3"));
  CHECK_FALSE(find_entry("nope"));
  const auto s = find_entry("singer_3_4");
  REQUIRE(s);
  CHECK(s->expected.at("valency") == 756);
  const auto alt = find_entry("alt_11");
  REQUIRE(alt);
  CHECK_FALSE(alt->primitive);
  CHECK_FALSE(alt->expected.count("valency"));
}

TEST_CASE("expected-value mismatches are reported with both values") {
  auto e = *find_entry("a5_s3");
  e.expected["valency"] = 7;
  const GroupAction a = e.build(kDefaultLabelCap);
  const SubdegreeReport r = suborbits_bruteforce(a.space, a.G, a.H, a.name);
  const auto bad = check_expected(e, a, &r);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].find("expected 7, got 6") != std::string::npos);
}

TEST_CASE("report cache") {
  const fs::path dir = scratch_dir("cache");
  const ReportCache cache(dir);
  CHECK_FALSE(cache.load("a5_s3", "all"));

  const auto e = find_entry("a5_s3");
  const GroupAction a = e->build(kDefaultLabelCap);
  CachedResult c{suborbits_bruteforce(a.space, a.G, a.H, a.name), {"C0|1", "C1|6"}, {60, 6}, {36, 6}};
  cache.store("a5_s3", "all", c);
  const auto path = cache.path_for("a5_s3", "all");
  CHECK(path.filename().string() == "a5_s3.all.v" + library_version() + ".json");
  CHECK(fs::exists(path));
  for (const auto &f : fs::directory_iterator(dir))
    CHECK(f.path().extension() == ".json");

  const auto back = cache.load("a5_s3", "all");
  REQUIRE(back);
  CHECK(back->report == c.report);
  CHECK(back->labels == c.labels);
  CHECK(back->Delta == c.Delta);
  CHECK(back->delta == c.delta);

  std::ofstream(path) << "{ truncated";
  CHECK_FALSE(cache.load("a5_s3", "all"));
  fs::remove_all(dir);
}

TEST_CASE("data directory override") {
  const fs::path built = data_dir();
  CHECK(fs::exists(built / "groups" / "a5_s3.json"));
  ::setenv("SAXL_DATA_DIR", "/nonexistent", 1);
  CHECK(data_dir() == fs::path("/nonexistent"));
  CHECK_THROWS_AS(find_entry("a5_s3")->build(kDefaultLabelCap), ParseError);
  ::unsetenv("SAXL_DATA_DIR");
  CHECK(data_dir() == built);
}
