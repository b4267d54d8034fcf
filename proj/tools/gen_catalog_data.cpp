// Regenerates data/groups/*.json. The files are checked in; run this only to
// rebuild them: gen_catalog_data <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "saxl/conjugacy.hpp"
#include "saxl/constructions.hpp"
#include "saxl/group_file.hpp"
#include "saxl/linear_groups.hpp"

using namespace saxl;

namespace {

std::filesystem::path out_dir;

void write(const GroupFile &f, const std::string &file, const BigInt &order_G, std::size_t order_H) {
  auto a = group_action_from(f);
  if (a.G.order() != order_G || a.H.order() != order_H)
    throw std::runtime_error(file + ": got |G| = " + to_string(a.G.order()) + ", |H| = " +
                             std::to_string(a.H.order()));
  std::ofstream(out_dir / file) << group_file_to_json(f);
  std::cout << file << ": |G| = " << a.G.order() << ", |H| = " << a.H.order() << ", degree "
            << a.space.size() << "\n";
}

Permutation P(const char *s, std::size_t n) { return Permutation::parse(s, n); }

// Two random elements generating G, for a compact file.
std::vector<Permutation> two_generators(const PermGroup &G) {
  std::mt19937_64 rng(1);
  for (;;) {
    auto a = G.random_element(rng), b = G.random_element(rng);
    if (PermGroup({a, b}).order() == G.order())
      return {a, b};
  }
}

// Drops the fixed last point.
Permutation restrict_last(const Permutation &p) {
  std::vector<Point> img(p.images().begin(), p.images().end() - 1);
  return Permutation(img);
}

Subgroup normalizer(const PermGroup &G, const Permutation &c) {
  auto seed = Subgroup::generated_by({c}, G.degree());
  auto space = ActionSpace::conjugates(G.generators(), G.degree(), seed);
  return stabilizer_of_label(space, G, ActionSpace::base_label);
}

Permutation first_of_order(const PermGroup &G, std::size_t order) {
  for (const auto &g : G.elements(100000))
    if (g.order() == order)
      return g;
  throw std::runtime_error("no element of order " + std::to_string(order));
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_catalog_data <output-dir>\n";
    return 1;
  }
  out_dir = argv[1];
  std::filesystem::create_directories(out_dir);

  write({"A5 on the cosets of S3", 5, {P("(1 2 3 4 5)", 5), P("(1 2 3)", 5)},
         {P("(1 2 3)", 5), P("(1 2)(4 5)", 5)}},
        "a5_s3.json", 60, 6);

  // M10 as the point stabiliser of M11 on 11 points
  PermGroup m11({P("(1 2 3 4 5 6 7 8 9 10 11)", 11), P("(3 7 11 8)(4 10 5 6)", 11)});
  auto pts = ActionSpace::points(m11.generators(), 11, 10);
  PermGroup stab = stabilizer_group(pts, m11, 0);
  std::vector<Permutation> m10_gens;
  for (const auto &g : two_generators(stab))
    m10_gens.push_back(restrict_last(g));
  PermGroup m10(m10_gens);
  write({"M10 on the cosets of AGL1(5)", 10, m10_gens, normalizer(m10, first_of_order(m10, 5)).generators()},
        "m10_agl15.json", 720, 20);
  write({"M10 on the cosets of 8:2", 10, m10_gens, normalizer(m10, first_of_order(m10, 8)).generators()},
        "m10_8colon2.json", 720, 16);

  auto pgl29 = build_psl2_action(9, Torus::kSplit, Linear2::kPGL);
  write({"PGL2(9) on the cosets of D16", 10, pgl29.G.generators(), pgl29.H.generators()}, "pgl2_9_d16.json", 720,
        16);

  // PGammaL2(9): PGL2(9) and the field automorphism of F_9
  auto F9 = std::make_shared<const FiniteField>(3, 2);
  ProjectiveSpace line(F9, 9, 2);
  std::vector<Permutation> pgaml;
  for (const auto &m : line.gl_generators())
    pgaml.push_back(line.permutation_of(m));
  pgaml.push_back(line.field_automorphism(1));
  PermGroup pgaml_G(pgaml);
  Matrix torus = line.identity();
  torus[0] = line.primitive_scalar();
  write({"PGammaL2(9) on the cosets of 8:2^2", 10, pgaml,
         normalizer(pgaml_G, line.permutation_of(torus)).generators()},
        "pgaml2_9_8colon2sq.json", 1440, 32);

  // ASL2(3) on F_3^2, point (x, y) numbered 1 + x + 3y
  auto affine = [](int a, int b, int c, int d, int tx, int ty) {
    std::vector<Point> img(9);
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 3; ++x) {
        int nx = ((x * a + y * c + tx) % 3 + 3) % 3, ny = ((x * b + y * d + ty) % 3 + 3) % 3;
        img[x + 3 * y] = static_cast<Point>(nx + 3 * ny);
      }
    return Permutation(img);
  };
  write({"A9 on the cosets of ASL2(3)", 9, {P("(1 2 3 4 5 6 7 8 9)", 9), P("(1 2 3)", 9)},
         {affine(1, 0, 0, 1, 1, 0), affine(1, 0, 0, 1, 0, 1), affine(1, 1, 0, 1, 0, 0), affine(0, 1, -1, 0, 0, 0)}},
        "a9_asl23.json", 181440, 216);

  std::vector<Permutation> m23{P("(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23)", 23),
                               P("(3 17 10 7 9)(4 13 14 19 5)(8 18 11 12 23)(15 20 22 21 16)", 23)};
  PermGroup m23_G(m23);
  write({"M23 on the cosets of 23:11", 23, m23, normalizer(m23_G, m23[0]).generators()}, "m23_23colon11.json",
        10200960, 253);
  return 0;
}
