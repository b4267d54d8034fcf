#include "saxl/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "saxl/group_file.hpp"
#include "saxl/number_theory.hpp"

#ifndef SAXL_DATA_DIR_DEFAULT
#define SAXL_DATA_DIR_DEFAULT "data"
#endif
#ifndef SAXL_VERSION
#define SAXL_VERSION "0.0.0"
#endif

namespace saxl {

std::string library_version() { return SAXL_VERSION; }

std::filesystem::path data_dir() {
  if (const char *env = std::getenv("SAXL_DATA_DIR"); env && *env)
    return env;
  return SAXL_DATA_DIR_DEFAULT;
}

namespace {

using Expected = std::map<std::string, BigInt>;

Expected expect(BigInt G, BigInt H, std::optional<BigInt> val = std::nullopt) {
  Expected e{{"order_G", G}, {"order_H", H}, {"index", G / H}};
  if (val)
    e["valency"] = *val;
  return e;
}

CatalogEntry file_entry(std::string name, std::string file, std::string desc, Expected exp) {
  return {std::move(name), std::move(desc), std::move(exp), true,
          [file](std::size_t cap) { return load_group_file(data_dir() / "groups" / file, cap); }};
}

std::optional<CatalogEntry> psl2_entry(std::uint64_t q, Torus t, Linear2 kind) {
  if (q < 7 || !prime_power(q))
    return std::nullopt;
  const bool pgl = kind == Linear2::kPGL;
  const std::uint64_t g = pgl ? 1 : std::gcd<std::uint64_t>(2, q - 1);
  const BigInt order = big(q) * (q * q - 1) / g;
  const std::uint64_t h = 2 * (t == Torus::kSplit ? q - 1 : q + 1) / g;
  std::optional<BigInt> val;
  try {
    val = pgl ? val_pgl2(q, t) : val_psl2(q, t);
  } catch (const std::invalid_argument &) {
    // outside the range of the closed form
  }
  std::string name = std::string(pgl ? "pgl2_" : "psl2_") + std::to_string(q) + "_" + torus_name(t);
  std::string desc = std::string(pgl ? "PGL2(" : "PSL2(") + std::to_string(q) + ") on the cosets of D" +
                     std::to_string(h);
  return CatalogEntry{name, desc, expect(order, big(h), val), true,
                      [=](std::size_t cap) { return build_psl2_action(q, t, kind, cap); }};
}

std::optional<CatalogEntry> singer_entry(std::uint64_t r, std::uint64_t q, LrVariant v) {
  if (r < 3 || !is_prime(r) || !prime_power(q))
    return std::nullopt;
  const LrEpsParams P = lr_eps_params(r, q, Sign::kPlus);
  const bool socle = v == LrVariant::kSocle;
  const std::uint64_t g = std::gcd(r, q - 1);
  const BigInt G = socle ? P.order_socle : P.order_G;
  const BigInt H = socle ? P.order_H / g : P.order_H;
  std::string name = "singer_" + std::to_string(r) + "_" + std::to_string(q) + (socle ? "_socle" : "");
  std::string desc = std::string(socle ? "L" : "PGL") + std::to_string(r) + "(" + std::to_string(q) +
                     ") on the cosets of " + (socle ? "the Singer normalizer n soc" : "the Singer normalizer");
  return CatalogEntry{name, desc, expect(G, H, lr_eps_subdegrees(r, q, Sign::kPlus, v).valency), true,
                      [=](std::size_t cap) { return build_singer_normalizer_action(r, q, v, cap); }};
}

std::optional<CatalogEntry> sym_alt_entry(std::uint64_t p, SymAlt v) {
  if (p < 7 || !is_prime(p))
    return std::nullopt;
  const bool alt = v == SymAlt::kAlt;
  const BigInt G = alt ? factorial(p) / 2 : factorial(p);
  const BigInt H = big(p * (alt ? (p - 1) / 2 : p - 1));
  std::optional<BigInt> val;
  if (!alt || !val_alt_p_warning(p))
    val = alt ? val_alt_p(p) : val_sym_p(p);
  std::string name = (alt ? "alt_" : "sym_") + std::to_string(p);
  std::string desc = std::string(alt ? "A" : "S") + std::to_string(p) + " on the cosets of " +
                     (alt ? "AGL1(" + std::to_string(p) + ") n A" + std::to_string(p) : "AGL1(" + std::to_string(p) + ")");
  CatalogEntry e{name, desc, expect(G, H, val), !(alt && val_alt_p_warning(p)),
                 [=](std::size_t cap) { return build_sym_alt_action(p, v, cap); }};
  return e;
}

CatalogEntry renamed(std::optional<CatalogEntry> e, std::string name) {
  e->name = std::move(name);
  return std::move(*e);
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(file_entry("a5_s3", "a5_s3.json", "A5 on the cosets of S3", expect(60, 6, BigInt(6))));
  c.push_back(file_entry("m10_agl15", "m10_agl15.json", "M10 on the cosets of AGL1(5)", expect(720, 20, BigInt(20))));
  c.push_back(file_entry("m10_8colon2", "m10_8colon2.json", "M10 on the cosets of 8:2", expect(720, 16, BigInt(32))));
  c.push_back(file_entry("pgl2_9_d16", "pgl2_9_d16.json", "PGL2(9) on the cosets of D16", expect(720, 16, BigInt(16))));
  c.push_back(file_entry("pgaml2_9_8colon2sq", "pgaml2_9_8colon2sq.json", "PGammaL2(9) on the cosets of 8:2^2",
                         expect(1440, 32)));
  c.push_back(file_entry("a9_asl23", "a9_asl23.json", "A9 on the cosets of ASL2(3)", expect(181440, 216, BigInt(432))));
  c.push_back(file_entry("m23_23colon11", "m23_23colon11.json", "M23 on the cosets of 23:11", expect(10200960, 253)));
  c.push_back(renamed(singer_entry(3, 7, LrVariant::kFull), "pgl3_7"));
  c.push_back(renamed(singer_entry(3, 7, LrVariant::kSocle), "l3_7_socle"));
  c.push_back(renamed(singer_entry(3, 2, LrVariant::kFull), "l3_2"));
  c.push_back(renamed(singer_entry(3, 3, LrVariant::kFull), "pgl3_3"));
  c.push_back(renamed(singer_entry(3, 4, LrVariant::kFull), "pgl3_4"));
  c.push_back(renamed(singer_entry(5, 2, LrVariant::kFull), "gl5_2"));
  for (std::uint64_t p : {7, 11})
    c.push_back(*sym_alt_entry(p, SymAlt::kSym));
  for (std::uint64_t p : {7, 11})
    c.push_back(*sym_alt_entry(p, SymAlt::kAlt));
  for (std::uint64_t q : {13, 17, 19, 23, 29})
    c.push_back(*psl2_entry(q, Torus::kSplit, Linear2::kPSL));
  for (std::uint64_t q : {11, 13, 17, 19})
    c.push_back(*psl2_entry(q, Torus::kNonsplit, Linear2::kPSL));
  for (std::uint64_t q : {7, 8, 9, 11, 13, 16, 17})
    c.push_back(*psl2_entry(q, Torus::kSplit, Linear2::kPGL));
  for (std::uint64_t q : {7, 9, 11, 13})
    c.push_back(*psl2_entry(q, Torus::kNonsplit, Linear2::kPGL));
  return c;
}

} // namespace

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

std::optional<CatalogEntry> find_entry(const std::string &name) {
  for (const auto &e : catalog())
    if (e.name == name)
      return e;
  std::smatch m;
  static const std::regex linear(R"((psl2|pgl2)_(\d+)_(split|nonsplit))");
  static const std::regex symalt(R"((sym|alt)_(\d+))");
  static const std::regex singer(R"(singer_(\d+)_(\d+)(_socle)?)");
  try {
    if (std::regex_match(name, m, linear))
      return psl2_entry(std::stoull(m[2]), parse_torus(m[3]), m[1] == "psl2" ? Linear2::kPSL : Linear2::kPGL);
    if (std::regex_match(name, m, symalt))
      return sym_alt_entry(std::stoull(m[2]), m[1] == "sym" ? SymAlt::kSym : SymAlt::kAlt);
    if (std::regex_match(name, m, singer))
      return singer_entry(std::stoull(m[1]), std::stoull(m[2]), m[3].matched ? LrVariant::kSocle : LrVariant::kFull);
  } catch (const std::invalid_argument &) {
  } catch (const std::out_of_range &) {
  }
  return std::nullopt;
}

std::vector<std::string> check_expected(const CatalogEntry &e, const GroupAction &a, const SubdegreeReport *report) {
  std::vector<std::string> bad;
  auto cmp = [&](const char *key, const BigInt &got) {
    auto it = e.expected.find(key);
    if (it != e.expected.end() && it->second != got)
      bad.push_back(e.name + ": " + key + " expected " + to_string(it->second) + ", got " + to_string(got));
  };
  cmp("order_G", a.G.order());
  cmp("order_H", big(a.H.order()));
  cmp("index", big(a.space.size()));
  if (report)
    cmp("valency", report->valency);
  return bad;
}

std::filesystem::path ReportCache::default_dir() {
  if (const char *env = std::getenv("SAXL_CACHE_DIR"); env && *env)
    return env;
  return ".saxl-cache";
}

std::filesystem::path ReportCache::path_for(const std::string &entry, const std::string &method) const {
  return dir_ / (entry + "." + method + ".v" + library_version() + ".json");
}

std::optional<CachedResult> ReportCache::load(const std::string &entry, const std::string &method) const {
  std::ifstream in(path_for(entry, method));
  if (!in)
    return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    CachedResult c{report_from_json(j.at("report").dump()), j.at("labels").get<std::vector<std::string>>(), {}, {}};
    for (const auto &v : j.at("Delta"))
      c.Delta.push_back(parse_bigint(v.get<std::string>()));
    for (const auto &v : j.at("delta"))
      c.delta.push_back(parse_bigint(v.get<std::string>()));
    return c;
  } catch (const std::exception &) {
    return std::nullopt; // unreadable entries are recomputed
  }
}

void ReportCache::store(const std::string &entry, const std::string &method, const CachedResult &r) const {
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json j;
  j["report"] = nlohmann::ordered_json::parse(report_to_json(r.report));
  j["labels"] = r.labels;
  auto strings = [](const std::vector<BigInt> &v) {
    std::vector<std::string> out;
    for (const auto &x : v)
      out.push_back(to_string(x));
    return out;
  };
  j["Delta"] = strings(r.Delta);
  j["delta"] = strings(r.delta);
  const auto target = path_for(entry, method);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(2) << "\n";
    if (!out)
      throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

} // namespace saxl
