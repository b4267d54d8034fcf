#include "saxl/group_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "saxl/conjugacy.hpp"

namespace saxl {

namespace {

using nlohmann::json;

std::vector<Permutation> parse_perms(const json &arr, std::size_t degree, const char *field) {
  if (!arr.is_array())
    throw ParseError(std::string("'") + field + "' must be an array");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      out.push_back(Permutation::from_cycles(degree, arr[i].get<std::vector<std::vector<std::uint64_t>>>()));
    } catch (const ParseError &e) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) + "]: " + e.what());
    } catch (const json::exception &e) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) + "] is not a list of cycles");
    }
  }
  return out;
}

json perms_to_json(const std::vector<Permutation> &ps) {
  json arr = json::array();
  for (const auto &p : ps)
    arr.push_back(p.to_cycle_lists());
  return arr;
}

} // namespace

GroupFile parse_group_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("group file must be a JSON object");
  for (const char *key : {"name", "degree", "generators", "stabilizer_generators"})
    if (!j.contains(key))
      throw ParseError(std::string("group file lacks '") + key + "'");
  GroupFile f;
  if (!j["name"].is_string() || !j["degree"].is_number_unsigned())
    throw ParseError("'name' must be a string and 'degree' a positive integer");
  f.name = j["name"].get<std::string>();
  f.degree = j["degree"].get<std::size_t>();
  if (f.degree == 0 || f.degree > 65535)
    throw ParseError("degree out of range");
  f.generators = parse_perms(j["generators"], f.degree, "generators");
  f.stabilizer_generators = parse_perms(j["stabilizer_generators"], f.degree, "stabilizer_generators");
  if (f.generators.empty())
    throw ParseError("'generators' is empty");
  return f;
}

GroupFile read_group_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string group_file_to_json(const GroupFile &f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["degree"] = f.degree;
  j["generators"] = perms_to_json(f.generators);
  j["stabilizer_generators"] = perms_to_json(f.stabilizer_generators);
  return j.dump() + "\n";
}

GroupAction group_action_from(const GroupFile &f, std::size_t cap) {
  PermGroup G(f.generators);
  for (std::size_t i = 0; i < f.stabilizer_generators.size(); ++i)
    if (!G.contains(f.stabilizer_generators[i]))
      throw std::invalid_argument(f.name + ": stabilizer_generators[" + std::to_string(i) + "] is not in G");
  Subgroup H = Subgroup::generated_by(f.stabilizer_generators, f.degree, kDefaultSubgroupCap);
  const BigInt index = G.order() / static_cast<unsigned long>(H.order());

  // cyclic normal subgroups of H, largest first
  std::vector<Subgroup> seeds;
  for (const auto &h : H.elements()) {
    if (h.is_identity())
      continue;
    auto c = Subgroup::generated_by({h}, f.degree);
    if (std::find(seeds.begin(), seeds.end(), c) != seeds.end())
      continue;
    if (std::all_of(H.generators().begin(), H.generators().end(),
                    [&](const Permutation &g) { return c.is_normalized_by(g); }))
      seeds.push_back(std::move(c));
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Subgroup &a, const Subgroup &b) { return a.order() > b.order(); });
  seeds.push_back(H);
  for (const auto &seed : seeds) {
    // N_G(seed) contains H; it equals H exactly when the orbit has |G:H| labels.
    ActionSpace space = ActionSpace::conjugates(f.generators, f.degree, seed, cap);
    if (big(space.size()) != index)
      continue;
    return GroupAction{f.name, std::move(G), std::move(space), std::move(H), {}};
  }
  throw std::invalid_argument(f.name + ": H is not self-normalizing in G");
}

GroupAction load_group_file(const std::filesystem::path &path, std::size_t cap) {
  return group_action_from(read_group_file(path), cap);
}

} // namespace saxl
