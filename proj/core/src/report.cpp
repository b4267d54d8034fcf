#include "saxl/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "saxl/errors.hpp"

namespace saxl {

std::string method_name(Method m) {
  switch (m) {
  case Method::kBruteforce:
    return "bruteforce";
  case Method::kDeltaEngine:
    return "delta-engine";
  case Method::kClosedForm:
    return "closed-form";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "bruteforce")
    return Method::kBruteforce;
  if (name == "delta-engine")
    return Method::kDeltaEngine;
  if (name == "closed-form")
    return Method::kClosedForm;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

BigInt SubdegreeReport::multiplicity(const BigInt &length) const {
  for (const auto &e : entries)
    if (e.length == length)
      return e.multiplicity;
  return 0;
}

bool SubdegreeReport::passed() const {
  return checks.sum_rule && checks.valency_divisibility && checks.cross_method_agreement.value_or(true);
}

void add_subdegree(SubdegreeReport &r, const BigInt &length, const BigInt &m) {
  auto it = std::lower_bound(r.entries.begin(), r.entries.end(), length,
                             [](const SubdegreeEntry &e, const BigInt &l) { return e.length < l; });
  if (it != r.entries.end() && it->length == length)
    it->multiplicity += m;
  else
    r.entries.insert(it, {length, m});
}

void finalize_checks(SubdegreeReport &r) {
  std::erase_if(r.entries, [](const SubdegreeEntry &e) { return e.multiplicity == 0; });
  BigInt total = 0;
  for (const auto &e : r.entries)
    total += e.length * e.multiplicity;
  r.checks.sum_rule = total == r.index;
  r.checks.valency_divisibility =
      r.order_H != 0 && r.valency % r.order_H == 0 && r.valency == r.order_H * r.multiplicity(r.order_H);
}

bool same_subdegrees(const SubdegreeReport &a, const SubdegreeReport &b) {
  return a.entries == b.entries && a.valency == b.valency;
}

std::string report_to_json(const SubdegreeReport &r, int indent) {
  nlohmann::ordered_json j;
  j["group"] = r.group_name;
  j["order_G"] = to_string(r.order_G);
  j["order_H"] = to_string(r.order_H);
  j["index"] = to_string(r.index);
  j["subdegrees"] = nlohmann::ordered_json::array();
  for (const auto &e : r.entries)
    j["subdegrees"].push_back({{"length", to_string(e.length)}, {"multiplicity", to_string(e.multiplicity)}});
  j["valency"] = to_string(r.valency);
  j["method"] = method_name(r.method);
  j["checks"]["sum_rule"] = r.checks.sum_rule;
  j["checks"]["valency_divisibility"] = r.checks.valency_divisibility;
  if (r.checks.cross_method_agreement)
    j["checks"]["cross_method_agreement"] = *r.checks.cross_method_agreement;
  else
    j["checks"]["cross_method_agreement"] = nullptr;
  return j.dump(indent);
}

SubdegreeReport report_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    auto num = [](const nlohmann::json &v) {
      if (!v.is_string())
        throw ParseError("big integers must be decimal strings");
      return parse_bigint(v.get<std::string>());
    };
    SubdegreeReport r;
    r.group_name = j.at("group").get<std::string>();
    r.order_G = num(j.at("order_G"));
    r.order_H = num(j.at("order_H"));
    r.index = num(j.at("index"));
    for (const auto &e : j.at("subdegrees"))
      r.entries.push_back({num(e.at("length")), num(e.at("multiplicity"))});
    r.valency = num(j.at("valency"));
    r.method = parse_method(j.at("method").get<std::string>());
    const auto &c = j.at("checks");
    r.checks.sum_rule = c.at("sum_rule").get<bool>();
    r.checks.valency_divisibility = c.at("valency_divisibility").get<bool>();
    if (!c.at("cross_method_agreement").is_null())
      r.checks.cross_method_agreement = c.at("cross_method_agreement").get<bool>();
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

} // namespace saxl
