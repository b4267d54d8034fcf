#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/bigint.hpp"

namespace saxl {

enum class Method { kBruteforce, kDeltaEngine, kClosedForm };

std::string method_name(Method m);
Method parse_method(std::string_view name);

struct SubdegreeEntry {
  BigInt length;
  BigInt multiplicity;
  friend bool operator==(const SubdegreeEntry &, const SubdegreeEntry &) = default;
};

struct ReportChecks {
  bool sum_rule = false;
  bool valency_divisibility = false;
  std::optional<bool> cross_method_agreement;
  friend bool operator==(const ReportChecks &, const ReportChecks &) = default;
};

struct SubdegreeReport {
  std::string group_name;
  BigInt order_G;
  BigInt order_H;
  BigInt index;
  std::vector<SubdegreeEntry> entries; // ascending by length, no zero multiplicities
  BigInt valency;
  Method method = Method::kBruteforce;
  ReportChecks checks;

  BigInt multiplicity(const BigInt &length) const;
  // All checks true, agreement true or not applicable.
  bool passed() const;
  friend bool operator==(const SubdegreeReport &, const SubdegreeReport &) = default;
};

// Adds m to the multiplicity of length, keeping entries sorted.
void add_subdegree(SubdegreeReport &r, const BigInt &length, const BigInt &m);

// Drops zero multiplicities and recomputes sum_rule and valency_divisibility.
void finalize_checks(SubdegreeReport &r);

// Same subdegree list and valency.
bool same_subdegrees(const SubdegreeReport &a, const SubdegreeReport &b);

std::string report_to_json(const SubdegreeReport &r, int indent = 2);
// Throws ParseError on malformed input.
SubdegreeReport report_from_json(std::string_view text);

} // namespace saxl
