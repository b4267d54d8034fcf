#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saxl/bigint.hpp"
#include "saxl/constructions.hpp"
#include "saxl/report.hpp"

namespace saxl {

struct CatalogEntry {
  std::string name;
  std::string description;
  // Any of order_G, order_H, index, valency.
  std::map<std::string, BigInt> expected;
  bool primitive = true;
  std::function<GroupAction(std::size_t cap)> build;
};

// The named entries, in listing order.
const std::vector<CatalogEntry> &catalog();

// A named entry, or a parametric one: psl2_<q>_<split|nonsplit>,
// pgl2_<q>_<split|nonsplit>, sym_<p>, alt_<p>, singer_<r>_<q>[_socle].
std::optional<CatalogEntry> find_entry(const std::string &name);

// $SAXL_DATA_DIR, else the data directory fixed at build time.
std::filesystem::path data_dir();

// Mismatches between the entry's expected values and a built action or report,
// one message per quantity.
std::vector<std::string> check_expected(const CatalogEntry &e, const GroupAction &a,
                                        const SubdegreeReport *report = nullptr);

// A report plus, for delta-engine runs, the solved class counts.
struct CachedResult {
  SubdegreeReport report;
  std::vector<std::string> labels;
  std::vector<BigInt> Delta;
  std::vector<BigInt> delta;
};

// Results keyed by (entry, method, library version), one JSON file each.
class ReportCache {
public:
  // $SAXL_CACHE_DIR, else .saxl-cache.
  static std::filesystem::path default_dir();

  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::optional<CachedResult> load(const std::string &entry, const std::string &method) const;
  // Write to a temporary file, then rename over the target.
  void store(const std::string &entry, const std::string &method, const CachedResult &r) const;
  std::filesystem::path path_for(const std::string &entry, const std::string &method) const;

private:
  std::filesystem::path dir_;
};

std::string library_version();

} // namespace saxl
