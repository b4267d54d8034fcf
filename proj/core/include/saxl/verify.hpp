#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "saxl/errors.hpp"

namespace saxl {

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;
  bool passed() const;
};

// table1, pgl37, singer, corollary, johnson, psl2, sym, frobenius-identity,
// m23, scan.
const std::vector<std::string> &suite_names();

// Throws std::invalid_argument for an unknown suite. Every exception raised by
// a check is caught and reported as a failed line. on_line, if set, sees each
// line as it is produced.
SuiteResult run_suite(const std::string &name, std::size_t cap = kDefaultLabelCap,
                      const std::function<void(const CheckLine &)> &on_line = {});

} // namespace saxl
