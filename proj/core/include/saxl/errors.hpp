#pragma once

#include <stdexcept>
#include <string>

namespace saxl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An orbit, enumeration or export grew past its configured cap.
struct CapExceeded : Error {
  CapExceeded(const std::string &what, std::size_t cap)
      : Error(what + " exceeds cap of " + std::to_string(cap)), cap(cap) {}
  std::size_t cap;
};

// Malformed permutation text, group file or report file.
struct ParseError : Error {
  using Error::Error;
};

// A computed quantity violates an identity it must satisfy.
struct Inconsistency : Error {
  using Error::Error;
};

inline constexpr std::size_t kDefaultLabelCap = 1000000;
inline constexpr std::size_t kDefaultSubgroupCap = 10000;
inline constexpr std::size_t kDotExportCap = 5000;

} // namespace saxl
