#pragma once

#include <stdexcept>
#include <string>

namespace repstab {

/// A precondition of a mathematical operation does not hold
/// (composing non-composable morphisms, mismatched shapes, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or JSON input could not be parsed.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}

}  // namespace repstab
