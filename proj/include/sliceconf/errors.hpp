#ifndef SLICECONF_ERRORS_HPP
#define SLICECONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sliceconf {

// Error categories: bad numbers in a profile, mismatched grids, out-of-range
// coordinates, an excluded analytic branch, a construction whose
// preconditions fail, misuse of an API, and user-facing configuration.
enum class ErrorKind {
  invalid_profile,
  grid_mismatch,
  domain,
  branch,
  construction,
  usage,
  config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sliceconf

#endif
