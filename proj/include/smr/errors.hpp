#ifndef SMR_ERRORS_HPP
#define SMR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smr {

// Malformed arguments or inputs. Mapped to CLI exit code 2.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed an explicit feasibility cap. Mapped to CLI
// exit code 3.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smr

#endif  // SMR_ERRORS_HPP
