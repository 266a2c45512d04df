#ifndef EXPOLY_ERRORS_HPP
#define EXPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expoly {

/// A numeric series failed to reach its stopping rule within the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace expoly

#endif
