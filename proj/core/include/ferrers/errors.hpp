#ifndef FERRERS_ERRORS_HPP
#define FERRERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ferrers {

// Raised when a computation would exceed an explicit size bound
// (poset element guards, interval guards).
class ResourceGuardError : public std::runtime_error {
public:
  ResourceGuardError(long long requested, long long bound)
      : std::runtime_error("size " + std::to_string(requested) +
                           " exceeds guard " + std::to_string(bound)),
        requested_(requested), bound_(bound) {}

  long long requested() const { return requested_; }
  long long bound() const { return bound_; }

private:
  long long requested_;
  long long bound_;
};

// Raised when an abstract poset fails a structural assumption of the
// reconstruction (not graded, entanglement graph not a forest, ...).
// `step` names the stage that failed, suitable for
// "not a rook poset: <step>" reporting.
class NotRookPosetError : public std::runtime_error {
public:
  NotRookPosetError(std::string step, const std::string& what)
      : std::runtime_error(what), step_(std::move(step)) {}

  const std::string& step() const { return step_; }

private:
  std::string step_;
};

}  // namespace ferrers

#endif
