#ifndef CARDREC_ERRORS_HPP
#define CARDREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cardrec {

// Thrown when a certified tolerance cannot be reached (tail radius search
// exhausted, imaginary residue above threshold, ...).  The CLI maps this to
// exit code 3, everything derived from std::invalid_argument to exit code 2.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-band signal for evaluating an origin-singular spectrum at xi = 0.
// Callers that own a limit convention catch this and substitute the limit.
class OriginSingularity : public std::domain_error {
 public:
  OriginSingularity() : std::domain_error("spectrum is singular at the origin") {}
};

}  // namespace cardrec

#endif
