#pragma once

#include <stdexcept>
#include <string>

namespace refcurve {

/// Data are well-formed but carry no information for the requested quantity
/// (zero variance, no informative event times).
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine (quadrature, root bracketing) failed to reach its
/// tolerance or to find a solution.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace refcurve
