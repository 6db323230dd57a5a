#pragma once

#include <stdexcept>
#include <string>

namespace specdet {

/// Failure of a numerical procedure: non-convergence, evaluation outside a
/// validated radius, horizon too small for the requested tolerance, poles.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bracketed root search that could not isolate (or keep) a sign change.
struct BracketError : NumericalError {
  BracketError(const std::string& what, double lo, double hi)
      : NumericalError(what + " (scanned [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "])"),
        lo(lo), hi(hi) {}
  double lo, hi;
};

}  // namespace specdet
