#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace regpair {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid too coarse: a consecutive-sample argument step reached pi/2.
struct AliasedArgument : Error {
  using Error::Error;
};

// A symbol declared nowhere-vanishing dips below vanish_tol on the grid.
struct NearZeroSymbol : Error {
  using Error::Error;
};

// Nyquist coefficient above resolved_tol; the sample grid cannot represent
// the function faithfully.
struct UnderResolved : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t offset;
  std::vector<std::string> expected;

  ParseError(const std::string& msg, std::size_t at, std::vector<std::string> want)
      : Error(msg + " (offset " + std::to_string(at) + ")"),
        offset(at),
        expected(std::move(want)) {}
};

// Loop passes through (or too close to) a zero/pole of the symbol.
struct DivisorCollision : Error {
  std::vector<std::complex<double>> points;

  DivisorCollision(const std::string& msg, std::vector<std::complex<double>> bad)
      : Error(msg), points(std::move(bad)) {}
};

struct NotDiffeomorphism : Error {
  using Error::Error;
};

struct RootOnContour : Error {
  using Error::Error;
};

// LU pivot below 1e-13 while forming a truncated determinant.
struct SingularTruncation : Error {
  using Error::Error;
};

// Internal dimension N too small for the requested outer truncation M.
struct PaddingTooSmall : Error {
  using Error::Error;
};

}  // namespace regpair
