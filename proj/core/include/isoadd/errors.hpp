#ifndef ISOADD_ERRORS_HPP
#define ISOADD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isoadd {

/// Error categories raised by the library.
///
/// Precondition/usage errors (bad factors, invalid pairs, excluded
/// parameters, ...) are distinguished from internal invariant violations:
/// RepBoundExceeded fires only if more than four essentially different
/// factorizations of a pair are ever observed, which would contradict the
/// bound the whole library is built around.
enum class ErrorKind {
  ZeroFactor,
  SumMismatch,
  EqualProducts,
  InvalidPair,
  NotASolution,
  MixedPairs,
  ZeroX,
  ExclusionViolated,
  NotCoprime,
  NotOnCurve,
  NonIntegralCurve,
  RepBoundExceeded,
  Unsupported,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors that indicate a broken internal invariant rather than
  /// bad input. The CLI maps these to exit code 1, everything else to 2.
  bool internal() const noexcept { return kind_ == ErrorKind::RepBoundExceeded; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind) noexcept;

}  // namespace isoadd

#endif  // ISOADD_ERRORS_HPP
