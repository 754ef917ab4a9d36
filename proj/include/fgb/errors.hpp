#pragma once

#include <stdexcept>
#include <string>

namespace fgb {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier used by the CLI for exit-status mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Invalid argument or configuration (rank < 2, rho < 2, unparsable word, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error("validation-error", what) {}
};

/// A boundary-point prefix is too short to determine the requested quantity.
class PrefixTooShort : public Error {
 public:
  explicit PrefixTooShort(const std::string& what)
      : Error("prefix-too-short", what) {}
};

/// A cylinder is too coarse for the requested image computation; the caller
/// must split it into its children and retry.
class RefineCylinder : public Error {
 public:
  explicit RefineCylinder(const std::string& what)
      : Error("refine-cylinder", what) {}
};

/// An enumeration exceeded the configured budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error("budget-exceeded", what) {}
};

}  // namespace fgb
