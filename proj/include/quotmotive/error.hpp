#pragma once

#include <stdexcept>
#include <string>

namespace quotmotive {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A substitution was asked to evaluate a symbol with no assigned value.
class UnassignedSymbolError : public Error {
public:
  explicit UnassignedSymbolError(const std::string& symbol)
      : Error("unassigned symbol " + symbol), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

/// Inversion of a truncated series whose constant coefficient is not a unit.
class NonUnitError : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent input (curve spec, parameters, field data).
class SpecError : public Error {
public:
  using Error::Error;
};

/// A point count was requested for a curve without zeta data.
class MissingZetaDataError : public SpecError {
public:
  using SpecError::SpecError;
};

/// An oracle enumeration would exceed its configured operation budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

} // namespace quotmotive
