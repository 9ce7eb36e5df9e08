#pragma once

#include <stdexcept>
#include <string>

namespace synge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable category, used in CLI error documents.
    virtual const char* kind() const noexcept { return "error"; }
};

/// Argument outside the mathematical domain (gamma <= 0, |v| >= c, ...).
class DomainError : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// State or root outside the configured gamma accuracy window.
class WindowError : public Error {
  public:
    WindowError(const std::string& what, double lo, double hi)
        : Error(what), lo_(lo), hi_(hi) {}
    const char* kind() const noexcept override { return "window"; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

  private:
    double lo_, hi_;
};

/// A bracketing search failed to find a sign change.
class BracketError : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "bracket"; }
};

/// An iterative scheme (root finder, quadrature, ODE) did not converge.
class ConvergenceError : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "convergence"; }
};

/// A computed result failed its a-posteriori residual check.
class ToleranceError : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "tolerance"; }
};

/// Malformed input document or flag value.
class InputError : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "input"; }
};

}  // namespace synge
