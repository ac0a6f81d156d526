#pragma once

#include <stdexcept>
#include <string>

namespace rarecase {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
  virtual const char* kind() const noexcept = 0;
};

// Bad arguments: wrong sizes, mixed moduli, unknown identifiers.
class UsageError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
  const char* kind() const noexcept override { return "usage"; }
};

// Mathematically undefined request, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
  const char* kind() const noexcept override { return "domain"; }
};

// Input exceeds a brute-force or memory bound.
class CapabilityError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
  const char* kind() const noexcept override { return "capability"; }
};

// A checked internal claim failed (e.g. a non-integral count).
class InternalAssertion : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
  const char* kind() const noexcept override { return "internal-assertion"; }
};

enum class Verdict { accept, reject };

inline const char* to_string(Verdict v) noexcept {
  return v == Verdict::accept ? "ACCEPT" : "REJECT";
}

}  // namespace rarecase
