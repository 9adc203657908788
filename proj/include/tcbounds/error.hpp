#pragma once

#include <stdexcept>
#include <string>

namespace tcb {

// Base for every error raised by the library. The subclasses map one-to-one
// onto CLI exit codes (see src/cli.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, unparsable words, invalid graphs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A machine check inside a certificate or homomorphism failed. `witness`
// carries the offending object in printable form.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  explicit VerificationError(const std::string& what) : Error(what) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// A configured resource cap (tree ball size, braid word length, graph size)
// would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcb
