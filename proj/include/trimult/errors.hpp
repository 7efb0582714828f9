#pragma once

#include <stdexcept>
#include <string>

namespace trimult {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: square or too-small multiplier, empty range, bad option.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  enum class Kind { insufficient_solutions, inconsistent_sequence };

  SolverError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A residue set whose remainders do not pair up as mu + mu' = k - 1.
class BrokenPairing : public Error {
 public:
  using Error::Error;
};

/// Naive and sieve search disagreed on the solution list.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class OeisError : public Error {
 public:
  enum class Kind { offline_uncached, parse, network, io };

  OeisError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace trimult
