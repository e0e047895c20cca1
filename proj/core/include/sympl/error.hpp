#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (zero vector, L > N, k < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A basis or matrix that was required to have full rank does not.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix or subspace dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Objects over different ground fields (or different characteristics) were mixed.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// Place that is not a place of the field: composite "prime", reducible polynomial.
class InvalidPlace : public Error {
 public:
  using Error::Error;
};

/// Bilinear form that is required to be alternating is not.
class FormError : public Error {
 public:
  using Error::Error;
};

/// Symplectic space whose form restricts degenerately.
class RegularityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input to a textual or JSON parser.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input too large for an exhaustive (desk-scale) routine.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// Random instance generation gave up.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Unknown suite, bad flag combination.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input violating the documented contract of an operation (invalid symplectic basis, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The pair sweep found a working set with no disconnected pair.
/// `clique` lists the (0-based) vertices of that working set, which are pairwise adjacent.
class CliqueViolation : public Error {
 public:
  CliqueViolation(const std::string& what, std::vector<int> clique)
      : Error(what), clique_(std::move(clique)) {}
  const std::vector<int>& clique() const noexcept { return clique_; }

 private:
  std::vector<int> clique_;
};

}  // namespace sympl
