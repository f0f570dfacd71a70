#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewminor {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

/// A value is outside the domain of the operation (division by zero,
/// characteristic 2, unsupported sizes, entries outside {-1,0,1}, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown label, label clash, or position out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of the input is violated (e.g. not skew-symmetric).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold. Carries the offending
/// position pair when there is one.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<std::pair<std::size_t, std::size_t>> pair = std::nullopt)
      : Error(what), pair_(pair) {}

  const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept { return pair_; }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

/// The input matrix has a zero off-diagonal entry where density is required.
class DensityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Hypotheses of the sign-witness recovery fail. `subset` is a nontrivial
/// HL-clan when that is the reason; `pair` an entry that breaks the claim.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, std::optional<std::uint64_t> subset,
                  std::optional<std::pair<std::size_t, std::size_t>> pair)
      : Error(what), subset_(subset), pair_(pair) {}

  const std::optional<std::uint64_t>& subset() const noexcept { return subset_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept { return pair_; }

 private:
  std::optional<std::uint64_t> subset_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

/// A value has no square root in the field, or is otherwise unusable.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Minor data admits no consistent matrix. `subset` is the violated subset.
class InconsistencyError : public Error {
 public:
  InconsistencyError(const std::string& what, std::uint64_t subset) : Error(what), subset_(subset) {}

  std::uint64_t subset() const noexcept { return subset_; }

 private:
  std::uint64_t subset_;
};

/// Malformed or invalid input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewminor
