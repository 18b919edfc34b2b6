#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sogc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (row counts, vector lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter is outside the domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on its input code does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data failed validation (rank-deficient generator, malformed file,
/// inconsistent bounds table, malformed certificate).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A generator matrix that does not have full row rank.
class RankError : public ValidationError {
 public:
  RankError(std::size_t rank, std::size_t rows)
      : ValidationError("generator is rank-deficient: rank " + std::to_string(rank) + " < " +
                        std::to_string(rows) + " rows"),
        rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// A coordinate index outside 1..n.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A vector that was required to be a codeword is not one.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// Unknown identifier (paper code name, subcommand family).
class LookupError : public Error {
 public:
  using Error::Error;
};

/// No anticode assignment could be produced.
class InfeasibleError : public Error {
 public:
  enum class Reason {
    ConditionViolated,  ///< Belov's criterion fails for the requested sequence
    StrategyExhausted,  ///< the criterion holds but the search gave up
  };
  InfeasibleError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// A constructed object disagrees with the formula that predicts it.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sogc
