#pragma once

#include <stdexcept>
#include <string>

namespace entalg {

// Base class for all library errors. Subclasses name the contract that was
// violated; the message carries the witness.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// The map x -> [[x+.x]] - 2[[x]] took both strict signs on the sample.
class NotComparable : public Error {
 public:
  NotComparable(const std::string& msg, std::string pos_witness,
                std::string neg_witness)
      : Error(msg),
        positive_witness(std::move(pos_witness)),
        negative_witness(std::move(neg_witness)) {}
  std::string positive_witness;
  std::string negative_witness;
};

class NoValidPairs : public Error {
 public:
  using Error::Error;
};

class OutOfXi : public Error {
 public:
  using Error::Error;
};

class CanonicalUndefined : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroEntropy : public Error {
 public:
  using Error::Error;
};

class InsufficientSeries : public Error {
 public:
  using Error::Error;
};

class NoRelations : public Error {
 public:
  using Error::Error;
};

class BaseBelowM : public Error {
 public:
  using Error::Error;
};

class DepthInsufficient : public Error {
 public:
  using Error::Error;
};

class NotInA : public Error {
 public:
  using Error::Error;
};

class SupUnbounded : public Error {
 public:
  using Error::Error;
};

class DesignNotOrthogonal : public Error {
 public:
  using Error::Error;
};

class ZeroReliability : public Error {
 public:
  using Error::Error;
};

class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteObjective : public Error {
 public:
  using Error::Error;
};

}  // namespace entalg
