#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcolor {

using Vertex = std::int32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class OddCycle : public Error {
 public:
  explicit OddCycle(std::vector<Vertex> witness);

  /// Closed walk v0 v1 ... v_{L-1} (back to v0) with L odd.
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class InfeasibleSplit : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ZetaTooSmall : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqcolor
