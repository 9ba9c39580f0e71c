#pragma once

#include <stdexcept>
#include <string>

namespace cardzk {

// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value falls outside the range an encoding width can represent.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A sequence violates the one-heart encoding shape.
class MalformedSequenceError : public Error {
 public:
  using Error::Error;
};

// Face-down card content requested without sealed access.
class VisibilityError : public Error {
 public:
  using Error::Error;
};

// Row/column widths or indices do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked in a state the protocol does not allow.
class ProtocolOrderError : public Error {
 public:
  using Error::Error;
};

// Text input does not match the expected file format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A puzzle, graph, filling, or path set violates an instance invariant.
class InstanceError : public Error {
 public:
  using Error::Error;
};

// A protocol variant was applied to input it cannot handle.
class VariantMismatchError : public Error {
 public:
  using Error::Error;
};

// A brute-force size guard was exceeded without an override.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace cardzk
