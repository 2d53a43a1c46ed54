#pragma once

#include <stdexcept>
#include <string>

namespace matrixrepet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix or attractor file, ragged rows, bad header.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Symbols (including required sentinels) do not fit in 16 bits.
class UnsupportedAlphabet : public Error {
 public:
  using Error::Error;
};

/// An exact search ran out of budget or was refused by the size guard.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// An attractor failed verification where a valid one was required.
class InvalidAttractor : public Error {
 public:
  using Error::Error;
};

class SerializationError : public Error {
 public:
  enum class Kind { BadMagic, BadVersion, Truncated, Corrupt };

  SerializationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace matrixrepet
