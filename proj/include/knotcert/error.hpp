#pragma once

#include <stdexcept>
#include <string>

namespace knotcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input that does not parse (braid words, PD codes, pretzel lists).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A call whose documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside what the engine supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Refused because the computation would be too large (e.g. Hecke basis size).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace detail
}  // namespace knotcert
