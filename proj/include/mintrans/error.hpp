#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mintrans {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two sets or hypergraphs over different universes were combined.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch(std::size_t lhs, std::size_t rhs)
      : Error("universe mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A trace width k outside [1, n] (or beyond the supported mask width).
class KOutOfRange : public Error {
 public:
  KOutOfRange(std::size_t k, std::size_t n)
      : Error("k=" + std::to_string(k) + " out of range for universe of size " + std::to_string(n)),
        k_(k) {}
  KOutOfRange(std::size_t k, const std::string& why) : Error("k=" + std::to_string(k) + ": " + why), k_(k) {}

  [[nodiscard]] std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// An extension family grew past its cap; usually means vc_dim(H) >= k.
class SizeOverflow : public Error {
 public:
  SizeOverflow(std::size_t cap, std::size_t level)
      : Error("extension family exceeded cap " + std::to_string(cap) + " at prefix level " +
              std::to_string(level)),
        cap_(cap) {}

  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Some member of G is not a minimal transversal of H.
class InvalidPartialDual : public Error {
 public:
  InvalidPartialDual(std::size_t index, const std::string& why)
      : Error("member #" + std::to_string(index) + " of G " + why), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InvalidTrace : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to work on an instance beyond its limits.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mintrans
