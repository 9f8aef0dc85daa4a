#pragma once

#include <stdexcept>
#include <string>

namespace chordtim {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input document (topology, message set, rates, layout).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A structural invariant of an input object does not hold
/// (out-of-range index, duplicate edge, message without a channel, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// The instance is larger than the configured desk-scale cap for an exhaustive routine.
class SizeLimitExceeded : public Error {
public:
  SizeLimitExceeded(const std::string& what, std::size_t size, std::size_t limit)
      : Error(what + ": size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::size_t limit() const { return limit_; }

private:
  std::size_t size_;
  std::size_t limit_;
};

/// An operation was called on a topology of the wrong kind (chordal vs. not chordal).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The cycle construction produced no positive gap, so no certificate exists for it.
class CertificateError : public Error {
public:
  using Error::Error;
};

}  // namespace chordtim
