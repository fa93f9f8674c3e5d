#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: zero parts, non-bijective images, mismatched n, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size guard refused to enumerate a group that is too large.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested object does not exist for these parameters
/// (e.g. the odd-order variant of a cyclic idempotent for an even-order element).
class NotAvailable : public Error {
 public:
  using Error::Error;
};

/// A group-algebra element is not in the span of the x_p basis.
class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

/// Littlewood's formula was applied to a non-idempotent element.
class NotIdempotent : public Error {
 public:
  using Error::Error;
};

/// A centralizer element does not act on the right by a scalar.
class ScalarActionFailure : public Error {
 public:
  using Error::Error;
};

/// A structural fact the algorithms rely on turned out false
/// (e.g. a coset with two elements of minimal length).
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperoct
