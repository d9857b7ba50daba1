#pragma once

#include <stdexcept>
#include <string>

namespace evpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Scalars from different cyclotomic fields were combined.
class ContextError : public Error {
 public:
  explicit ContextError(const std::string& what) : Error(what) {}
};

/// Operands disagree on the number of variables / dimension.
class ArityError : public Error {
 public:
  explicit ArityError(const std::string& what) : Error(what) {}
};

/// A caller-side precondition does not hold (bad partition, n=0 without a
/// neutral element, query outside an explicit table, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// An operation is not defined for this input shape (e.g. twisted
/// denominators passed to the untwisted extractor).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// A configured cap (inclusion-exclusion width, grid size, dimension) would
/// be exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// A power series expected to be an indicator has a coefficient outside {0,1}.
class NotASetError : public Error {
 public:
  explicit NotASetError(const std::string& what) : Error(what) {}
};

/// Exact linear solve found no solution or no unique solution.
class FitError : public Error {
 public:
  explicit FitError(const std::string& what) : Error(what) {}
};

/// A search (threshold, stabilization box) ran out of its configured
/// limits before reaching a conclusion.
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(const std::string& what) : Error(what) {}
};

/// An internal cross-check failed. Signals a bug or an input that violates a
/// structural assumption (e.g. a non-additive coloring).
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error(what) {}
};

}  // namespace evpoly
