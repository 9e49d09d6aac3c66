#pragma once

#include <stdexcept>
#include <string>

namespace eclat {

/// Base class for all model/scenario loading and engine errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed descriptor document (bad JSON, wrong types, missing keys).
class SyntaxError : public Error {
  public:
    using Error::Error;
};

/// Dangling reference (unknown aggregate, field, parameter or operation name).
class ReferenceError : public Error {
  public:
    using Error::Error;
};

/// Invalid or oversized value domain (empty enumeration, inverted range,
/// state-space product overflow, set/map over the element cap).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Declared partial order is not a join-semilattice.
class NotALatticeError : public Error {
  public:
    using Error::Error;
};

/// State-space enumeration would exceed the configured cap; callers fall
/// back to seeded sampling.
class CapExceededError : public Error {
  public:
    using Error::Error;
};

/// Operations from different aggregates handed to a pairwise check.
class DomainMismatchError : public Error {
  public:
    using Error::Error;
};

/// Share metric requested on a model with nothing to count.
class EmptyModelError : public Error {
  public:
    using Error::Error;
};

/// Local submit refused: precondition or invariant does not hold at origin.
class PreconditionFailedError : public Error {
  public:
    using Error::Error;
};

/// Submit of an operation the model does not declare.
class UnknownOperationError : public Error {
  public:
    using Error::Error;
};

/// Malformed or inconsistent scenario document.
class ScenarioError : public Error {
  public:
    using Error::Error;
};

/// Corpus id not in the bundled registry.
class UnknownCorpusIdError : public Error {
  public:
    using Error::Error;
};

} // namespace eclat
