#pragma once

#include <stdexcept>
#include <string>

namespace jwrep {

/// Input outside an operation's domain (inadmissible diagram, bad label, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Internal contradiction: a construction produced data violating a proven
/// identity. Indicates a bug or a misread case, never bad user input.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A numerical quantity that must be nonzero came out zero.
class NumericalDegeneracy : public StructuralError {
public:
  using StructuralError::StructuralError;
};

/// Enumeration or sampling budget exhausted.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace jwrep
