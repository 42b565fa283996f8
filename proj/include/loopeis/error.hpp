#pragma once

#include <stdexcept>
#include <string>

namespace loopeis {

/// Base for every precondition failure raised by the library. The CLI maps
/// these to exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ClassificationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Raised for inputs the library deliberately does not handle (twisted affine
/// matrices, non-maximal parabolics in self-associativity questions).
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

class RegionError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace loopeis
