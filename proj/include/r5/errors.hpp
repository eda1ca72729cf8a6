#pragma once

#include <stdexcept>
#include <string>

namespace r5 {

// Invalid argument to a sampling or walk operation (bad bounds, n < 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Seed outside the domain of its scheme.
class SeedDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed generator state on import.
class StateFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Result file cannot be parsed or violates the record schema.
class RecordFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedSchemaError : public RecordFormatError {
public:
    using RecordFormatError::RecordFormatError;
};

// The version-control executable itself could not be run.
class VcsUnavailableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace r5
