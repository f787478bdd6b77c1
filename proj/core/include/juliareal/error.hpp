#pragma once

#include <stdexcept>
#include <string>

namespace juliareal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (wrong degree, zero scale, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (degree, bit size, orbit size) would be exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace juliareal
