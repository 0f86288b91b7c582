#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sidon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad arity, empty input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured work or output budget would be exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class UnsupportedArityError : public Error {
public:
    using Error::Error;
};

} // namespace sidon
