#pragma once

#include <stdexcept>
#include <string>

namespace z2k {

/// Malformed input to a library operation. Mathematical failures (a property
/// that does not hold) are reported as data, never thrown.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotInImage : public Error {
public:
    using Error::Error;
};

class NotACodeword : public Error {
public:
    using Error::Error;
};

class DegenerateCode : public Error {
public:
    using Error::Error;
};

class EmptyCode : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

/// Resource caps: enumeration or closure grew past the configured limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeLimitExceeded : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

}  // namespace z2k
