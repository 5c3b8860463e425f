#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class NotARoot : public Error {
public:
    using Error::Error;
};

class LevelTooSmall : public Error {
public:
    using Error::Error;
};

class LevelMismatch : public Error {
public:
    using Error::Error;
};

/// Raised by the closed-form tadpole evaluators for E7, E8, F4 and G2.
class NoClosedForm : public Error {
public:
    using Error::Error;
};

/// 128-bit accumulation left its range.
class Overflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fusionkit
