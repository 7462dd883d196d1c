// Exception types shared by all supenum modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supenum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct NonPrimeCharacteristic : Error {
    using Error::Error;
};
struct ReducibleModulus : Error {
    using Error::Error;
};
struct UnsupportedField : Error {
    using Error::Error;
};
struct FieldTooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};

// linear algebra / codes
struct DimensionMismatch : Error {
    using Error::Error;
};
struct EnumerationTooLarge : Error {
    using Error::Error;
};
struct ZeroCode : Error {
    using Error::Error;
};

// enumerator
struct NonIntegralTransform : Error {
    using Error::Error;
};

// families / cli
struct UnknownFamily : Error {
    using Error::Error;
};
struct UnsupportedParameters : Error {
    using Error::Error;
};

// code file parsing; positions are 1-based
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace supenum
