#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DimensionTooLarge : Error {
    using Error::Error;
};

}  // namespace qdc
