#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wd {

// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different residue cardinalities.
class QMismatchError : public Error {
public:
    using Error::Error;
};

// A module failed a purity requirement; the message names the offending block.
class PurityError : public Error {
public:
    using Error::Error;
};

// A weighted spectrum failed the multiplicity purity conditions; the message
// names the violated condition and a witness eigenvalue.
class WmPurityError : public Error {
public:
    using Error::Error;
};

// A local parameter cannot be unitary with the given data.
class UnitarityError : public Error {
public:
    using Error::Error;
};

// A matrix that must be invertible is singular.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Expression text failed to parse; `offset` is the byte position of the error.
class ExprParseError : public Error {
public:
    ExprParseError(std::size_t offset, const std::string& what)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace wd
