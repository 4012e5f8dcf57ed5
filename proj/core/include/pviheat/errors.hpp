#pragma once

#include <stdexcept>
#include <string>

namespace pviheat {

/// Base class for every error raised by the exact layer.
struct KernelError : std::runtime_error {
    explicit KernelError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : KernelError {
    DivisionByZeroError() : KernelError("division by the zero polynomial") {}
};

/// A derivation was asked for the image of a symbol that has none.
struct InertSymbolError : KernelError {
    explicit InertSymbolError(const std::string& sym)
        : KernelError("derivative of inert gauge symbol requested: " + sym) {}
};

/// A coefficientwise identity check against a transcribed template failed.
struct CertificationError : KernelError {
    explicit CertificationError(const std::string& what) : KernelError(what) {}
};

struct ParseError : KernelError {
    explicit ParseError(const std::string& what) : KernelError(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pviheat
