#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kantorkit {

enum class ErrorKind {
    DimMismatch,
    SymbolicEntries,
    SymbolicCoefficient,
    InconsistentSystem,
    NonlinearInput,
    ForeignSymbol,
    SingularMatrix,
    SlotMismatch,
    UnknownIdentity,
    IndexOutOfRange,
    NotDerivation,
    NotCommutativeAssociative,
    LieCheckFailed,
    CatalogSelfTestFailed,
    UnknownAlgebra,
    ParseError,
    UndeclaredParam,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace kantorkit
