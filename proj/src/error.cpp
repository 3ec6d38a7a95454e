#include "kantorkit/error.hpp"

namespace kantorkit {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::SymbolicEntries: return "SymbolicEntries";
    case ErrorKind::SymbolicCoefficient: return "SymbolicCoefficient";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::NonlinearInput: return "NonlinearInput";
    case ErrorKind::ForeignSymbol: return "ForeignSymbol";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SlotMismatch: return "SlotMismatch";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::NotCommutativeAssociative: return "NotCommutativeAssociative";
    case ErrorKind::LieCheckFailed: return "LieCheckFailed";
    case ErrorKind::CatalogSelfTestFailed: return "CatalogSelfTestFailed";
    case ErrorKind::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredParam: return "UndeclaredParam";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

}  // namespace kantorkit
