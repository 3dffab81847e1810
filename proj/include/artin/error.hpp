#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

enum class ErrorCode {
    contract_violation,
    field_not_prime,
    infinite_dimensional,
    empty_relation_alphabet,
    non_composable_relation,
    syntax_error,
    unknown_kind,
    invalid_algebra,
    missing_certificate,
    route_disagreement,
    internal_disagreement,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::contract_violation: return "ContractViolation";
    case ErrorCode::field_not_prime: return "FieldNotPrime";
    case ErrorCode::infinite_dimensional: return "InfiniteDimensional";
    case ErrorCode::empty_relation_alphabet: return "EmptyRelationAlphabet";
    case ErrorCode::non_composable_relation: return "NonComposableRelation";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_kind: return "UnknownKind";
    case ErrorCode::invalid_algebra: return "InvalidAlgebra";
    case ErrorCode::missing_certificate: return "MissingCertificate";
    case ErrorCode::route_disagreement: return "RouteDisagreement";
    case ErrorCode::internal_disagreement: return "InternalDisagreement";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Error with a source location inside an algebra document.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& what, std::size_t line, std::size_t column,
               std::string field = {})
        : Error(code, locate(what, line, column, field)), line_(line), column_(column),
          field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string locate(const std::string& what, std::size_t line, std::size_t column,
                              const std::string& field) {
        std::string s = what;
        if (line > 0)
            s += " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
        if (!field.empty())
            s += " [at " + field + "]";
        return s;
    }

    std::size_t line_;
    std::size_t column_;
    std::string field_;
};

inline void require(bool condition, const char* what) {
    if (!condition)
        throw Error(ErrorCode::contract_violation, what);
}

} // namespace artin
