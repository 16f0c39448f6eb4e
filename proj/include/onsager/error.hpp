#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace onsager {

enum class ErrorCode {
    NotGCM,
    NotSymmetrizable,
    UnknownPreset,
    MatrixFormat,
    NotFinite,
    NotAffine,
    NotARoot,
    NotAPositiveRoot,
    IndexError,
    SameIndex,
    SyntaxError,
    UnbalancedBracket,
    NotFixed,
    NotExpandable,
    WindowTooSmall,
    NotCType,
    NotCAffine,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), offset_(offset) {}

    ErrorCode code() const { return code_; }
    /// Byte offset into the parsed text, for SyntaxError / UnbalancedBracket.
    std::optional<std::size_t> offset() const { return offset_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> offset_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotGCM: return "NotGCM";
        case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
        case ErrorCode::UnknownPreset: return "UnknownPreset";
        case ErrorCode::MatrixFormat: return "MatrixFormat";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::NotAffine: return "NotAffine";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::NotAPositiveRoot: return "NotAPositiveRoot";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::SameIndex: return "SameIndex";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnbalancedBracket: return "UnbalancedBracket";
        case ErrorCode::NotFixed: return "NotFixed";
        case ErrorCode::NotExpandable: return "NotExpandable";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::NotCType: return "NotCType";
        case ErrorCode::NotCAffine: return "NotCAffine";
    }
    return "Error";
}

}  // namespace onsager
