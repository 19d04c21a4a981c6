/*
   Copyright 2026 The qgha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QGHA_ERROR_HPP
#define QGHA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgha {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    ZeroArgument,
    UnsupportedField,
    InvalidField,
    ExtensionBoundExceeded,
    DegreeOverflow,
    UnsupportedDegF,
    QZero,
    InvalidSpec,
    SearchSpaceTooLarge,
    SyntaxError,
};

inline std::string_view to_string(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::ExtensionBoundExceeded: return "ExtensionBoundExceeded";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::UnsupportedDegF: return "UnsupportedDegF";
        case ErrorCode::QZero: return "QZero";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

/// Every library failure is reported as an Error carrying a stable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Parse failure with the byte offset where the input stopped making sense.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace qgha

#endif
