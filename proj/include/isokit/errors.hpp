#pragma once

#include <stdexcept>
#include <string>

namespace isokit {

enum class ErrorCode {
    UnsupportedSpace,
    SingularParameter,
    NonAdmissible,
    NonAdmissibleSpeed,
    DegenerateSphere,
    InvalidInput,
    InsufficientData,
    IoError,
    ValidationError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code(code), context(std::move(context)) {}

    ErrorCode code;
    std::string context;  // free-form detail (offending t, admissibility summary, ...)
};

}  // namespace isokit
