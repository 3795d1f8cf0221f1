#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpt {

enum class ErrorCode {
    MissingArc,
    DoubleArc,
    IntraPartArc,
    EmptyPart,
    InvalidVertex,
    Loop,
    NotStrong,
    NotRich,
    OverlappingSets,
    BadLength,
    VertexOnCycle,
    InvalidSpec,
    GaveUp,
    ParseError,
    Timeout,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what) :
        std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code)
    {
    }

    [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

} // namespace mpt
