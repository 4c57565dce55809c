#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polytone {

enum class ErrorKind {
    InvalidArgument,
    LengthMismatch,
    NonIncreasingNodes,
    DegenerateSpan,
    DegenerateRange,
    IndexOutOfRange,
    EmptyImage,
    ConstantImage,
    TooFewDistinctLevels,
    NodeOrderViolation,
    MalformedHeader,
    TruncatedPayload,
    SampleOutOfRange,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can branch on it without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace polytone
