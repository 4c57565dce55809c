#include "polytone/error.hpp"

namespace polytone {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NonIncreasingNodes: return "NonIncreasingNodes";
        case ErrorKind::DegenerateSpan: return "DegenerateSpan";
        case ErrorKind::DegenerateRange: return "DegenerateRange";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EmptyImage: return "EmptyImage";
        case ErrorKind::ConstantImage: return "ConstantImage";
        case ErrorKind::TooFewDistinctLevels: return "TooFewDistinctLevels";
        case ErrorKind::NodeOrderViolation: return "NodeOrderViolation";
        case ErrorKind::MalformedHeader: return "MalformedHeader";
        case ErrorKind::TruncatedPayload: return "TruncatedPayload";
        case ErrorKind::SampleOutOfRange: return "SampleOutOfRange";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace polytone
