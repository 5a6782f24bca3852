#include "transat/error.hpp"

namespace transat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidVariable: return "InvalidVariable";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::UnsetVariable: return "UnsetVariable";
    case ErrorCode::NotASuperset: return "NotASuperset";
    case ErrorCode::InputViolatesTransitivity: return "InputViolatesTransitivity";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::RoundLimitExceeded: return "RoundLimitExceeded";
    case ErrorCode::NodeLimitExceeded: return "NodeLimitExceeded";
    case ErrorCode::VarBaseTooLow: return "VarBaseTooLow";
    case ErrorCode::EdgeMissing: return "EdgeMissing";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::MalformedEntry: return "MalformedEntry";
    case ErrorCode::LiteralOutOfRange: return "LiteralOutOfRange";
    case ErrorCode::UnterminatedClause: return "UnterminatedClause";
    case ErrorCode::ClauseCountMismatch: return "ClauseCountMismatch";
    case ErrorCode::EntryCountMismatch: return "EntryCountMismatch";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::ForeignHandle: return "ForeignHandle";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace transat
