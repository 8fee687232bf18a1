#include "rigidcalc/errors.hpp"

namespace rigidcalc {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicatePuncture: return "DuplicatePuncture";
    case ErrorCode::UnknownPuncture: return "UnknownPuncture";
    case ErrorCode::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::PunctureMismatch: return "PunctureMismatch";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::NotRigid: return "NotRigid";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::AlreadyRankOne: return "AlreadyRankOne";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::EmptyParameters: return "EmptyParameters";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

} // namespace rigidcalc
