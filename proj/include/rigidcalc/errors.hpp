#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigidcalc {

enum class ErrorCode {
    InvalidOrder,
    NotAnEmbedding,
    SingularMatrix,
    DimensionMismatch,
    DuplicatePuncture,
    UnknownPuncture,
    NotQuasiUnipotent,
    ZeroScalar,
    PunctureMismatch,
    ZeroLambda,
    NegativeIndex,
    NotRigid,
    NotIrreducible,
    AlreadyRankOne,
    NoProgress,
    EmptyParameters,
    NotRootOfUnity,
    EmptySupport,
    ZeroConstantTerm,
    RootFindingFailure,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace rigidcalc
