#pragma once

#include <stdexcept>
#include <string>

namespace dio {

// Every recoverable failure in the library carries one of these kinds so that
// callers (and the CLI) can react to the kind rather than parse messages.
enum class Err {
    DegenerateRadicand,
    DivByZero,
    FieldMismatch,
    FactoringBudgetExceeded,
    SingularCurve,
    PointNotOnCurve,
    NormalizeFirst,
    NotHalvable,
    NeedFullTwoTorsion,
    InadmissibleGroup,
    NotTwistPoint,
    NotDiophantine,
    DegenerateTriple,
    ExcludedParameter,
    DegenerateParameter,
    FieldCollapse,
    MapDegenerate,
    ConditionNotSquare,
    ParseError,
};

inline const char* err_name(Err kind) {
    switch (kind) {
        case Err::DegenerateRadicand: return "DegenerateRadicand";
        case Err::DivByZero: return "DivByZero";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::FactoringBudgetExceeded: return "FactoringBudgetExceeded";
        case Err::SingularCurve: return "SingularCurve";
        case Err::PointNotOnCurve: return "PointNotOnCurve";
        case Err::NormalizeFirst: return "NormalizeFirst";
        case Err::NotHalvable: return "NotHalvable";
        case Err::NeedFullTwoTorsion: return "NeedFullTwoTorsion";
        case Err::InadmissibleGroup: return "InadmissibleGroup";
        case Err::NotTwistPoint: return "NotTwistPoint";
        case Err::NotDiophantine: return "NotDiophantine";
        case Err::DegenerateTriple: return "DegenerateTriple";
        case Err::ExcludedParameter: return "ExcludedParameter";
        case Err::DegenerateParameter: return "DegenerateParameter";
        case Err::FieldCollapse: return "FieldCollapse";
        case Err::MapDegenerate: return "MapDegenerate";
        case Err::ConditionNotSquare: return "ConditionNotSquare";
        case Err::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class DomainError : public std::runtime_error {
public:
    DomainError(Err kind, const std::string& detail)
        : std::runtime_error(std::string(err_name(kind)) + ": " + detail), kind_(kind) {}

    Err kind() const noexcept { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& detail) {
    throw DomainError(kind, detail);
}

} // namespace dio
