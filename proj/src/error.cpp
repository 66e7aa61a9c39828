#include <weilptb/error.hpp>

#include <utility>

namespace weilptb {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
        case Errc::mixed_bases: return "MixedBases";
        case Errc::reducible: return "Reducible";
        case Errc::bad_parity: return "BadParity";
        case Errc::not_one_dim: return "NotOneDim";
        case Errc::not_self_dual: return "NotSelfDual";
        case Errc::det_not_trivial: return "DetNotTrivial";
        case Errc::well_definedness_violation: return "WellDefinednessViolation";
        case Errc::illegal_block: return "IllegalBlock";
        case Errc::not_relevant: return "NotRelevant";
        case Errc::not_eligible: return "NotEligible";
        case Errc::mixed_variants: return "MixedVariants";
        case Errc::odd_dimension: return "OddDimension";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::not_in_t: return "NotInT";
        case Errc::not_levi_stable: return "NotLeviStable";
        case Errc::consistency_violation: return "ConsistencyViolation";
        case Errc::sample_not_in_h: return "SampleNotInH";
        case Errc::infeasible: return "Infeasible";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

SyntaxError::SyntaxError(std::size_t offset, std::string expected)
    : Error(Errc::syntax_error, "at offset " + std::to_string(offset) + ", expected " + expected),
      offset_(offset), expected_(std::move(expected))
{
}

} // namespace weilptb
