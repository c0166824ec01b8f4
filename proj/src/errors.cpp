#include "amod/errors.hpp"

namespace amod {

char const * errc_name(errc code)
{
    switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::malformed_spec: return "MalformedSpec";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_ring_axioms: return "NotRingAxioms";
    case errc::not_closed: return "NotClosed";
    case errc::not_prime: return "NotPrime";
    case errc::non_prime_power: return "NonPrimePower";
    case errc::zero_ideal: return "ZeroIdeal";
    case errc::divisibility_violation: return "DivisibilityViolation";
    case errc::unreduced: return "Unreduced";
    case errc::saturation_failure: return "SaturationFailure";
    case errc::injectivity_unverified: return "InjectivityUnverified";
    }
    return "Unknown";
}

int exit_code(errc code)
{
    switch (code) {
    case errc::invalid_argument:
    case errc::malformed_spec:
        return 2;
    case errc::injectivity_unverified:
        return 4;
    default:
        return 3;
    }
}

} // namespace amod
