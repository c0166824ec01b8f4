#ifndef AMOD_ERRORS_HPP
#define AMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amod {

/// Failure categories raised by the library. Each maps onto one CLI exit
/// code (see exit_code()).
enum class errc {
    invalid_argument,
    malformed_spec,
    ring_mismatch,
    not_ring_axioms,
    not_closed,
    not_prime,
    non_prime_power,
    zero_ideal,
    divisibility_violation,
    unreduced,
    saturation_failure,
    injectivity_unverified,
};

char const * errc_name(errc code);

class amod_error : public std::runtime_error {
  public:
    amod_error(errc code, std::string const & what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what)
        , code_(code)
    {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// 2 = usage/spec error, 3 = domain error, 4 = hypothesis unverified.
int exit_code(errc code);

} // namespace amod

#endif
