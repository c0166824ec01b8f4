#ifndef AMOD_SPEC_IO_HPP
#define AMOD_SPEC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "amod/ring.hpp"

namespace amod {

using json = nlohmann::ordered_json;

/// A parsed ring specification. Exactly one of integral / finite is set:
/// specs with a "characteristic" field describe F_p-algebras.
struct ring_spec {
    json source;
    std::optional<ring> integral;
    std::optional<fp_algebra> finite;

    std::string name() const;
};

/// Throws errc::malformed_spec on schema violations. Ring axiom and closure
/// failures surface with their own error codes.
ring_spec parse_ring_spec(json const & j);
ring_spec load_ring_spec(std::filesystem::path const & path);

/// Parses "p/q" or "p".
rational parse_rational(std::string const & s);

} // namespace amod

#endif
