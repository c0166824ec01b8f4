#ifndef AMOD_REPORT_HPP
#define AMOD_REPORT_HPP

#include <string>
#include <vector>

#include "amod/ideals.hpp"
#include "amod/lazard.hpp"
#include "amod/spec_io.hpp"
#include "amod/u_homology.hpp"

namespace amod {

json to_json(int_vector const & v);
json to_json(int_matrix const & m); // list of columns

json ring_info_json(ring_spec const & spec);
json ideals_json(ring_spec const & spec, std::vector<long> const & ns, long principality_bound);
json homology_json(ring_spec const & spec, homology_report const & h);
json lazard_json(ring_spec const & spec, lazard_report const & rep);

/// Markdown view of any report produced above.
std::string render_markdown(json const & report);

} // namespace amod

#endif
