#ifndef AMOD_VERIFY_HPP
#define AMOD_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "amod/spec_io.hpp"

namespace amod {

struct criterion_result {
    enum class outcome { pass, fail, skipped };

    int id = 0;
    std::string title;
    outcome status = outcome::fail;
    std::string detail;
    std::vector<std::string> warnings;
    double seconds = 0;
    double limit_seconds = 0;

    char const * status_name() const;
};

struct verify_options {
    /// "paper": criteria 1-9. "corpus": load every shipped spec, then the
    /// corpus-wide criteria 2 and 8.
    std::string suite = "paper";
    long principality_bound = 50;
    std::uint64_t seed = 0;
    std::filesystem::path corpus_dir;
    /// Restrict to these criterion ids (empty: all of the suite).
    std::vector<int> only;
};

/// Directory holding the shipped ring specs (compiled in, overridable
/// through AMOD_CORPUS).
std::filesystem::path default_corpus_dir();

/// Every *.json spec in dir, sorted by file name.
std::vector<std::pair<std::string, ring_spec>> load_corpus(std::filesystem::path const & dir);

/// Throws errc::invalid_argument for an unknown suite name.
std::vector<criterion_result> run_verify(verify_options const & opts);

json verify_json(verify_options const & opts, std::vector<criterion_result> const & results);

/// Failed criteria make a suite fail; skipped ones do not.
bool suite_passed(std::vector<criterion_result> const & results);

} // namespace amod

#endif
