/**
 * @file verify.hpp
 * @brief Seeded property suites runnable from the CLI. Reports are fully
 *        deterministic in (seed, trials, pmax); wall time is text-only so the
 *        JSON form is byte-identical across reruns.
 */
#ifndef PURERING_VERIFY_HPP
#define PURERING_VERIFY_HPP

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace purering {

/// One failing input set: input name -> re-parseable literal.
using Counterexample = std::map<std::string, std::string>;

struct PropertyResult {
    std::string name;
    int64_t trials = 0;
    int64_t passes = 0;
    int64_t failures = 0;
    std::vector<Counterexample> counterexamples;
};

struct Report {
    std::string suite;
    uint64_t seed = 0;
    int64_t trials = 0;
    int64_t pmax = 0;
    std::vector<PropertyResult> properties;
    int64_t wall_ms = 0;  // excluded from JSON

    bool all_passed() const;
};

/// Suite names accepted by run_suite, in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument on an unknown name.
Report run_suite(const std::string& name, uint64_t seed, int64_t trials, int64_t pmax);

/// Runs every suite with the same parameters.
std::vector<Report> run_all_suites(uint64_t seed, int64_t trials, int64_t pmax);

nlohmann::ordered_json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace purering

#endif
