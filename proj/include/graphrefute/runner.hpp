#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphrefute/conjectures.hpp"
#include "graphrefute/report.hpp"
#include "graphrefute/search.hpp"
#include "graphrefute/verifier.hpp"

namespace graphrefute {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { playout, nmcs, nrpa, gbfs };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);

struct RunConfig {
    int conjecture = 0;
    Algorithm algorithm = Algorithm::nmcs;
    std::optional<int> level;
    std::optional<int> iterations;  // NRPA only, default 100
    ProblemOverrides overrides;
    std::uint64_t seed = 0;
    std::optional<double> timeout_s;
    std::size_t restarts = 1;
    std::size_t workers = 1;
    std::optional<std::uint64_t> node_budget;  // gbfs only
    std::optional<std::size_t> beam_cap;       // gbfs only

    // Throws ConfigError when a field does not fit the algorithm (a level is
    // required for nmcs and nrpa, iterations belong to nrpa, node budgets and
    // beam caps to gbfs) or a value is out of range.
    void validate() const;
};

struct RefutationResult {
    RunReport report;
    std::optional<Certificate> certificate;
    std::vector<search::AttemptRecord> attempts;
    bool success = false;
};

// Runs restarts of the configured engine until a certified counter-example
// turns up or the restarts run out.
RefutationResult run_refutation(const RunConfig& config);

}  // namespace graphrefute
