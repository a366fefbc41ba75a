#include "graphrefute/runner.hpp"

#include <chrono>

namespace graphrefute {

using search::SearchOutcome;

Algorithm parse_algorithm(const std::string& name) {
    if (name == "playout") {
        return Algorithm::playout;
    }
    if (name == "nmcs") {
        return Algorithm::nmcs;
    }
    if (name == "nrpa") {
        return Algorithm::nrpa;
    }
    if (name == "gbfs") {
        return Algorithm::gbfs;
    }
    throw ConfigError("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::playout:
            return "playout";
        case Algorithm::nmcs:
            return "nmcs";
        case Algorithm::nrpa:
            return "nrpa";
        default:
            return "gbfs";
    }
}

void RunConfig::validate() const {
    if (conjecture < 1 || conjecture > 4) {
        throw ConfigError("conjecture must be 1, 2, 3 or 4");
    }
    const bool nested = algorithm == Algorithm::nmcs || algorithm == Algorithm::nrpa;
    if (nested && !level) {
        throw ConfigError(to_string(algorithm) + " needs --level");
    }
    if (!nested && level) {
        throw ConfigError("--level only applies to nmcs and nrpa");
    }
    if (level && *level < 0) {
        throw ConfigError("--level must be non-negative");
    }
    if (iterations && algorithm != Algorithm::nrpa) {
        throw ConfigError("--iterations only applies to nrpa");
    }
    if (iterations && *iterations < 1) {
        throw ConfigError("--iterations must be positive");
    }
    if ((node_budget || beam_cap) && algorithm != Algorithm::gbfs) {
        throw ConfigError("--node-budget and --beam-cap only apply to gbfs");
    }
    if (restarts < 1) {
        throw ConfigError("--restarts must be at least 1");
    }
    if (workers < 1) {
        throw ConfigError("--workers must be at least 1");
    }
    if (timeout_s && !(*timeout_s > 0.0)) {
        throw ConfigError("--timeout must be positive");
    }
    if (overrides.target && *overrides.target < 1) {
        throw ConfigError("--target must be positive");
    }
}

RefutationResult run_refutation(const RunConfig& config) {
    config.validate();
    const ConjectureProblem problem = make_problem(config.conjecture, config.overrides);
    using Outcome = SearchOutcome<ConjectureProblem>;

    auto attempt = [&](std::uint64_t seed, const search::SearchLimits& base) {
        search::SearchLimits limits = base;
        limits.stop_above = 0.0;
        search::Rng rng(seed);
        Outcome out;
        switch (config.algorithm) {
            case Algorithm::playout:
                out = search::playout(problem, problem.root(), rng, nullptr, limits);
                break;
            case Algorithm::nmcs:
                out = search::nmcs(problem, problem.root(), *config.level, rng, limits);
                break;
            case Algorithm::nrpa:
                out = search::nrpa(problem, search::NrpaConfig{*config.level, config.iterations.value_or(100), 1.0},
                                   rng, {}, limits);
                break;
            case Algorithm::gbfs:
                out = search::greedy_bfs(problem, search::GreedyConfig{config.node_budget, config.beam_cap}, rng,
                                         limits);
                break;
        }
        out.stats.seed = seed;
        return out;
    };
    auto success = [&](const Outcome& out) {
        return out.state && out.best_score > 0.0 && verify(config.conjecture, out.state->graph).certified;
    };

    const auto start = search::Clock::now();
    auto run = search::restart_runner(
        attempt, success,
        search::RestartConfig{config.restarts, config.timeout_s, config.workers, config.seed});
    const double elapsed_ms = std::chrono::duration<double, std::milli>(search::Clock::now() - start).count();

    RefutationResult result;
    result.attempts = run.attempts;
    result.success = run.success;
    auto& r = result.report;
    r.conjecture = config.conjecture;
    r.algorithm = to_string(config.algorithm);
    r.level = config.level;
    r.seed = config.seed;
    r.elapsed_ms = elapsed_ms;
    r.best_score = run.outcome.best_score;
    r.moves = run.outcome.sequence;
    if (run.outcome.state) {
        r.graph = run.outcome.state->graph;
        try {
            result.certificate = verify(config.conjecture, r.graph);
            r.certified = result.certificate->certified;
            r.margin = result.certificate->margin();
        } catch (const GraphError&) {
            r.certified = false;
            r.margin = run.outcome.best_score;
        }
    }
    return result;
}

}  // namespace graphrefute
