#pragma once

// Monte Carlo search engines over an abstract single-player problem: random
// playouts, nested Monte Carlo search, nested rollout policy adaptation and
// greedy best-first search, plus a restart harness.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace graphrefute::search {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// `score` is read on terminal states; `evaluate` on any state (greedy search).
// `move_code` must be stable across states since policies are keyed by it.
template <typename P>
concept SearchProblem = requires(const P& p, const typename P::State& s, const typename P::Move& m) {
    typename P::State;
    typename P::Move;
    { p.root() } -> std::convertible_to<typename P::State>;
    { p.legal_moves(s) } -> std::convertible_to<std::vector<typename P::Move>>;
    { p.play(s, m) } -> std::convertible_to<typename P::State>;
    { p.is_terminal(s) } -> std::convertible_to<bool>;
    { p.score(s) } -> std::convertible_to<double>;
    { p.evaluate(s) } -> std::convertible_to<double>;
    { p.move_code(m) } -> std::convertible_to<std::uint64_t>;
};

// Optional: a state fingerprint lets greedy search skip states reached twice.
template <typename P>
concept HasStateKey = requires(const P& p, const typename P::State& s) {
    { p.state_key(s) } -> std::convertible_to<std::uint64_t>;
};

// Move-code -> weight; absent codes weigh 0.
class Policy {
public:
    double weight(std::uint64_t code) const {
        const auto it = weights_.find(code);
        return it == weights_.end() ? 0.0 : it->second;
    }
    void add(std::uint64_t code, double delta) { weights_[code] += delta; }
    bool contains(std::uint64_t code) const { return weights_.contains(code); }
    std::size_t size() const { return weights_.size(); }
    const std::unordered_map<std::uint64_t, double>& weights() const { return weights_; }

private:
    std::unordered_map<std::uint64_t, double> weights_;
};

struct SearchStats {
    std::uint64_t playouts = 0;
    std::uint64_t nodes = 0;
    double elapsed_s = 0.0;
    std::uint64_t seed = 0;
    // False when a budget, deadline or cancellation cut the search short.
    bool complete = true;
};

template <SearchProblem P>
struct SearchOutcome {
    double best_score = kNegInf;
    std::vector<typename P::Move> sequence;
    std::optional<typename P::State> state;
    SearchStats stats;
};

struct SearchLimits {
    std::optional<Clock::time_point> deadline;
    // Halt as soon as a terminal score strictly above this value is seen.
    std::optional<double> stop_above;
    const std::atomic<bool>* cancel = nullptr;
};

namespace detail {

template <SearchProblem P>
class Context {
public:
    Context(const P& problem, Rng& rng, const SearchLimits& limits)
        : problem(problem), rng(rng), limits_(limits), start_(Clock::now()) {}

    const P& problem;
    Rng& rng;
    SearchStats stats;

    bool halted() const { return halted_; }

    void record_terminal(double score) {
        ++stats.playouts;
        if (limits_.stop_above && score > *limits_.stop_above) {
            halted_ = true;
        }
        check_clock();
    }

    void check_clock() {
        if ((limits_.deadline && Clock::now() >= *limits_.deadline) ||
            (limits_.cancel && limits_.cancel->load(std::memory_order_relaxed))) {
            halted_ = true;
            stats.complete = false;
        }
    }

    void finish(SearchStats& out) {
        stats.elapsed_s = std::chrono::duration<double>(Clock::now() - start_).count();
        out = stats;
    }

private:
    SearchLimits limits_;
    Clock::time_point start_;
    bool halted_ = false;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Move selection

// exp(w_i - max w) / sum_j exp(w_j - max w), so large equal weights stay finite.
template <SearchProblem P>
std::vector<double> softmax_probabilities(const P& problem, std::span<const typename P::Move> moves,
                                          const Policy& policy) {
    std::vector<double> w(moves.size());
    double top = kNegInf;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        w[i] = policy.weight(problem.move_code(moves[i]));
        top = std::max(top, w[i]);
    }
    double total = 0.0;
    for (auto& x : w) {
        x = std::exp(x - top);
        total += x;
    }
    for (auto& x : w) {
        x /= total;
    }
    return w;
}

template <SearchProblem P>
std::size_t softmax_choice_index(const P& problem, std::span<const typename P::Move> moves, const Policy& policy,
                                 Rng& rng) {
    if (moves.empty()) {
        throw std::invalid_argument("softmax choice over no moves");
    }
    std::vector<double> w(moves.size());
    double top = kNegInf;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        w[i] = policy.weight(problem.move_code(moves[i]));
        top = std::max(top, w[i]);
    }
    double total = 0.0;
    for (auto& x : w) {
        x = std::exp(x - top);
        total += x;
    }
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (std::size_t i = 0; i < w.size(); ++i) {
        u -= w[i];
        if (u < 0.0) {
            return i;
        }
    }
    return w.size() - 1;
}

template <SearchProblem P>
typename P::Move softmax_choice(const P& problem, std::span<const typename P::Move> moves, const Policy& policy,
                                Rng& rng) {
    return moves[softmax_choice_index(problem, moves, policy, rng)];
}

inline std::size_t uniform_index(std::size_t count, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

// ---------------------------------------------------------------------------
// Playout

namespace detail {

template <SearchProblem P>
SearchOutcome<P> playout(Context<P>& ctx, typename P::State state, const Policy* policy) {
    const P& problem = ctx.problem;
    SearchOutcome<P> out;
    while (!problem.is_terminal(state)) {
        const std::vector<typename P::Move> moves = problem.legal_moves(state);
        if (moves.empty()) {
            // Dead end.
            ctx.record_terminal(kNegInf);
            out.best_score = kNegInf;
            out.state = std::move(state);
            return out;
        }
        const std::size_t pick = policy ? softmax_choice_index(problem, std::span<const typename P::Move>(moves),
                                                               *policy, ctx.rng)
                                        : uniform_index(moves.size(), ctx.rng);
        out.sequence.push_back(moves[pick]);
        state = problem.play(state, moves[pick]);
        ++ctx.stats.nodes;
    }
    out.best_score = problem.score(state);
    out.state = std::move(state);
    ctx.record_terminal(out.best_score);
    return out;
}

}  // namespace detail

// Plays to a terminal state: uniformly at random without a policy, by softmax
// over policy weights with one.
template <SearchProblem P>
SearchOutcome<P> playout(const P& problem, const typename P::State& state, Rng& rng, const Policy* policy = nullptr,
                         const SearchLimits& limits = {}) {
    detail::Context<P> ctx(problem, rng, limits);
    auto out = detail::playout(ctx, state, policy);
    ctx.finish(out.stats);
    return out;
}

// ---------------------------------------------------------------------------
// Nested Monte Carlo search

namespace detail {

template <SearchProblem P>
SearchOutcome<P> nmcs(Context<P>& ctx, typename P::State state, int level) {
    if (level == 0) {
        return playout(ctx, std::move(state), nullptr);
    }
    const P& problem = ctx.problem;
    SearchOutcome<P> best;
    std::vector<typename P::Move> played;
    while (!problem.is_terminal(state)) {
        const std::vector<typename P::Move> moves = problem.legal_moves(state);
        if (moves.empty()) {
            if (!best.state) {
                best.sequence = played;
                best.state = state;
            }
            break;
        }
        for (const auto& move : moves) {
            auto child = problem.play(state, move);
            ++ctx.stats.nodes;
            auto result = nmcs(ctx, std::move(child), level - 1);
            if (result.best_score >= best.best_score) {
                best.best_score = result.best_score;
                best.sequence = played;
                best.sequence.push_back(move);
                best.sequence.insert(best.sequence.end(), result.sequence.begin(), result.sequence.end());
                best.state = std::move(result.state);
            }
            if (ctx.halted()) {
                return best;
            }
        }
        // Advance along the best sequence found so far.
        const auto& next = best.sequence[played.size()];
        state = problem.play(state, next);
        played.push_back(next);
    }
    if (!best.state) {
        best.best_score = problem.score(state);
        best.state = std::move(state);
        best.sequence = played;
    }
    return best;
}

}  // namespace detail

template <SearchProblem P>
SearchOutcome<P> nmcs(const P& problem, const typename P::State& state, int level, Rng& rng,
                      const SearchLimits& limits = {}) {
    if (level < 0) {
        throw std::invalid_argument("nmcs level must be non-negative");
    }
    detail::Context<P> ctx(problem, rng, limits);
    auto out = detail::nmcs(ctx, state, level);
    ctx.finish(out.stats);
    return out;
}

// ---------------------------------------------------------------------------
// Nested rollout policy adaptation

// Replays `sequence` from the root; at each ply the played move gains alpha
// and every legal move loses alpha times its softmax probability under the
// incoming policy. Throws std::invalid_argument if a move is not legal.
template <SearchProblem P>
Policy adapt(const P& problem, const Policy& policy, std::span<const typename P::Move> sequence, double alpha = 1.0) {
    Policy out = policy;
    auto state = problem.root();
    for (const auto& played : sequence) {
        const std::vector<typename P::Move> moves = problem.legal_moves(state);
        const auto played_code = problem.move_code(played);
        const auto it = std::find_if(moves.begin(), moves.end(),
                                     [&](const auto& m) { return problem.move_code(m) == played_code; });
        if (it == moves.end()) {
            throw std::invalid_argument("adapt: sequence is not replayable from the root");
        }
        const auto probs = softmax_probabilities(problem, std::span<const typename P::Move>(moves), policy);
        out.add(played_code, alpha);
        for (std::size_t i = 0; i < moves.size(); ++i) {
            out.add(problem.move_code(moves[i]), -alpha * probs[i]);
        }
        state = problem.play(state, played);
    }
    return out;
}

struct NrpaConfig {
    int level = 1;
    int iterations = 100;
    double alpha = 1.0;
};

namespace detail {

template <SearchProblem P>
SearchOutcome<P> nrpa(Context<P>& ctx, const NrpaConfig& cfg, int level, const Policy& incoming) {
    if (level == 0) {
        return playout(ctx, ctx.problem.root(), &incoming);
    }
    Policy policy = incoming;
    SearchOutcome<P> best;
    for (int i = 0; i < cfg.iterations; ++i) {
        auto result = nrpa(ctx, cfg, level - 1, policy);
        if (result.best_score >= best.best_score) {
            best = std::move(result);
        }
        if (ctx.halted()) {
            break;
        }
        policy = adapt(ctx.problem, policy, std::span<const typename P::Move>(best.sequence), cfg.alpha);
    }
    return best;
}

}  // namespace detail

template <SearchProblem P>
SearchOutcome<P> nrpa(const P& problem, const NrpaConfig& cfg, Rng& rng, const Policy& policy = {},
                      const SearchLimits& limits = {}) {
    if (cfg.level < 0 || cfg.iterations < 1) {
        throw std::invalid_argument("nrpa needs level >= 0 and iterations >= 1");
    }
    detail::Context<P> ctx(problem, rng, limits);
    auto out = detail::nrpa(ctx, cfg, cfg.level, policy);
    ctx.finish(out.stats);
    return out;
}

// ---------------------------------------------------------------------------
// Greedy best-first search

struct GreedyConfig {
    std::optional<std::uint64_t> node_budget;  // maximum expansions
    std::optional<std::size_t> beam_cap;       // maximum open-list size
};

// Repeatedly expands a uniformly random open node of maximal evaluation,
// evaluating and inserting all its non-terminal children. Terminal children
// are scored and the best one is returned.
template <SearchProblem P>
SearchOutcome<P> greedy_bfs(const P& problem, const GreedyConfig& cfg, Rng& rng, const SearchLimits& limits = {}) {
    using Move = typename P::Move;
    using State = typename P::State;
    detail::Context<P> ctx(problem, rng, limits);

    struct Node {
        std::int64_t parent;
        Move move;
    };
    struct Entry {
        double key;
        std::uint64_t tie;
        std::uint32_t node;
        bool operator<(const Entry& o) const {
            if (key != o.key) {
                return key < o.key;
            }
            if (tie != o.tie) {
                return tie < o.tie;
            }
            return node < o.node;
        }
    };

    std::vector<Node> arena;
    std::set<Entry> open;
    std::unordered_set<std::uint64_t> seen;
    auto tie = [&] { return std::uniform_int_distribution<std::uint64_t>()(ctx.rng); };

    SearchOutcome<P> best;
    const State root = problem.root();
    if constexpr (HasStateKey<P>) {
        seen.insert(problem.state_key(root));
    }
    if (problem.is_terminal(root)) {
        best.best_score = problem.score(root);
        best.state = root;
        ctx.record_terminal(best.best_score);
        ctx.finish(best.stats);
        return best;
    }
    arena.push_back({-1, Move{}});
    open.insert({problem.evaluate(root), tie(), 0});

    auto path_to = [&](std::uint32_t idx) {
        std::vector<Move> path;
        for (std::int64_t i = idx; arena[i].parent >= 0; i = arena[i].parent) {
            path.push_back(arena[i].move);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::uint64_t expansions = 0;
    while (!open.empty() && !ctx.halted()) {
        if (cfg.node_budget && expansions >= *cfg.node_budget) {
            ctx.stats.complete = false;
            break;
        }
        const auto top = std::prev(open.end());
        const std::uint32_t idx = top->node;
        open.erase(top);
        ++expansions;

        const auto path = path_to(idx);
        State state = root;
        for (const auto& m : path) {
            state = problem.play(state, m);
        }
        const std::vector<Move> moves = problem.legal_moves(state);
        for (const auto& move : moves) {
            State child = problem.play(state, move);
            ++ctx.stats.nodes;
            if constexpr (HasStateKey<P>) {
                if (!seen.insert(problem.state_key(child)).second) {
                    continue;
                }
            }
            if (problem.is_terminal(child)) {
                const double s = problem.score(child);
                if (s > best.best_score || !best.state) {
                    best.best_score = s;
                    best.sequence = path;
                    best.sequence.push_back(move);
                    best.state = std::move(child);
                }
                ctx.record_terminal(s);
                if (ctx.halted()) {
                    break;
                }
                continue;
            }
            arena.push_back({static_cast<std::int64_t>(idx), move});
            open.insert({problem.evaluate(child), tie(), static_cast<std::uint32_t>(arena.size() - 1)});
            if (cfg.beam_cap && open.size() > *cfg.beam_cap) {
                open.erase(open.begin());
            }
        }
        ctx.check_clock();
    }
    ctx.finish(best.stats);
    return best;
}

// ---------------------------------------------------------------------------
// Restarts

struct RestartConfig {
    std::size_t max_restarts = 1;
    std::optional<double> timeout_s;  // wall clock per attempt
    std::size_t workers = 1;
    std::uint64_t base_seed = 0;
};

struct AttemptRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    double score = kNegInf;
    double elapsed_s = 0.0;
    bool success = false;
};

template <typename Outcome>
struct RestartResult {
    Outcome outcome;
    bool success = false;
    std::size_t winning_attempt = 0;
    std::vector<AttemptRecord> attempts;
};

// Seed of attempt i; attempt 0 uses the base seed itself.
inline std::uint64_t attempt_seed(std::uint64_t base, std::size_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * index;
    if (index == 0) {
        return base;
    }
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Runs attempts with independent seeds until one satisfies `success` or the
// restarts are exhausted. `attempt(seed, limits)` returns an outcome with a
// `best_score` member. With several workers, attempts run concurrently and
// the lowest-index success wins; otherwise the best-scoring failure is kept.
template <typename AttemptFn, typename SuccessFn>
auto restart_runner(AttemptFn attempt, SuccessFn success, const RestartConfig& cfg)
    -> RestartResult<std::invoke_result_t<AttemptFn, std::uint64_t, const SearchLimits&>> {
    using Outcome = std::invoke_result_t<AttemptFn, std::uint64_t, const SearchLimits&>;
    if (cfg.max_restarts < 1) {
        throw std::invalid_argument("restart runner needs at least one attempt");
    }
    std::vector<std::optional<Outcome>> outcomes(cfg.max_restarts);
    std::vector<AttemptRecord> records(cfg.max_restarts);
    std::vector<char> ran(cfg.max_restarts, 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};

    auto worker = [&] {
        while (!found.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cfg.max_restarts) {
                return;
            }
            SearchLimits limits;
            const auto start = Clock::now();
            if (cfg.timeout_s) {
                limits.deadline =
                    start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*cfg.timeout_s));
            }
            if (cfg.workers > 1) {
                limits.cancel = &found;
            }
            const std::uint64_t seed = attempt_seed(cfg.base_seed, i);
            Outcome out = attempt(seed, limits);
            AttemptRecord rec;
            rec.index = i;
            rec.seed = seed;
            rec.score = out.best_score;
            rec.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
            rec.success = success(out);
            records[i] = rec;
            outcomes[i] = std::move(out);
            ran[i] = 1;
            if (rec.success) {
                found.store(true);
            }
        }
    };

    if (cfg.workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < cfg.workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    RestartResult<Outcome> result;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < cfg.max_restarts; ++i) {
        if (!ran[i]) {
            continue;
        }
        result.attempts.push_back(records[i]);
        if (records[i].success && !result.success) {
            result.success = true;
            pick = i;
        }
    }
    if (!pick) {
        for (std::size_t i = 0; i < cfg.max_restarts; ++i) {
            if (ran[i] && (!pick || records[i].score > records[*pick].score)) {
                pick = i;
            }
        }
    }
    result.winning_attempt = *pick;
    result.outcome = std::move(*outcomes[*pick]);
    return result;
}

}  // namespace graphrefute::search
