#pragma once

// Update semantics layered over a Network: subset updates, schedules,
// trajectories, exhaustive transition graphs, fixed points and attractors.
//
// Exhaustive operations enumerate states in numeric order of the packed
// index, where coordinate 1 (the smallest automaton id) is the least
// significant bit. Outputs are therefore reproducible bit for bit.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ban/network.hpp"

namespace ban {

/// A finite sequence of nonempty update sets, optionally repeated forever.
class Schedule {
public:
    Schedule() = default;
    /// Blocks are sorted and deduplicated; an empty block throws
    /// std::invalid_argument.
    Schedule(std::vector<std::vector<AutomatonId>> blocks, bool periodic);

    /// [{V}], periodic.
    static Schedule parallel(const Network& net);
    /// One singleton block per automaton in `order`.
    static Schedule sequential(const std::vector<AutomatonId>& order, bool periodic);

    const std::vector<std::vector<AutomatonId>>& blocks() const noexcept { return blocks_; }
    bool periodic() const noexcept { return periodic_; }
    bool empty() const noexcept { return blocks_.empty(); }

    /// Throws std::invalid_argument if a block names an automaton outside `net`.
    void validate(const Network& net) const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::vector<std::vector<AutomatonId>> blocks_;
    bool periodic_ = false;
};

/// Comma-separated blocks, each a bare id or `{id,id,...}`; a trailing `*`
/// marks the schedule periodic, e.g. `3,2,4,1*` or `{1,2},{3}*`.
Schedule parse_schedule(std::string_view text);
std::string to_string(const Schedule& schedule);

/// x'_i = f_i(x) for i in `updated`, x_i otherwise.
State step(const Network& net, const State& x, std::span<const AutomatonId> updated);
State parallel_step(const Network& net, const State& x);

/// Trajectory of `steps` block applications starting at x0 (steps + 1
/// states). A non-periodic schedule supplies at most blocks().size() steps.
std::vector<State> run_schedule(const Network& net, const State& x0, const Schedule& schedule,
                                std::size_t steps);

enum class UpdateMode : std::uint8_t { Parallel, Asynchronous, Scheduled };

struct Mode {
    UpdateMode kind = UpdateMode::Parallel;
    /// Used by Scheduled: one transition applies every block once, in order.
    Schedule schedule;

    static Mode parallel() { return {UpdateMode::Parallel, {}}; }
    static Mode asynchronous() { return {UpdateMode::Asynchronous, {}}; }
    static Mode scheduled(Schedule s) { return {UpdateMode::Scheduled, std::move(s)}; }

    bool deterministic() const noexcept { return kind != UpdateMode::Asynchronous; }
};

struct TransitionOptions {
    /// Give stable states a self-loop in asynchronous graphs.
    bool self_loops = false;
};

class TransitionGraph {
public:
    struct Edge {
        std::uint64_t target;
        /// Updated automaton for asynchronous edges, 0 otherwise.
        AutomatonId automaton;
    };

    TransitionGraph(Mode mode, std::vector<AutomatonId> ids, std::vector<std::uint64_t> offsets,
                    std::vector<Edge> edges);

    const Mode& mode() const noexcept { return mode_; }
    std::span<const AutomatonId> ids() const noexcept { return ids_; }
    std::uint64_t state_count() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> successors(std::uint64_t state) const;

private:
    Mode mode_;
    std::vector<AutomatonId> ids_;
    std::vector<std::uint64_t> offsets_;
    std::vector<Edge> edges_;
};

TransitionGraph transition_graph(const Network& net, const Mode& mode, const Limits& limits = {},
                                 const TransitionOptions& options = {});

/// {x : U(x) = ∅}, ascending.
std::vector<State> fixed_points(const Network& net, const Limits& limits = {});

struct Attractor {
    enum class Kind : std::uint8_t { FixedPoint, Cycle, Complex };
    Kind kind;
    /// Cycles list their states in dynamical order starting from the
    /// smallest; asynchronous attractors list them ascending.
    std::vector<State> states;
};

std::string_view to_string(Attractor::Kind kind);

/// Deterministic modes: the cycles of the state map. Asynchronous mode: the
/// terminal strongly connected components (Complex when larger than one
/// state). Ordered by smallest state.
std::vector<Attractor> attractors(const Network& net, const Mode& mode, const Limits& limits = {});

struct DotOptions {
    /// Label nodes coordinate 1 first instead of coordinate n first.
    bool coordinate_one_first = false;
};

std::string to_dot(const TransitionGraph& graph, const DotOptions& options = {});
/// One JSON edge object per line; states are coordinate-1-first strings.
std::string to_json_lines(const TransitionGraph& graph);

}  // namespace ban
