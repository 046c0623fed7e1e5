#pragma once

// Observed networks. An observer who cannot see some automata, and who
// samples the system once per period of a rhythm that a block of automata
// follow, sees a different network than the underlying one. project()
// derives that network by symbolic composition along the rhythm, hiding,
// and optional constant propagation; verify_projection() checks it against
// the underlying dynamics state by state.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ban/dynamics.hpp"
#include "ban/network.hpp"

namespace ban {

struct ObservationSpec {
    /// Automata the observer is unaware of; must lie in the rhythmic block.
    std::vector<AutomatonId> hidden;
    /// Automata caught in the common rhythm.
    std::vector<AutomatonId> rhythmic_block;
    /// One period of the rhythm; observation happens after the full period.
    Schedule micro_schedule;
    bool constant_propagation = false;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate(const Network& net) const;
};

/// `hidden=4; rhythm=1,2,3,4; micro=3,2,4,1; propagate=on`. Entries are
/// separated by `;` or newlines; `#` starts a comment; omitted keys default
/// to empty / off.
ObservationSpec parse_observation_spec(std::string_view text);
std::string to_string(const ObservationSpec& spec);

/// Symbolic state of every automaton after one pass over `period`, starting
/// from the symbolic state (x_1, ..., x_n). Results are simplified.
std::map<AutomatonId, Expr> compose_along(const Network& net, const Schedule& period,
                                          const Limits& limits = {});

struct ProjectedNetwork {
    /// What the observer sees.
    Network network;
    /// `network` before constant propagation.
    Network raw;
    /// Visible automata that change during one observed step.
    std::vector<AutomatonId> updated_set;
    /// Automata whose observed function became constant, with the constant.
    std::map<AutomatonId, bool> propagated_constants;
    /// How each visible automaton's function was obtained.
    std::map<AutomatonId, std::vector<std::string>> provenance;
};

/// Throws HidingError when a visible function still reads a hidden automaton.
ProjectedNetwork project(const Network& net, const ObservationSpec& spec, const Limits& limits = {});

/// State-by-state comparison of a projection with the underlying network.
///
/// For every underlying state x, one period of the micro-schedule is run on
/// `net` and restricted to the visible automata; this must equal one step of
/// the projected network from the restriction of x updating updated_set.
/// Visible automata outside the rhythmic block are additionally compared on
/// their local functions at x. The invariant region is the set of states
/// holding every propagated constant (the whole space without propagation).
struct ProjectionReport {
    std::uint64_t states = 0;
    std::uint64_t full_space_disagreements = 0;
    std::uint64_t invariant_region_states = 0;
    std::uint64_t invariant_region_disagreements = 0;
    /// Full-space disagreeing states per visible automaton.
    std::map<AutomatonId, std::uint64_t> by_automaton;
    /// The first few disagreeing underlying states, ascending.
    std::vector<State> examples;
};

ProjectionReport verify_projection(const Network& net, const ObservationSpec& spec,
                                   const ProjectedNetwork& proj, const Limits& limits = {});

/// Network file of the projection, preceded by the perspective and followed
/// by the provenance, both as comments.
std::string format_projection(const ProjectedNetwork& proj, const ObservationSpec& spec);

}  // namespace ban
