#pragma once

// Synchronism audits: which automata can be unstable together, which of
// those pairs lack an arc in the interaction digraph, how a schedule sits
// between the parallel and the asynchronous disciplines, and the census
// figure for intermediary update modes.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ban/dynamics.hpp"
#include "ban/network.hpp"

namespace ban {

using AutomatonPair = std::pair<AutomatonId, AutomatonId>;

struct SyncConflictReport {
    std::size_t automata = 0;
    /// Unordered pairs {i, j} (stored i < j) with {i, j} ⊆ U(x) for some x.
    std::vector<AutomatonPair> conflicting_pairs;
    /// Ordered pairs (i, j) of conflicting automata with no arc i -> j.
    std::vector<AutomatonPair> missing_arcs;
    /// First state, in enumeration order, witnessing each conflicting pair.
    std::map<AutomatonPair, State> witnesses;
    /// True when the negation-family closed form was used.
    bool closed_form = false;

    /// Conflicting pairs with no arc in either direction.
    std::size_t missing_unordered() const;
};

struct SyncAuditOptions {
    /// Skip the closed form even for negation-family networks.
    bool force_exhaustive = false;
};

/// Exhaustive over 2^n states, or closed form when every f_i is ¬x_i: then
/// every pair conflicts (witness: the all-zero state) and every non-loop
/// ordered pair is missing.
SyncConflictReport sync_conflicts(const Network& net, const Limits& limits = {},
                                  const SyncAuditOptions& options = {});

/// 2^(n + 2^n), the census of update modes between "parallel" and
/// "asynchronous" for n automata, taken as a given figure; it is not derived
/// here. The exact value is kept for n <= 16.
struct ScheduleCensus {
    std::size_t automata = 0;
    std::optional<boost::multiprecision::cpp_int> exact;

    /// Decimal digits when exact, otherwise "2^(n+2^n)".
    std::string to_string() const;
    /// "2^(n+2^n)" for every n.
    std::string exponent_form() const;
};

/// Throws std::invalid_argument for n = 0.
ScheduleCensus schedule_census(std::size_t automata);

enum class ScheduleClass : std::uint8_t { Parallel, Asynchronous, Intermediary };

std::string_view to_string(ScheduleClass c);

struct SynchronousUpdate {
    std::size_t block = 0;  // index into the schedule's blocks
    State state;            // a state reachable when the block fires
    AutomatonPair pair;     // two automata of the block unstable in `state`
};

struct ScheduleClassification {
    ScheduleClass kind = ScheduleClass::Parallel;
    /// Whether the reachability sweep ran (requires n <= max-exhaustive).
    bool checked = false;
    /// First block that updates two simultaneously unstable automata.
    std::optional<SynchronousUpdate> synchronous_update;
};

/// Parallel when every block is V, Asynchronous when every block is a
/// singleton (Parallel wins for n = 1, Asynchronous for an empty schedule),
/// Intermediary otherwise. The sweep starts from every state and follows
/// one pass of the blocks; later passes only revisit states already seen.
ScheduleClassification classify_schedule(const Schedule& schedule, const Network& net,
                                         const Limits& limits = {});

std::string format_sync_report(const SyncConflictReport& report);
std::string sync_report_json(const SyncConflictReport& report, const ScheduleCensus& census);

}  // namespace ban
