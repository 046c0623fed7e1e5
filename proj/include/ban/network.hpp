#pragma once

// Boolean automata networks: automata, local functions, states, unstable
// sets, interaction digraphs and monotony. No update discipline lives here;
// see dynamics.hpp for that.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ban/expr.hpp"
#include "ban/limits.hpp"

namespace ban {

/// Boolean vector of a network state. Position k holds the state of the
/// network's k-th automaton in ascending id order.
class State {
public:
    State() = default;
    explicit State(std::size_t size, bool fill = false) : bits_(size, fill) {}
    explicit State(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Position k takes bit k of `index` (first coordinate least significant).
    static State from_index(std::size_t size, std::uint64_t index);
    /// Parses a coordinate-1-first bit string such as "111001".
    static State parse(std::string_view bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t position) const { return bits_[position]; }
    void set(std::size_t position, bool value) { bits_[position] = value; }
    void flip(std::size_t position) { bits_[position] = !bits_[position]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    /// Inverse of from_index; requires size() <= 64.
    std::uint64_t to_index() const;
    /// Coordinate-1-first bit string.
    std::string to_string() const;

    friend bool operator==(const State&, const State&) = default;
    /// Numeric order of to_index(), extended to any size.
    friend std::strong_ordering operator<=>(const State& a, const State& b);

private:
    std::vector<bool> bits_;
};

/// Signed arc of an interaction digraph.
struct Arc {
    AutomatonId source;
    AutomatonId target;
    InfluenceSign sign;

    friend bool operator==(const Arc&, const Arc&) = default;
};

class SignedDigraph {
public:
    SignedDigraph() = default;
    SignedDigraph(std::vector<AutomatonId> vertices, std::vector<Arc> arcs);

    std::span<const AutomatonId> vertices() const noexcept { return vertices_; }
    /// Sorted by (source, target).
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc* find(AutomatonId source, AutomatonId target) const;
    bool has_arc(AutomatonId source, AutomatonId target) const { return find(source, target); }

private:
    std::vector<AutomatonId> vertices_;
    std::vector<Arc> arcs_;
};

/// A set of automata with one local function each. Ids need not be
/// contiguous.
class Network {
public:
    Network() = default;
    /// Throws std::invalid_argument if an id is 0 or a function reads an
    /// automaton that is not in the network.
    explicit Network(std::map<AutomatonId, Expr> functions, NameTable names = {});

    std::size_t size() const noexcept { return ids_.size(); }
    /// Ascending.
    std::span<const AutomatonId> ids() const noexcept { return ids_; }
    bool contains(AutomatonId id) const;
    /// Position of `id` in ids(); throws std::out_of_range if absent.
    std::size_t position(AutomatonId id) const;
    const Expr& function(AutomatonId id) const;
    const std::map<AutomatonId, Expr>& functions() const noexcept { return functions_; }
    const NameTable& names() const noexcept { return names_; }

    /// Binds each automaton's variable to its coordinate in `x`.
    Assignment assignment(const State& x) const;
    /// f_id(x).
    bool evaluate(AutomatonId id, const State& x) const;

    /// Every automaton's function is semantically ¬x_i.
    bool is_negation_family(const Limits& limits = {}) const;

private:
    std::map<AutomatonId, Expr> functions_;
    std::vector<AutomatonId> ids_;
    NameTable names_;
};

/// {i : f_i(x) != x_i}, ascending.
std::vector<AutomatonId> unstable_set(const Network& net, const State& x);

SignedDigraph interaction_digraph(const Network& net, const Limits& limits = {});

/// Evidence that arc (source, target) has no consistent sign: with the
/// source at 1, `rising` has f_target above its flip and `falling` below.
struct MonotonyWitness {
    Arc arc;
    State rising;
    State falling;
};

struct MonotonyResult {
    bool monotone = true;
    std::optional<MonotonyWitness> witness;
};

/// The witness is the smallest non-monotone arc by (source, target), with
/// the smallest witnessing states; automata outside the target's support
/// are 0 in both states.
MonotonyResult is_monotone(const Network& net, const Limits& limits = {});

/// Network file: `<id>: <expression>` per line, `#` comments, blank lines
/// ignored. Throws ParseError carrying line and column.
Network parse_network(std::string_view text, const NameTable* names = nullptr);
/// One `<id>: <expression>` line per automaton in id order.
std::string format_network(const Network& net);

}  // namespace ban
