#pragma once

// Symbolic Boolean expressions over automaton variables.
//
// Expressions are immutable trees of shared nodes; copying an Expr is cheap
// and every operation returns a new value. Variables are automaton ids,
// starting at 1.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ban/limits.hpp"
#include "ban/truth_table.hpp"

namespace ban {

using AutomatonId = std::uint32_t;

enum class Op : std::uint8_t { Constant, Var, Not, And, Or, Xor };

/// How a variable influences a function.
enum class InfluenceSign : std::uint8_t { Positive, Negative, NonMonotone, None };

std::string_view to_string(InfluenceSign sign);

/// Partial map from automaton id to bit.
class Assignment {
public:
    Assignment() = default;

    /// Binds x1..xn to bits[0..n-1].
    static Assignment from_bits(std::span<const bool> bits);
    static Assignment from_bits(const std::vector<bool>& bits);

    void bind(AutomatonId id, bool value);
    std::optional<bool> lookup(AutomatonId id) const;

private:
    std::vector<std::int8_t> values_;
};

class Expr {
public:
    /// Constant 0.
    Expr();

    static Expr constant(bool value);
    static Expr var(AutomatonId id);
    static Expr negate(Expr child);
    /// n-ary nodes; each requires at least two children.
    static Expr conjunction(std::vector<Expr> children);
    static Expr disjunction(std::vector<Expr> children);
    static Expr exclusive_or(std::vector<Expr> children);

    Op op() const noexcept;
    /// Value of a Constant node.
    bool value() const noexcept;
    /// Variable of a Var node.
    AutomatonId id() const noexcept;
    std::span<const Expr> children() const noexcept;

    bool is_constant() const noexcept { return op() == Op::Constant; }
    /// Var or Not(Var).
    bool is_literal() const noexcept;

    /// Variables occurring syntactically, sorted and unique.
    std::vector<AutomatonId> support() const;

    /// Throws UnboundVariable when the expression reads an unbound variable.
    bool evaluate(const Assignment& assignment) const;

    /// Structural (syntactic) equality.
    friend bool operator==(const Expr& a, const Expr& b);

    friend Expr operator!(const Expr& e) { return negate(e); }
    friend Expr operator&(const Expr& a, const Expr& b) { return conjunction({a, b}); }
    friend Expr operator|(const Expr& a, const Expr& b) { return disjunction({a, b}); }
    friend Expr operator^(const Expr& a, const Expr& b) { return exclusive_or({a, b}); }

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);

    std::shared_ptr<const Node> node_;
};

/// Optional display names for automata; maps both ways.
class NameTable {
public:
    void add(std::string name, AutomatonId id);
    std::optional<AutomatonId> find(std::string_view name) const;
    std::optional<std::string> name_of(AutomatonId id) const;
    bool empty() const noexcept { return by_name_.empty(); }

private:
    std::map<std::string, AutomatonId, std::less<>> by_name_;
    std::map<AutomatonId, std::string> by_id_;
};

/// Text form with operators `!`, `&`, `^`, `|` (binding tightest first) and
/// the minimum parentheses needed to parse back to the same tree.
std::string to_string(const Expr& expr);
std::string to_string(const Expr& expr, const NameTable& names);

/// Parses the text form. Variables are `x<id>` or bare names resolved via
/// `names`. Throws ParseError with a 1-based column.
Expr parse_expr(std::string_view text, const NameTable* names = nullptr);

/// Simultaneous substitution; unbound variables pass through.
Expr substitute(const Expr& expr, const std::map<AutomatonId, Expr>& bindings);

/// Truth table of an expression over its syntactic support (ascending ids).
struct SupportTable {
    std::vector<AutomatonId> vars;
    TruthTable table;
};

/// Throws LimitError if the syntactic support exceeds limits.max_support.
SupportTable support_table(const Expr& expr, const Limits& limits = {});

/// Variables the expression semantically depends on, ascending.
std::vector<AutomatonId> essential_vars(const Expr& expr, const Limits& limits = {});

InfluenceSign influence_sign(const Expr& expr, AutomatonId var, const Limits& limits = {});

/// Canonical form: a pure function of the truth table over the essential
/// variables. Constants and literals come back as such, parity functions as
/// Xor (or its negation), everything else as a minimized two-level form.
Expr simplify(const Expr& expr, const Limits& limits = {});

/// Truth-table equality over the union of both supports.
bool semantically_equal(const Expr& a, const Expr& b, const Limits& limits = {});

/// Connectives present in the tree (Not, And, Or, Xor), in that order.
std::vector<Op> connectors(const Expr& expr);
std::string_view connector_symbol(Op op);

}  // namespace ban
