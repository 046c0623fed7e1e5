#include "ban/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "ban/error.hpp"

namespace ban {

struct Expr::Node {
    Op op = Op::Constant;
    bool value = false;
    AutomatonId id = 0;
    std::vector<Expr> children;
};

std::string_view to_string(InfluenceSign sign) {
    switch (sign) {
        case InfluenceSign::Positive: return "positive";
        case InfluenceSign::Negative: return "negative";
        case InfluenceSign::NonMonotone: return "non-monotone";
        case InfluenceSign::None: return "none";
    }
    return "none";
}

Assignment Assignment::from_bits(std::span<const bool> bits) {
    Assignment a;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        a.bind(static_cast<AutomatonId>(i + 1), bits[i]);
    }
    return a;
}

Assignment Assignment::from_bits(const std::vector<bool>& bits) {
    Assignment a;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        a.bind(static_cast<AutomatonId>(i + 1), bits[i]);
    }
    return a;
}

void Assignment::bind(AutomatonId id, bool value) {
    if (id >= values_.size()) values_.resize(id + 1, -1);
    values_[id] = value ? 1 : 0;
}

std::optional<bool> Assignment::lookup(AutomatonId id) const {
    if (id >= values_.size() || values_[id] < 0) return std::nullopt;
    return values_[id] == 1;
}

Expr::Expr() : Expr(constant(false)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(bool value) {
    static const Expr zero(std::make_shared<const Node>(Node{Op::Constant, false, 0, {}}));
    static const Expr one(std::make_shared<const Node>(Node{Op::Constant, true, 0, {}}));
    return value ? one : zero;
}

Expr Expr::var(AutomatonId id) {
    if (id == 0) throw std::invalid_argument("automaton ids start at 1");
    return Expr(std::make_shared<const Node>(Node{Op::Var, false, id, {}}));
}

Expr Expr::negate(Expr child) {
    return Expr(std::make_shared<const Node>(Node{Op::Not, false, 0, {std::move(child)}}));
}

namespace {

void require_arity(const std::vector<Expr>& children) {
    if (children.size() < 2) {
        throw std::invalid_argument("n-ary Boolean node needs at least two children");
    }
}

}  // namespace

Expr Expr::conjunction(std::vector<Expr> children) {
    require_arity(children);
    return Expr(std::make_shared<const Node>(Node{Op::And, false, 0, std::move(children)}));
}

Expr Expr::disjunction(std::vector<Expr> children) {
    require_arity(children);
    return Expr(std::make_shared<const Node>(Node{Op::Or, false, 0, std::move(children)}));
}

Expr Expr::exclusive_or(std::vector<Expr> children) {
    require_arity(children);
    return Expr(std::make_shared<const Node>(Node{Op::Xor, false, 0, std::move(children)}));
}

Op Expr::op() const noexcept { return node_->op; }
bool Expr::value() const noexcept { return node_->value; }
AutomatonId Expr::id() const noexcept { return node_->id; }
std::span<const Expr> Expr::children() const noexcept { return node_->children; }

bool Expr::is_literal() const noexcept {
    return op() == Op::Var || (op() == Op::Not && children()[0].op() == Op::Var);
}

namespace {

void collect_support(const Expr& e, std::vector<AutomatonId>& out) {
    if (e.op() == Op::Var) {
        out.push_back(e.id());
        return;
    }
    for (const auto& c : e.children()) collect_support(c, out);
}

}  // namespace

std::vector<AutomatonId> Expr::support() const {
    std::vector<AutomatonId> out;
    collect_support(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Expr::evaluate(const Assignment& assignment) const {
    switch (op()) {
        case Op::Constant:
            return value();
        case Op::Var: {
            auto v = assignment.lookup(id());
            if (!v) throw UnboundVariable(id());
            return *v;
        }
        case Op::Not:
            return !children()[0].evaluate(assignment);
        case Op::And:
            for (const auto& c : children()) {
                if (!c.evaluate(assignment)) return false;
            }
            return true;
        case Op::Or:
            for (const auto& c : children()) {
                if (c.evaluate(assignment)) return true;
            }
            return false;
        case Op::Xor: {
            bool acc = false;
            for (const auto& c : children()) acc ^= c.evaluate(assignment);
            return acc;
        }
    }
    return false;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
        case Op::Constant: return a.value() == b.value();
        case Op::Var: return a.id() == b.id();
        default: break;
    }
    auto ca = a.children();
    auto cb = b.children();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void NameTable::add(std::string name, AutomatonId id) {
    by_id_[id] = name;
    by_name_[std::move(name)] = id;
}

std::optional<AutomatonId> NameTable::find(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> NameTable::name_of(AutomatonId id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

Expr substitute(const Expr& expr, const std::map<AutomatonId, Expr>& bindings) {
    switch (expr.op()) {
        case Op::Constant:
            return expr;
        case Op::Var: {
            auto it = bindings.find(expr.id());
            return it == bindings.end() ? expr : it->second;
        }
        case Op::Not:
            return Expr::negate(substitute(expr.children()[0], bindings));
        default:
            break;
    }
    std::vector<Expr> kids;
    kids.reserve(expr.children().size());
    for (const auto& c : expr.children()) kids.push_back(substitute(c, bindings));
    switch (expr.op()) {
        case Op::And: return Expr::conjunction(std::move(kids));
        case Op::Or: return Expr::disjunction(std::move(kids));
        default: return Expr::exclusive_or(std::move(kids));
    }
}

namespace {

void collect_connectors(const Expr& e, bool (&seen)[6]) {
    seen[static_cast<int>(e.op())] = true;
    for (const auto& c : e.children()) collect_connectors(c, seen);
}

}  // namespace

std::vector<Op> connectors(const Expr& expr) {
    bool seen[6] = {};
    collect_connectors(expr, seen);
    std::vector<Op> out;
    for (Op op : {Op::Not, Op::And, Op::Or, Op::Xor}) {
        if (seen[static_cast<int>(op)]) out.push_back(op);
    }
    return out;
}

std::string_view connector_symbol(Op op) {
    switch (op) {
        case Op::Not: return "!";
        case Op::And: return "&";
        case Op::Or: return "|";
        case Op::Xor: return "^";
        default: return "";
    }
}

}  // namespace ban
