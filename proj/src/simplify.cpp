// Truth-table analyses and the canonical simplifier.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_set>

#include "ban/error.hpp"
#include "ban/expr.hpp"

namespace ban {
namespace {

void check_support(std::size_t size, const Limits& limits) {
    if (size > limits.max_support || size > TruthTable::kMaxVars) {
        throw LimitError("expression support of " + std::to_string(size) +
                             " variables exceeds max-support=" + std::to_string(limits.max_support) +
                             "; raise --max-support or stay with truth-table-free operations "
                             "(evaluate, substitute)",
                         "max-support", limits.max_support);
    }
}

// `vars` is sorted; every support variable of `e` must be in it.
TruthTable build_table(const Expr& e, const std::vector<AutomatonId>& vars) {
    const auto k = static_cast<unsigned>(vars.size());
    switch (e.op()) {
        case Op::Constant:
            return TruthTable(k, e.value());
        case Op::Var: {
            auto it = std::lower_bound(vars.begin(), vars.end(), e.id());
            return TruthTable::variable(k, static_cast<unsigned>(it - vars.begin()));
        }
        case Op::Not:
            return ~build_table(e.children()[0], vars);
        default:
            break;
    }
    auto kids = e.children();
    TruthTable acc = build_table(kids[0], vars);
    for (std::size_t i = 1; i < kids.size(); ++i) {
        TruthTable t = build_table(kids[i], vars);
        if (e.op() == Op::And) {
            acc &= t;
        } else if (e.op() == Op::Or) {
            acc |= t;
        } else {
            acc ^= t;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Two-level minimization (Quine-McCluskey prime generation + greedy cover).

struct Cube {
    std::uint32_t value = 0;  // literal polarities on cared bits
    std::uint32_t care = 0;   // bits that appear as literals

    int literals() const { return std::popcount(care); }
    bool covers(std::uint32_t minterm) const { return (minterm & care) == value; }
};

struct Cover {
    std::vector<Cube> cubes;
    int literals = 0;
};

std::vector<Cube> prime_implicants(const TruthTable& f) {
    const unsigned k = f.num_vars();
    const std::uint32_t full = k == 32 ? ~0U : ((1U << k) - 1);
    auto key = [](std::uint32_t dash, std::uint32_t value) {
        return (std::uint64_t{dash} << 32) | value;
    };

    std::unordered_set<std::uint64_t> current;
    for (std::uint64_t r = 0; r < f.rows(); ++r) {
        if (f.get(r)) current.insert(key(0, static_cast<std::uint32_t>(r)));
    }
    std::vector<Cube> primes;
    while (!current.empty()) {
        std::unordered_set<std::uint64_t> next;
        std::unordered_set<std::uint64_t> merged;
        for (std::uint64_t item : current) {
            const auto dash = static_cast<std::uint32_t>(item >> 32);
            const auto value = static_cast<std::uint32_t>(item);
            for (unsigned b = 0; b < k; ++b) {
                const std::uint32_t bit = 1U << b;
                if ((dash & bit) || (value & bit)) continue;
                const std::uint64_t partner = key(dash, value | bit);
                if (current.count(partner)) {
                    next.insert(key(dash | bit, value));
                    merged.insert(item);
                    merged.insert(partner);
                }
            }
        }
        for (std::uint64_t item : current) {
            if (!merged.count(item)) {
                const auto dash = static_cast<std::uint32_t>(item >> 32);
                primes.push_back({static_cast<std::uint32_t>(item), full & ~dash});
            }
        }
        current = std::move(next);
    }
    std::sort(primes.begin(), primes.end(), [](const Cube& a, const Cube& b) {
        return std::tuple(a.literals(), a.care, a.value) < std::tuple(b.literals(), b.care, b.value);
    });
    return primes;
}

Cover minimum_cover(const TruthTable& f) {
    std::vector<std::uint32_t> minterms;
    for (std::uint64_t r = 0; r < f.rows(); ++r) {
        if (f.get(r)) minterms.push_back(static_cast<std::uint32_t>(r));
    }
    const std::vector<Cube> primes = prime_implicants(f);

    std::vector<std::vector<std::size_t>> covering(minterms.size());
    for (std::size_t m = 0; m < minterms.size(); ++m) {
        for (std::size_t p = 0; p < primes.size(); ++p) {
            if (primes[p].covers(minterms[m])) covering[m].push_back(p);
        }
    }

    std::vector<bool> covered(minterms.size(), false);
    std::vector<bool> chosen(primes.size(), false);
    auto choose = [&](std::size_t p) {
        chosen[p] = true;
        for (std::size_t m = 0; m < minterms.size(); ++m) {
            if (primes[p].covers(minterms[m])) covered[m] = true;
        }
    };

    for (std::size_t m = 0; m < minterms.size(); ++m) {
        if (covering[m].size() == 1 && !chosen[covering[m][0]]) choose(covering[m][0]);
    }
    for (;;) {
        std::size_t best = primes.size();
        std::size_t best_gain = 0;
        for (std::size_t p = 0; p < primes.size(); ++p) {
            if (chosen[p]) continue;
            std::size_t gain = 0;
            for (std::size_t m = 0; m < minterms.size(); ++m) {
                if (!covered[m] && primes[p].covers(minterms[m])) ++gain;
            }
            // Primes are sorted by literal count, so strict '>' keeps the cheaper one on ties.
            if (gain > best_gain) {
                best_gain = gain;
                best = p;
            }
        }
        if (best == primes.size()) break;
        choose(best);
    }

    // Drop primes made redundant by later picks, most expensive first.
    for (std::size_t p = primes.size(); p-- > 0;) {
        if (!chosen[p]) continue;
        bool redundant = true;
        for (std::size_t m = 0; m < minterms.size() && redundant; ++m) {
            if (!primes[p].covers(minterms[m])) continue;
            bool other = false;
            for (std::size_t q : covering[m]) {
                if (q != p && chosen[q]) {
                    other = true;
                    break;
                }
            }
            redundant = other;
        }
        if (redundant) chosen[p] = false;
    }

    Cover cover;
    for (std::size_t p = 0; p < primes.size(); ++p) {
        if (chosen[p]) {
            cover.cubes.push_back(primes[p]);
            cover.literals += primes[p].literals();
        }
    }
    return cover;
}

// ---------------------------------------------------------------------------
// Expression assembly.

struct Literal {
    unsigned position;
    bool positive;
    auto operator<=>(const Literal&) const = default;
};

using LiteralSet = std::vector<Literal>;

LiteralSet literals_of(const Cube& c, bool complement) {
    LiteralSet out;
    for (unsigned b = 0; b < 32; ++b) {
        if (c.care & (1U << b)) {
            const bool positive = (c.value >> b) & 1U;
            out.push_back({b, complement ? !positive : positive});
        }
    }
    return out;
}

Expr literal_expr(const Literal& l, const std::vector<AutomatonId>& vars) {
    Expr v = Expr::var(vars[l.position]);
    return l.positive ? v : Expr::negate(v);
}

Expr join(std::vector<Expr> parts, Op op) {
    if (parts.size() == 1) return parts.front();
    return op == Op::And ? Expr::conjunction(std::move(parts)) : Expr::disjunction(std::move(parts));
}

// outer(inner(l...), ...) with literals common to every group factored out:
// common & (rest | rest) for sums of products, common | (rest & rest) for
// products of sums.
Expr two_level(std::vector<LiteralSet> groups, Op outer, const std::vector<AutomatonId>& vars) {
    const Op inner = outer == Op::Or ? Op::And : Op::Or;
    std::sort(groups.begin(), groups.end(), [](const LiteralSet& a, const LiteralSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    auto group_expr = [&](const LiteralSet& g) {
        std::vector<Expr> lits;
        for (const auto& l : g) lits.push_back(literal_expr(l, vars));
        return join(std::move(lits), inner);
    };

    LiteralSet common;
    if (groups.size() >= 2) {
        common = groups.front();
        for (const auto& g : groups) {
            LiteralSet kept;
            std::set_intersection(common.begin(), common.end(), g.begin(), g.end(),
                                  std::back_inserter(kept));
            common = std::move(kept);
        }
    }
    if (!common.empty()) {
        std::vector<LiteralSet> rest;
        bool degenerate = false;
        for (const auto& g : groups) {
            LiteralSet r;
            std::set_difference(g.begin(), g.end(), common.begin(), common.end(),
                                std::back_inserter(r));
            degenerate = degenerate || r.empty();
            rest.push_back(std::move(r));
        }
        if (!degenerate) {
            std::vector<Expr> parts;
            for (const auto& l : common) parts.push_back(literal_expr(l, vars));
            std::vector<Expr> alternatives;
            for (const auto& r : rest) alternatives.push_back(group_expr(r));
            parts.push_back(join(std::move(alternatives), outer));
            return join(std::move(parts), inner);
        }
    }

    std::vector<Expr> parts;
    for (const auto& g : groups) parts.push_back(group_expr(g));
    return join(std::move(parts), outer);
}

TruthTable parity(unsigned k) {
    TruthTable p(k);
    for (unsigned j = 0; j < k; ++j) p ^= TruthTable::variable(k, j);
    return p;
}

// `table` depends on every one of its inputs; `vars` names them.
Expr canonical(const TruthTable& table, const std::vector<AutomatonId>& vars) {
    const unsigned k = table.num_vars();
    if (k == 0) return Expr::constant(table.get(0));
    if (k == 1) {
        Expr v = Expr::var(vars[0]);
        return table.get(1) ? v : Expr::negate(v);
    }

    const TruthTable odd = parity(k);
    if (table == odd || table == ~odd) {
        std::vector<Expr> kids;
        for (auto id : vars) kids.push_back(Expr::var(id));
        Expr x = Expr::exclusive_or(std::move(kids));
        return table == odd ? x : Expr::negate(x);
    }

    const Cover on = minimum_cover(table);
    const Cover off = minimum_cover(~table);
    const bool use_products = std::tuple(on.literals, on.cubes.size()) <=
                              std::tuple(off.literals, off.cubes.size());

    std::vector<LiteralSet> groups;
    for (const auto& c : use_products ? on.cubes : off.cubes) {
        groups.push_back(literals_of(c, !use_products));
    }
    return two_level(std::move(groups), use_products ? Op::Or : Op::And, vars);
}

}  // namespace

SupportTable support_table(const Expr& expr, const Limits& limits) {
    SupportTable out;
    out.vars = expr.support();
    check_support(out.vars.size(), limits);
    out.table = build_table(expr, out.vars);
    return out;
}

std::vector<AutomatonId> essential_vars(const Expr& expr, const Limits& limits) {
    const SupportTable st = support_table(expr, limits);
    std::vector<AutomatonId> out;
    for (unsigned j = 0; j < st.vars.size(); ++j) {
        if (st.table.depends_on(j)) out.push_back(st.vars[j]);
    }
    return out;
}

InfluenceSign influence_sign(const Expr& expr, AutomatonId var, const Limits& limits) {
    const SupportTable st = support_table(expr, limits);
    auto it = std::lower_bound(st.vars.begin(), st.vars.end(), var);
    if (it == st.vars.end() || *it != var) return InfluenceSign::None;
    const auto j = static_cast<unsigned>(it - st.vars.begin());
    const std::uint64_t bit = std::uint64_t{1} << j;
    bool rises = false;
    bool falls = false;
    for (std::uint64_t r = 0; r < st.table.rows(); ++r) {
        if (r & bit) continue;
        const bool low = st.table.get(r);
        const bool high = st.table.get(r | bit);
        rises = rises || (high && !low);
        falls = falls || (low && !high);
    }
    if (rises && falls) return InfluenceSign::NonMonotone;
    if (rises) return InfluenceSign::Positive;
    if (falls) return InfluenceSign::Negative;
    return InfluenceSign::None;
}

Expr simplify(const Expr& expr, const Limits& limits) {
    if (expr.is_constant() || expr.op() == Op::Var) return expr;
    const SupportTable st = support_table(expr, limits);

    std::vector<unsigned> positions;
    std::vector<AutomatonId> vars;
    for (unsigned j = 0; j < st.vars.size(); ++j) {
        if (st.table.depends_on(j)) {
            positions.push_back(j);
            vars.push_back(st.vars[j]);
        }
    }

    // Restrict to the essential inputs; the others are fixed at 0.
    TruthTable reduced(static_cast<unsigned>(positions.size()));
    for (std::uint64_t r = 0; r < reduced.rows(); ++r) {
        std::uint64_t full = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if ((r >> i) & 1U) full |= std::uint64_t{1} << positions[i];
        }
        reduced.set(r, st.table.get(full));
    }
    return canonical(reduced, vars);
}

bool semantically_equal(const Expr& a, const Expr& b, const Limits& limits) {
    std::vector<AutomatonId> vars = a.support();
    const auto vb = b.support();
    vars.insert(vars.end(), vb.begin(), vb.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    check_support(vars.size(), limits);
    return build_table(a, vars) == build_table(b, vars);
}

}  // namespace ban
