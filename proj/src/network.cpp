#include "ban/network.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ban/error.hpp"

namespace ban {

State State::from_index(std::size_t size, std::uint64_t index) {
    State s(size);
    for (std::size_t k = 0; k < size && k < 64; ++k) s.bits_[k] = (index >> k) & 1U;
    return s;
}

State State::parse(std::string_view bits) {
    State s(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw ParseError("state strings contain only 0 and 1", 1, k + 1);
        }
        s.bits_[k] = bits[k] == '1';
    }
    return s;
}

std::uint64_t State::to_index() const {
    if (bits_.size() > 64) throw std::length_error("state too wide for an index");
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k]) index |= std::uint64_t{1} << k;
    }
    return index;
}

std::string State::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) out += b ? '1' : '0';
    return out;
}

std::strong_ordering operator<=>(const State& a, const State& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a.bits_[k] != b.bits_[k]) return a.bits_[k] ? std::strong_ordering::greater
                                                        : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

SignedDigraph::SignedDigraph(std::vector<AutomatonId> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
        return std::pair(a.source, a.target) < std::pair(b.source, b.target);
    });
}

const Arc* SignedDigraph::find(AutomatonId source, AutomatonId target) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair(source, target),
                               [](const Arc& a, const std::pair<AutomatonId, AutomatonId>& key) {
                                   return std::pair(a.source, a.target) < key;
                               });
    if (it == arcs_.end() || it->source != source || it->target != target) return nullptr;
    return &*it;
}

Network::Network(std::map<AutomatonId, Expr> functions, NameTable names)
    : functions_(std::move(functions)), names_(std::move(names)) {
    for (const auto& [id, f] : functions_) {
        if (id == 0) throw std::invalid_argument("automaton ids start at 1");
        ids_.push_back(id);
    }
    for (const auto& [id, f] : functions_) {
        for (AutomatonId v : f.support()) {
            if (!functions_.count(v)) {
                throw std::invalid_argument("function of automaton " + std::to_string(id) +
                                            " reads x" + std::to_string(v) +
                                            ", which is not in the network");
            }
        }
    }
}

bool Network::contains(AutomatonId id) const { return functions_.count(id) != 0; }

std::size_t Network::position(AutomatonId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
        throw std::out_of_range("automaton " + std::to_string(id) + " is not in the network");
    }
    return static_cast<std::size_t>(it - ids_.begin());
}

const Expr& Network::function(AutomatonId id) const {
    auto it = functions_.find(id);
    if (it == functions_.end()) {
        throw std::out_of_range("automaton " + std::to_string(id) + " is not in the network");
    }
    return it->second;
}

Assignment Network::assignment(const State& x) const {
    if (x.size() != ids_.size()) {
        throw std::invalid_argument("state has " + std::to_string(x.size()) +
                                    " coordinates, network has " + std::to_string(ids_.size()) +
                                    " automata");
    }
    Assignment a;
    for (std::size_t k = 0; k < ids_.size(); ++k) a.bind(ids_[k], x[k]);
    return a;
}

bool Network::evaluate(AutomatonId id, const State& x) const {
    return function(id).evaluate(assignment(x));
}

bool Network::is_negation_family(const Limits& limits) const {
    for (const auto& [id, f] : functions_) {
        if (!semantically_equal(f, Expr::negate(Expr::var(id)), limits)) return false;
    }
    return true;
}

std::vector<AutomatonId> unstable_set(const Network& net, const State& x) {
    const Assignment a = net.assignment(x);
    std::vector<AutomatonId> out;
    for (std::size_t k = 0; k < net.size(); ++k) {
        const AutomatonId id = net.ids()[k];
        if (net.function(id).evaluate(a) != x[k]) out.push_back(id);
    }
    return out;
}

SignedDigraph interaction_digraph(const Network& net, const Limits& limits) {
    std::vector<Arc> arcs;
    for (const auto& [target, f] : net.functions()) {
        for (AutomatonId source : essential_vars(f, limits)) {
            arcs.push_back({source, target, influence_sign(f, source, limits)});
        }
    }
    return SignedDigraph({net.ids().begin(), net.ids().end()}, std::move(arcs));
}

MonotonyResult is_monotone(const Network& net, const Limits& limits) {
    const SignedDigraph g = interaction_digraph(net, limits);
    for (const Arc& arc : g.arcs()) {
        if (arc.sign != InfluenceSign::NonMonotone) continue;

        const SupportTable st = support_table(net.function(arc.target), limits);
        const auto j = static_cast<unsigned>(
            std::lower_bound(st.vars.begin(), st.vars.end(), arc.source) - st.vars.begin());
        const std::uint64_t bit = std::uint64_t{1} << j;

        auto embed = [&](std::uint64_t row) {
            State x(net.size());
            for (unsigned v = 0; v < st.vars.size(); ++v) {
                if ((row >> v) & 1U) x.set(net.position(st.vars[v]), true);
            }
            return x;
        };

        std::optional<State> rising;
        std::optional<State> falling;
        for (std::uint64_t r = 0; r < st.table.rows() && !(rising && falling); ++r) {
            if (!(r & bit)) continue;
            const bool high = st.table.get(r);
            const bool low = st.table.get(r & ~bit);
            if (!rising && high && !low) rising = embed(r);
            if (!falling && !high && low) falling = embed(r);
        }
        return {false, MonotonyWitness{arc, *rising, *falling}};
    }
    return {};
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    offset = 0;
    while (offset < s.size() && (s[offset] == ' ' || s[offset] == '\t' || s[offset] == '\r')) {
        ++offset;
    }
    std::size_t end = s.size();
    while (end > offset && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
    return s.substr(offset, end - offset);
}

}  // namespace

Network parse_network(std::string_view text, const NameTable* names) {
    std::map<AutomatonId, Expr> functions;
    std::map<AutomatonId, std::size_t> defined_at;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t lead = 0;
        std::string_view body = trim(line, lead);
        if (body.empty()) {
            if (end == text.size()) break;
            continue;
        }

        const std::size_t colon = body.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected '<id>: <expression>'", line_no, lead + 1);
        }
        std::size_t id_lead = 0;
        const std::string_view id_text = trim(body.substr(0, colon), id_lead);
        AutomatonId id = 0;
        auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
        if (id_text.empty() || ec != std::errc() || ptr != id_text.data() + id_text.size() || id == 0) {
            throw ParseError("automaton id must be a positive integer", line_no, lead + id_lead + 1);
        }
        if (auto prev = defined_at.find(id); prev != defined_at.end()) {
            throw ParseError("automaton " + std::to_string(id) + " already defined on line " +
                                 std::to_string(prev->second),
                             line_no, lead + id_lead + 1);
        }
        const std::size_t expr_offset = lead + colon + 1;
        try {
            functions.emplace(id, parse_expr(body.substr(colon + 1), names));
        } catch (const ParseError& e) {
            throw e.at_line(line_no, expr_offset);
        }
        defined_at.emplace(id, line_no);
        if (end == text.size()) break;
    }

    for (const auto& [id, f] : functions) {
        for (AutomatonId v : f.support()) {
            if (!functions.count(v)) {
                throw ParseError("automaton " + std::to_string(id) + " reads x" + std::to_string(v) +
                                     ", which has no function",
                                 defined_at.at(id), 1);
            }
        }
    }
    return Network(std::move(functions), names ? *names : NameTable{});
}

std::string format_network(const Network& net) {
    std::string out;
    for (const auto& [id, f] : net.functions()) {
        out += std::to_string(id);
        out += ": ";
        out += to_string(f);
        out += '\n';
    }
    return out;
}

}  // namespace ban
