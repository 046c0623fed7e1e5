#include "ban/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "ban/error.hpp"
#include "compiled_network.hpp"
#include "json.hpp"

namespace ban {

Schedule::Schedule(std::vector<std::vector<AutomatonId>> blocks, bool periodic)
    : blocks_(std::move(blocks)), periodic_(periodic) {
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("schedule blocks must be nonempty");
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
    }
}

Schedule Schedule::parallel(const Network& net) {
    if (net.size() == 0) return Schedule({}, true);
    return Schedule({{net.ids().begin(), net.ids().end()}}, true);
}

Schedule Schedule::sequential(const std::vector<AutomatonId>& order, bool periodic) {
    std::vector<std::vector<AutomatonId>> blocks;
    for (AutomatonId id : order) blocks.push_back({id});
    return Schedule(std::move(blocks), periodic);
}

void Schedule::validate(const Network& net) const {
    for (const auto& block : blocks_) {
        for (AutomatonId id : block) {
            if (!net.contains(id)) {
                throw std::invalid_argument("schedule updates automaton " + std::to_string(id) +
                                            ", which is not in the network");
            }
        }
    }
}

namespace {

class ScheduleParser {
public:
    explicit ScheduleParser(std::string_view text) : text_(text) {}

    Schedule parse() {
        std::vector<std::vector<AutomatonId>> blocks;
        bool periodic = false;
        skip_space();
        if (at_end()) return Schedule({}, false);
        if (peek() == '*') {
            ++pos_;
            periodic = true;
        } else {
            for (;;) {
                blocks.push_back(parse_block());
                skip_space();
                if (at_end()) break;
                if (peek() == '*') {
                    ++pos_;
                    periodic = true;
                    break;
                }
                expect(',');
            }
        }
        skip_space();
        if (!at_end()) fail("unexpected text after schedule");
        return Schedule(std::move(blocks), periodic);
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, 0, pos_ + 1);
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    AutomatonId parse_id() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        AutomatonId id = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, id);
        if (start == pos_ || ec != std::errc() || id == 0) {
            pos_ = start;
            fail("expected a positive automaton id");
        }
        return id;
    }

    std::vector<AutomatonId> parse_block() {
        skip_space();
        if (!at_end() && peek() == '{') {
            ++pos_;
            std::vector<AutomatonId> block{parse_id()};
            skip_space();
            while (!at_end() && peek() == ',') {
                ++pos_;
                block.push_back(parse_id());
                skip_space();
            }
            expect('}');
            return block;
        }
        return {parse_id()};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Schedule parse_schedule(std::string_view text) { return ScheduleParser(text).parse(); }

std::string to_string(const Schedule& schedule) {
    std::string out;
    bool first = true;
    for (const auto& block : schedule.blocks()) {
        if (!first) out += ',';
        first = false;
        if (block.size() == 1) {
            out += std::to_string(block.front());
            continue;
        }
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    if (schedule.periodic()) out += '*';
    return out;
}

State step(const Network& net, const State& x, std::span<const AutomatonId> updated) {
    const Assignment a = net.assignment(x);
    State next = x;
    for (AutomatonId id : updated) {
        if (!net.contains(id)) {
            throw std::invalid_argument("cannot update automaton " + std::to_string(id) +
                                        ": not in the network");
        }
        next.set(net.position(id), net.function(id).evaluate(a));
    }
    return next;
}

State parallel_step(const Network& net, const State& x) { return step(net, x, net.ids()); }

std::vector<State> run_schedule(const Network& net, const State& x0, const Schedule& schedule,
                                std::size_t steps) {
    schedule.validate(net);
    if (steps > 0 && schedule.empty()) {
        throw std::invalid_argument("an empty schedule cannot take steps");
    }
    if (!schedule.periodic() && steps > schedule.blocks().size()) {
        throw std::invalid_argument("non-periodic schedule has only " +
                                    std::to_string(schedule.blocks().size()) + " blocks");
    }
    std::vector<State> trajectory{x0};
    trajectory.reserve(steps + 1);
    for (std::size_t t = 0; t < steps; ++t) {
        const auto& block = schedule.blocks()[t % schedule.blocks().size()];
        trajectory.push_back(step(net, trajectory.back(), block));
    }
    return trajectory;
}

TransitionGraph::TransitionGraph(Mode mode, std::vector<AutomatonId> ids,
                                 std::vector<std::uint64_t> offsets, std::vector<Edge> edges)
    : mode_(std::move(mode)), ids_(std::move(ids)), offsets_(std::move(offsets)),
      edges_(std::move(edges)) {}

std::span<const TransitionGraph::Edge> TransitionGraph::successors(std::uint64_t state) const {
    return std::span<const Edge>(edges_).subspan(offsets_[state], offsets_[state + 1] - offsets_[state]);
}

TransitionGraph transition_graph(const Network& net, const Mode& mode, const Limits& limits,
                                 const TransitionOptions& options) {
    const detail::CompiledNetwork cn(net, limits);
    std::vector<std::uint64_t> masks;
    if (mode.kind == UpdateMode::Scheduled) {
        mode.schedule.validate(net);
        for (const auto& block : mode.schedule.blocks()) masks.push_back(cn.mask_of(block));
    }

    const std::uint64_t states = cn.state_count();
    std::vector<std::uint64_t> offsets;
    offsets.reserve(states + 1);
    std::vector<TransitionGraph::Edge> edges;
    edges.reserve(states);
    const std::uint64_t all = states - 1;

    for (std::uint64_t x = 0; x < states; ++x) {
        offsets.push_back(edges.size());
        switch (mode.kind) {
            case UpdateMode::Parallel:
                edges.push_back({cn.step(x, all), 0});
                break;
            case UpdateMode::Scheduled: {
                std::uint64_t y = x;
                for (auto m : masks) y = cn.step(y, m);
                edges.push_back({y, 0});
                break;
            }
            case UpdateMode::Asynchronous: {
                const std::uint64_t unstable = cn.unstable_mask(x);
                if (unstable == 0 && options.self_loops) edges.push_back({x, 0});
                for (std::size_t k = 0; k < cn.size(); ++k) {
                    const std::uint64_t bit = std::uint64_t{1} << k;
                    if (unstable & bit) edges.push_back({x ^ bit, net.ids()[k]});
                }
                break;
            }
        }
    }
    offsets.push_back(edges.size());
    return TransitionGraph(mode, {net.ids().begin(), net.ids().end()}, std::move(offsets),
                           std::move(edges));
}

std::vector<State> fixed_points(const Network& net, const Limits& limits) {
    const detail::CompiledNetwork cn(net, limits);
    std::vector<State> out;
    for (std::uint64_t x = 0; x < cn.state_count(); ++x) {
        if (cn.unstable_mask(x) == 0) out.push_back(detail::unpack(x, net.size()));
    }
    return out;
}

std::string_view to_string(Attractor::Kind kind) {
    switch (kind) {
        case Attractor::Kind::FixedPoint: return "fixed-point";
        case Attractor::Kind::Cycle: return "cycle";
        case Attractor::Kind::Complex: return "complex";
    }
    return "";
}

namespace {

std::vector<Attractor> deterministic_attractors(const TransitionGraph& g, std::size_t n) {
    const std::uint64_t states = g.state_count();
    // 0 unvisited, 1 on the current walk, 2 finished.
    std::vector<std::uint8_t> color(states, 0);
    std::vector<Attractor> out;
    std::vector<std::uint64_t> walk;
    for (std::uint64_t start = 0; start < states; ++start) {
        if (color[start]) continue;
        walk.clear();
        std::uint64_t x = start;
        while (color[x] == 0) {
            color[x] = 1;
            walk.push_back(x);
            x = g.successors(x)[0].target;
        }
        if (color[x] == 1) {
            std::vector<std::uint64_t> cycle(std::find(walk.begin(), walk.end(), x), walk.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            Attractor a{cycle.size() == 1 ? Attractor::Kind::FixedPoint : Attractor::Kind::Cycle, {}};
            for (auto s : cycle) a.states.push_back(detail::unpack(s, n));
            out.push_back(std::move(a));
        }
        for (auto s : walk) color[s] = 2;
    }
    return out;
}

// Iterative Tarjan; returns the terminal components.
std::vector<Attractor> terminal_components(const TransitionGraph& g, std::size_t n) {
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};
    const std::uint64_t states = g.state_count();
    std::vector<std::uint64_t> index(states, kUnset);
    std::vector<std::uint64_t> low(states, 0);
    std::vector<bool> on_stack(states, false);
    std::vector<std::uint64_t> component(states, kUnset);
    std::vector<std::uint64_t> stack;
    std::vector<std::pair<std::uint64_t, std::size_t>> frames;
    std::vector<std::vector<std::uint64_t>> components;
    std::uint64_t counter = 0;

    for (std::uint64_t root = 0; root < states; ++root) {
        if (index[root] != kUnset) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, next_edge] = frames.back();
            const auto succ = g.successors(v);
            if (next_edge < succ.size()) {
                const std::uint64_t w = succ[next_edge++].target;
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::uint64_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint64_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<std::uint64_t> members;
                std::uint64_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components.size();
                    members.push_back(w);
                } while (w != done);
                components.push_back(std::move(members));
            }
        }
    }

    std::vector<Attractor> out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        bool terminal = true;
        for (auto s : components[c]) {
            for (const auto& e : g.successors(s)) terminal = terminal && component[e.target] == c;
        }
        if (!terminal) continue;
        auto members = components[c];
        std::sort(members.begin(), members.end());
        Attractor a{members.size() == 1 ? Attractor::Kind::FixedPoint : Attractor::Kind::Complex, {}};
        for (auto s : members) a.states.push_back(detail::unpack(s, n));
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

std::vector<Attractor> attractors(const Network& net, const Mode& mode, const Limits& limits) {
    const TransitionGraph g = transition_graph(net, mode, limits);
    auto out = mode.deterministic() ? deterministic_attractors(g, net.size())
                                    : terminal_components(g, net.size());
    std::sort(out.begin(), out.end(), [](const Attractor& a, const Attractor& b) {
        return *std::min_element(a.states.begin(), a.states.end()) <
               *std::min_element(b.states.begin(), b.states.end());
    });
    return out;
}

namespace {

std::string label(std::uint64_t state, std::size_t n, bool coordinate_one_first) {
    std::string s = detail::unpack(state, n).to_string();
    if (!coordinate_one_first) std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

std::string to_dot(const TransitionGraph& graph, const DotOptions& options) {
    const std::size_t n = graph.ids().size();
    std::string out = "digraph transitions {\n";
    for (std::uint64_t x = 0; x < graph.state_count(); ++x) {
        out += "  \"" + label(x, n, options.coordinate_one_first) + "\";\n";
    }
    for (std::uint64_t x = 0; x < graph.state_count(); ++x) {
        for (const auto& e : graph.successors(x)) {
            out += "  \"" + label(x, n, options.coordinate_one_first) + "\" -> \"" +
                   label(e.target, n, options.coordinate_one_first) + "\"";
            if (e.automaton != 0) out += " [label=\"" + std::to_string(e.automaton) + "\"]";
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string to_json_lines(const TransitionGraph& graph) {
    const std::size_t n = graph.ids().size();
    std::string out;
    for (std::uint64_t x = 0; x < graph.state_count(); ++x) {
        for (const auto& e : graph.successors(x)) {
            nlohmann::ordered_json line;
            line["from"] = label(x, n, true);
            line["to"] = label(e.target, n, true);
            if (e.automaton != 0) line["automaton"] = e.automaton;
            out += line.dump();
            out += '\n';
        }
    }
    return out;
}

}  // namespace ban
