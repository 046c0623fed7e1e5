#include "ban/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ban/audit.hpp"
#include "ban/dynamics.hpp"
#include "ban/error.hpp"
#include "ban/network.hpp"
#include "ban/perspective.hpp"
#include "json.hpp"

namespace ban::cli {
namespace {

/// Input error already carrying its full message (file:line:col: ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Parse>
auto parse_located(const std::string& where, Parse&& parse) {
    try {
        return parse();
    } catch (const ParseError& e) {
        throw InputError(where + ":" + std::to_string(e.line() ? e.line() : 1) + ":" +
                         std::to_string(e.column()) + ": " + e.message());
    }
}

Network load_network(const std::string& path) {
    const std::string text = read_file(path);
    return parse_located(path, [&] { return parse_network(text); });
}

Schedule parse_schedule_arg(const std::string& text) {
    return parse_located("--sched", [&] { return parse_schedule(text); });
}

Network negation_network(std::size_t n) {
    std::map<AutomatonId, Expr> functions;
    for (AutomatonId id = 1; id <= n; ++id) functions.emplace(id, !Expr::var(id));
    return Network(std::move(functions));
}

std::string join(const std::vector<AutomatonId>& ids, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string_view sign_symbol(InfluenceSign s) {
    switch (s) {
        case InfluenceSign::Positive: return "+";
        case InfluenceSign::Negative: return "-";
        default: return "+/-";
    }
}

struct Options {
    Limits limits;
    std::string net;
    std::string format;
    bool strict = false;
    std::string x0;
    std::string sched;
    long steps = -1;
    std::string mode = "parallel";
    bool self_loops = false;
    bool coordinate_one_first = false;
    std::string spec;
    bool no_verify = false;
    bool exhaustive = false;
    bool json = false;
    std::size_t negation = 0;
    std::string forbid;
};

Mode make_mode(const Options& o) {
    if (o.mode == "parallel") return Mode::parallel();
    if (o.mode == "async") return Mode::asynchronous();
    if (o.sched.empty()) throw InputError("--mode sched requires --sched");
    return Mode::scheduled(parse_schedule_arg(o.sched));
}

int cmd_graph(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const SignedDigraph g = interaction_digraph(net, o.limits);
    if (o.format == "dot") {
        out << "digraph interactions {\n";
        for (AutomatonId v : g.vertices()) out << "  \"" << v << "\";\n";
        for (const Arc& a : g.arcs()) {
            const std::string_view head = a.sign == InfluenceSign::Positive   ? "normal"
                                          : a.sign == InfluenceSign::Negative ? "tee"
                                                                              : "odot";
            out << "  \"" << a.source << "\" -> \"" << a.target << "\" [arrowhead=" << head
                << ", label=\"" << sign_symbol(a.sign) << "\"];\n";
        }
        out << "}\n";
    } else if (o.format == "json") {
        nlohmann::ordered_json j;
        j["vertices"] = std::vector<AutomatonId>(g.vertices().begin(), g.vertices().end());
        auto arcs = nlohmann::ordered_json::array();
        for (const Arc& a : g.arcs()) {
            arcs.push_back({{"source", a.source}, {"target", a.target}, {"sign", to_string(a.sign)}});
        }
        j["arcs"] = std::move(arcs);
        out << j.dump() << "\n";
    } else {
        for (const Arc& a : g.arcs()) {
            out << a.source << " -> " << a.target << " " << to_string(a.sign) << "\n";
        }
    }
    return kOk;
}

int cmd_monotone(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const MonotonyResult r = is_monotone(net, o.limits);
    if (r.monotone) {
        out << "monotone\n";
        return kOk;
    }
    const MonotonyWitness& w = *r.witness;
    const std::string fj = "f" + std::to_string(w.arc.target);
    const std::string xi = "x" + std::to_string(w.arc.source);
    out << "non-monotone\n";
    out << "witness arc: " << w.arc.source << " -> " << w.arc.target << "\n";
    out << "rising: " << w.rising.to_string() << " " << fj << "=1, " << fj << "=0 with " << xi
        << " flipped\n";
    out << "falling: " << w.falling.to_string() << " " << fj << "=0, " << fj << "=1 with " << xi
        << " flipped\n";
    return o.strict ? kFinding : kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const State x0 = parse_located("--x0", [&] { return State::parse(o.x0); });
    if (x0.size() != net.size()) {
        throw InputError("--x0 has " + std::to_string(x0.size()) + " bits, network has " +
                         std::to_string(net.size()) + " automata");
    }
    const Schedule sched = parse_schedule_arg(o.sched);
    const std::size_t steps = o.steps >= 0 ? static_cast<std::size_t>(o.steps) : sched.blocks().size();
    const auto trajectory = run_schedule(net, x0, sched, steps);
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        out << "t=" << t << " " << trajectory[t].to_string();
        if (t > 0) {
            const auto& block = sched.blocks()[(t - 1) % sched.blocks().size()];
            out << " updated {" << join(block) << "}";
        }
        out << "\n";
    }
    return kOk;
}

int cmd_transitions(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const TransitionGraph g =
        transition_graph(net, make_mode(o), o.limits, TransitionOptions{o.self_loops});
    if (o.format == "jsonl") {
        out << to_json_lines(g);
    } else {
        out << to_dot(g, DotOptions{o.coordinate_one_first});
    }
    return kOk;
}

int cmd_attractors(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const auto found = attractors(net, make_mode(o), o.limits);
    out << "attractors: " << found.size() << "\n";
    for (const auto& a : found) {
        out << to_string(a.kind) << ":";
        for (const auto& s : a.states) out << " " << s.to_string();
        out << "\n";
    }
    return kOk;
}

int cmd_project(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    const std::string spec_text = read_file(o.spec);
    const ObservationSpec spec = parse_located(o.spec, [&] { return parse_observation_spec(spec_text); });
    const ProjectedNetwork proj = project(net, spec, o.limits);
    out << format_projection(proj, spec);
    if (o.no_verify) return kOk;
    const ProjectionReport r = verify_projection(net, spec, proj, o.limits);
    out << "# verify: full-space disagreements " << r.full_space_disagreements << " of " << r.states
        << " states\n";
    out << "# verify: invariant-region disagreements " << r.invariant_region_disagreements << " of "
        << r.invariant_region_states << " states\n";
    if (!r.by_automaton.empty()) {
        out << "# verify: disagreeing states per automaton:";
        for (const auto& [id, count] : r.by_automaton) out << " " << id << "=" << count;
        out << "\n";
    }
    return o.strict && r.invariant_region_disagreements > 0 ? kFinding : kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
    if (o.negation == 0 && o.net.empty()) throw InputError("audit needs --net or --negation");
    const Network net = o.negation ? negation_network(o.negation) : load_network(o.net);
    const SyncConflictReport report = sync_conflicts(net, o.limits, SyncAuditOptions{o.exhaustive});
    const std::optional<ScheduleCensus> census =
        net.size() > 0 ? std::optional(schedule_census(net.size())) : std::nullopt;
    if (o.json) {
        out << sync_report_json(report, census.value_or(ScheduleCensus{}));
    } else {
        out << format_sync_report(report);
        if (census) out << "schedule census: " << census->to_string() << "\n";
    }
    if (!o.sched.empty()) {
        const Schedule sched = parse_schedule_arg(o.sched);
        const ScheduleClassification c = classify_schedule(sched, net, o.limits);
        out << "schedule " << to_string(sched) << ": " << to_string(c.kind) << "\n";
        if (!c.checked) {
            out << "synchronous update: not checked (network exceeds max-exhaustive)\n";
        } else if (c.synchronous_update) {
            const auto& s = *c.synchronous_update;
            out << "synchronous update: block " << s.block + 1 << " updates " << s.pair.first << " and "
                << s.pair.second << " while both are unstable in " << s.state.to_string() << "\n";
        } else {
            out << "synchronous update: none\n";
        }
    }
    return kOk;
}

int cmd_lint(const Options& o, std::ostream& out) {
    const Network net = load_network(o.net);
    std::vector<Op> used;
    std::vector<AutomatonId> offenders;
    for (const auto& [id, f] : net.functions()) {
        const auto ops = connectors(f);
        out << id << ":";
        bool offends = false;
        for (Op op : ops) {
            out << " " << connector_symbol(op);
            if (std::find(used.begin(), used.end(), op) == used.end()) used.push_back(op);
            offends = offends || o.forbid.find(connector_symbol(op)) != std::string::npos;
        }
        out << "\n";
        if (offends) offenders.push_back(id);
    }
    std::sort(used.begin(), used.end());
    out << "connectors:";
    for (Op op : used) out << " " << connector_symbol(op);
    out << "\n";
    out << "xor: " << (std::find(used.begin(), used.end(), Op::Xor) != used.end() ? "yes" : "no") << "\n";
    if (!o.forbid.empty()) {
        if (offenders.empty()) {
            out << "forbidden connectors: none used\n";
        } else {
            out << "forbidden connectors used by: " << join(offenders, ' ') << "\n";
            return kFinding;
        }
    }
    return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean automata network analysis", "ban"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--max-support", o.limits.max_support, "Largest truth-table support")
        ->capture_default_str();
    app.add_option("--max-exhaustive", o.limits.max_exhaustive,
                   "Largest automaton count for state-space enumeration")
        ->capture_default_str();

    auto net_option = [&](CLI::App* sub) {
        return sub->add_option("--net", o.net, "Network file (.ban)");
    };
    auto mode_options = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "parallel, async or sched")
            ->check(CLI::IsMember({"parallel", "async", "sched"}))
            ->capture_default_str();
        sub->add_option("--sched", o.sched, "Schedule for --mode sched, e.g. 3,2,4,1*");
    };

    auto* graph = app.add_subcommand("graph", "Signed interaction digraph");
    net_option(graph)->required();
    graph->add_option("--format", o.format, "text, dot or json")
        ->check(CLI::IsMember({"text", "dot", "json"}));

    auto* monotone = app.add_subcommand("monotone", "Monotony check with witness");
    net_option(monotone)->required();
    monotone->add_flag("--strict", o.strict, "Exit 1 when the network is not monotone");

    auto* simulate = app.add_subcommand("simulate", "Trajectory under a schedule");
    net_option(simulate)->required();
    simulate->add_option("--x0", o.x0, "Initial state, coordinate 1 first")->required();
    simulate->add_option("--sched", o.sched, "Schedule, e.g. {1,2,4} or 3,2,4,1*")->required();
    simulate->add_option("--steps", o.steps, "Block applications (default: one pass)");

    auto* transitions = app.add_subcommand("transitions", "Exhaustive transition graph");
    net_option(transitions)->required();
    mode_options(transitions);
    transitions->add_option("--format", o.format, "dot or jsonl")->check(CLI::IsMember({"dot", "jsonl"}));
    transitions->add_flag("--self-loops", o.self_loops, "Self-loops on stable states (async)");
    transitions->add_flag("--coordinate-one-first", o.coordinate_one_first,
                          "DOT labels with coordinate 1 first");

    auto* attr = app.add_subcommand("attractors", "Attractors of an update mode");
    net_option(attr)->required();
    mode_options(attr);

    auto* proj = app.add_subcommand("project", "Observed network under a perspective");
    net_option(proj)->required();
    proj->add_option("--spec", o.spec, "Perspective file (.spec)")->required();
    proj->add_flag("--no-verify", o.no_verify, "Skip the state-by-state verification");
    proj->add_flag("--strict", o.strict, "Exit 1 on invariant-region disagreements");

    auto* audit = app.add_subcommand("audit", "Synchronism audit and schedule census");
    net_option(audit);
    audit->add_option("--negation", o.negation, "Use the n-automaton network f_i = !x_i");
    audit->add_flag("--exhaustive", o.exhaustive, "Enumerate states even when a closed form exists");
    audit->add_flag("--json", o.json, "JSON report");
    audit->add_option("--sched", o.sched, "Also classify this schedule");

    auto* lint = app.add_subcommand("lint", "Connectors used by each local function");
    net_option(lint)->required();
    lint->add_option("--forbid", o.forbid, "Connectors to reject, e.g. ^ or &|");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (graph->parsed()) return cmd_graph(o, out);
        if (monotone->parsed()) return cmd_monotone(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (transitions->parsed()) return cmd_transitions(o, out);
        if (attr->parsed()) return cmd_attractors(o, out);
        if (proj->parsed()) return cmd_project(o, out);
        if (audit->parsed()) return cmd_audit(o, out);
        if (lint->parsed()) return cmd_lint(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace ban::cli
