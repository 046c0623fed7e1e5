#include "ban/audit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "compiled_network.hpp"
#include "json.hpp"

namespace ban {

std::size_t SyncConflictReport::missing_unordered() const {
    std::size_t count = 0;
    for (const auto& [i, j] : conflicting_pairs) {
        const bool forward = std::binary_search(missing_arcs.begin(), missing_arcs.end(), AutomatonPair{i, j});
        const bool backward = std::binary_search(missing_arcs.begin(), missing_arcs.end(), AutomatonPair{j, i});
        if (forward && backward) ++count;
    }
    return count;
}

namespace {

void fill_missing_arcs(SyncConflictReport& report, const SignedDigraph* graph) {
    for (const auto& [i, j] : report.conflicting_pairs) {
        if (!graph || !graph->has_arc(i, j)) report.missing_arcs.push_back({i, j});
        if (!graph || !graph->has_arc(j, i)) report.missing_arcs.push_back({j, i});
    }
    std::sort(report.missing_arcs.begin(), report.missing_arcs.end());
}

}  // namespace

SyncConflictReport sync_conflicts(const Network& net, const Limits& limits,
                                  const SyncAuditOptions& options) {
    SyncConflictReport report;
    report.automata = net.size();
    const auto ids = net.ids();

    if (!options.force_exhaustive && net.is_negation_family(limits)) {
        // U(x) = V everywhere and the digraph has only self-loops.
        report.closed_form = true;
        const State zero(net.size());
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                report.conflicting_pairs.push_back({ids[a], ids[b]});
                report.witnesses.emplace(AutomatonPair{ids[a], ids[b]}, zero);
            }
        }
        fill_missing_arcs(report, nullptr);
        return report;
    }

    const detail::CompiledNetwork cn(net, limits);
    const std::size_t n = net.size();
    const std::size_t total_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::uint64_t x = 0; x < cn.state_count() && report.witnesses.size() < total_pairs; ++x) {
        const std::uint64_t unstable = cn.unstable_mask(x);
        if ((unstable & (unstable - 1)) == 0) continue;  // fewer than two
        for (std::size_t a = 0; a < n; ++a) {
            if (!((unstable >> a) & 1U)) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!((unstable >> b) & 1U)) continue;
                report.witnesses.try_emplace(AutomatonPair{ids[a], ids[b]}, detail::unpack(x, n));
            }
        }
    }
    for (const auto& [pair, state] : report.witnesses) report.conflicting_pairs.push_back(pair);

    const SignedDigraph graph = interaction_digraph(net, limits);
    fill_missing_arcs(report, &graph);
    return report;
}

std::string ScheduleCensus::exponent_form() const {
    const std::string n = std::to_string(automata);
    return "2^(" + n + "+2^" + n + ")";
}

std::string ScheduleCensus::to_string() const {
    return exact ? exact->str() : exponent_form();
}

ScheduleCensus schedule_census(std::size_t automata) {
    if (automata == 0) throw std::invalid_argument("census needs at least one automaton");
    ScheduleCensus census;
    census.automata = automata;
    if (automata <= 16) {
        boost::multiprecision::cpp_int value = 1;
        value <<= static_cast<unsigned>(automata + (std::size_t{1} << automata));
        census.exact = std::move(value);
    }
    return census;
}

std::string_view to_string(ScheduleClass c) {
    switch (c) {
        case ScheduleClass::Parallel: return "parallel";
        case ScheduleClass::Asynchronous: return "asynchronous";
        case ScheduleClass::Intermediary: return "intermediary";
    }
    return "";
}

ScheduleClassification classify_schedule(const Schedule& schedule, const Network& net,
                                         const Limits& limits) {
    schedule.validate(net);
    ScheduleClassification out;
    const auto& blocks = schedule.blocks();
    const bool all_parallel =
        !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) {
            return b.size() == net.size();
        });
    const bool all_singleton = std::all_of(blocks.begin(), blocks.end(),
                                           [](const auto& b) { return b.size() == 1; });
    if (all_parallel) {
        out.kind = ScheduleClass::Parallel;
    } else if (all_singleton) {
        out.kind = ScheduleClass::Asynchronous;
    } else {
        out.kind = ScheduleClass::Intermediary;
    }

    if (net.size() > limits.max_exhaustive || net.size() > 63) return out;
    const detail::CompiledNetwork cn(net, limits);
    out.checked = true;

    std::vector<bool> reachable(cn.state_count(), true);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const std::uint64_t mask = cn.mask_of(blocks[k]);
        std::vector<bool> next(cn.state_count(), false);
        for (std::uint64_t x = 0; x < cn.state_count(); ++x) {
            if (!reachable[x]) continue;
            const std::uint64_t both = cn.unstable_mask(x) & mask;
            if (!out.synchronous_update && (both & (both - 1)) != 0) {
                std::size_t a = 0;
                while (!((both >> a) & 1U)) ++a;
                std::size_t b = a + 1;
                while (!((both >> b) & 1U)) ++b;
                out.synchronous_update =
                    SynchronousUpdate{k, detail::unpack(x, net.size()), {net.ids()[a], net.ids()[b]}};
            }
            next[cn.step(x, mask)] = true;
        }
        if (out.synchronous_update) break;
        reachable = std::move(next);
    }
    return out;
}

std::string format_sync_report(const SyncConflictReport& report) {
    const std::size_t n = report.automata;
    std::string out;
    out += "automata: " + std::to_string(n) + "\n";
    out += "mode: " + std::string(report.closed_form ? "closed form (negation family)" : "exhaustive") + "\n";
    out += "conflicting pairs: " + std::to_string(report.conflicting_pairs.size()) + " of " +
           std::to_string(n * (n > 0 ? n - 1 : 0) / 2) + "\n";
    out += "missing arcs (ordered): " + std::to_string(report.missing_arcs.size()) + " of " +
           std::to_string(n * (n > 0 ? n - 1 : 0)) + "\n";
    out += "missing arcs (unordered): " + std::to_string(report.missing_unordered()) + "\n";
    if (n <= 64) {
        out += "pair      witness    i->j  j->i\n";
        for (const auto& [i, j] : report.conflicting_pairs) {
            const bool fwd = std::binary_search(report.missing_arcs.begin(), report.missing_arcs.end(),
                                                AutomatonPair{i, j});
            const bool bwd = std::binary_search(report.missing_arcs.begin(), report.missing_arcs.end(),
                                                AutomatonPair{j, i});
            std::string pair = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
            pair.resize(std::max<std::size_t>(pair.size() + 1, 10), ' ');
            std::string witness = report.witnesses.at({i, j}).to_string();
            witness.resize(std::max<std::size_t>(witness.size() + 1, 11), ' ');
            out += pair + witness + (fwd ? "miss  " : "arc   ") + (bwd ? "miss" : "arc") + "\n";
        }
    }
    return out;
}

std::string sync_report_json(const SyncConflictReport& report, const ScheduleCensus& census) {
    nlohmann::ordered_json j;
    j["automata"] = report.automata;
    j["closed_form"] = report.closed_form;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [a, b] : report.conflicting_pairs) {
        pairs.push_back({{"pair", {a, b}}, {"witness", report.witnesses.at({a, b}).to_string()}});
    }
    j["conflicting_pairs"] = std::move(pairs);
    auto missing = nlohmann::ordered_json::array();
    for (const auto& [a, b] : report.missing_arcs) missing.push_back({a, b});
    j["missing_arcs"] = std::move(missing);
    j["counts"] = {{"conflicting_pairs", report.conflicting_pairs.size()},
                   {"missing_arcs_ordered", report.missing_arcs.size()},
                   {"missing_arcs_unordered", report.missing_unordered()}};
    j["schedule_census"] = census.to_string();
    return j.dump() + "\n";
}

}  // namespace ban
