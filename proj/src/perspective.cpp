#include "ban/perspective.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "ban/error.hpp"
#include "compiled_network.hpp"

namespace ban {
namespace {

bool contains(const std::vector<AutomatonId>& sorted, AutomatonId id) {
    return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<AutomatonId> sorted_unique(std::vector<AutomatonId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string join_ids(const std::vector<AutomatonId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace

void ObservationSpec::validate(const Network& net) const {
    if (micro_schedule.periodic()) {
        throw std::invalid_argument("the micro-schedule is one period and must not be periodic");
    }
    const auto rhythm = sorted_unique(rhythmic_block);
    for (AutomatonId id : rhythm) {
        if (!net.contains(id)) {
            throw std::invalid_argument("rhythmic automaton " + std::to_string(id) +
                                        " is not in the network");
        }
    }
    for (AutomatonId id : hidden) {
        if (!contains(rhythm, id)) {
            throw std::invalid_argument("hidden automaton " + std::to_string(id) +
                                        " is outside the rhythmic block and cannot be composed away");
        }
    }
    std::set<AutomatonId> fired;
    for (const auto& block : micro_schedule.blocks()) {
        for (AutomatonId id : block) {
            if (!contains(rhythm, id)) {
                throw std::invalid_argument("micro-schedule updates automaton " + std::to_string(id) +
                                            ", which is outside the rhythmic block");
            }
            fired.insert(id);
        }
    }
    for (AutomatonId id : hidden) {
        if (!fired.count(id)) {
            throw std::invalid_argument("hidden automaton " + std::to_string(id) +
                                        " is never updated by the micro-schedule");
        }
    }
}

namespace {

std::vector<AutomatonId> parse_id_list(std::string_view value, std::size_t line, std::size_t column) {
    std::vector<AutomatonId> ids;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < value.size() && (value[pos] == ' ' || value[pos] == '\t')) ++pos;
    };
    skip();
    if (pos == value.size()) return ids;
    for (;;) {
        skip();
        const std::size_t start = pos;
        while (pos < value.size() && std::isdigit(static_cast<unsigned char>(value[pos]))) ++pos;
        AutomatonId id = 0;
        auto [ptr, ec] = std::from_chars(value.data() + start, value.data() + pos, id);
        if (start == pos || ec != std::errc() || id == 0) {
            throw ParseError("expected a positive automaton id", line, column + start);
        }
        ids.push_back(id);
        skip();
        if (pos == value.size()) break;
        if (value[pos] != ',') throw ParseError("expected ','", line, column + pos);
        ++pos;
    }
    return ids;
}

std::string_view trim_view(std::string_view s, std::size_t& lead) {
    lead = 0;
    while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    std::size_t end = s.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(lead, end - lead);
}

}  // namespace

ObservationSpec parse_observation_spec(std::string_view text) {
    ObservationSpec spec;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::size_t entry_start = 0;
        while (entry_start <= line.size()) {
            std::size_t entry_end = line.find(';', entry_start);
            if (entry_end == std::string_view::npos) entry_end = line.size();
            std::size_t lead = 0;
            const std::string_view entry =
                trim_view(line.substr(entry_start, entry_end - entry_start), lead);
            const std::size_t column = entry_start + lead + 1;
            if (!entry.empty()) {
                const std::size_t eq = entry.find('=');
                if (eq == std::string_view::npos) {
                    throw ParseError("expected key=value", line_no, column);
                }
                std::size_t key_lead = 0;
                const std::string key(trim_view(entry.substr(0, eq), key_lead));
                const std::string_view value = entry.substr(eq + 1);
                const std::size_t value_column = column + eq + 1;
                if (!seen.insert(key).second) {
                    throw ParseError("duplicate key '" + key + "'", line_no, column);
                }
                if (key == "hidden") {
                    spec.hidden = sorted_unique(parse_id_list(value, line_no, value_column));
                } else if (key == "rhythm") {
                    spec.rhythmic_block = sorted_unique(parse_id_list(value, line_no, value_column));
                } else if (key == "micro") {
                    try {
                        spec.micro_schedule = parse_schedule(value);
                    } catch (const ParseError& e) {
                        throw e.at_line(line_no, value_column - 1);
                    }
                    if (spec.micro_schedule.periodic()) {
                        throw ParseError("micro is a single period; drop the '*'", line_no, value_column);
                    }
                } else if (key == "propagate") {
                    std::size_t value_lead = 0;
                    const std::string_view flag = trim_view(value, value_lead);
                    if (flag == "on" || flag == "true") {
                        spec.constant_propagation = true;
                    } else if (flag == "off" || flag == "false") {
                        spec.constant_propagation = false;
                    } else {
                        throw ParseError("propagate takes on or off", line_no, value_column + value_lead);
                    }
                } else {
                    throw ParseError("unknown key '" + key + "'", line_no, column);
                }
            }
            if (entry_end == line.size()) break;
            entry_start = entry_end + 1;
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return spec;
}

std::string to_string(const ObservationSpec& spec) {
    return "hidden=" + join_ids(spec.hidden) + "; rhythm=" + join_ids(spec.rhythmic_block) +
           "; micro=" + to_string(spec.micro_schedule) +
           "; propagate=" + (spec.constant_propagation ? "on" : "off");
}

std::map<AutomatonId, Expr> compose_along(const Network& net, const Schedule& period,
                                          const Limits& limits) {
    period.validate(net);
    std::map<AutomatonId, Expr> current;
    for (AutomatonId id : net.ids()) current.emplace(id, Expr::var(id));
    for (const auto& block : period.blocks()) {
        std::vector<std::pair<AutomatonId, Expr>> updates;
        for (AutomatonId id : block) {
            updates.emplace_back(id, simplify(substitute(net.function(id), current), limits));
        }
        for (auto& [id, e] : updates) current[id] = std::move(e);
    }
    return current;
}

ProjectedNetwork project(const Network& net, const ObservationSpec& spec, const Limits& limits) {
    spec.validate(net);
    const auto hidden = sorted_unique(spec.hidden);
    const auto rhythm = sorted_unique(spec.rhythmic_block);
    const auto composed = compose_along(net, spec.micro_schedule, limits);
    const std::string period = to_string(spec.micro_schedule);

    std::set<AutomatonId> fired;
    for (const auto& block : spec.micro_schedule.blocks()) fired.insert(block.begin(), block.end());

    ProjectedNetwork out;
    std::map<AutomatonId, Expr> functions;
    for (AutomatonId id : net.ids()) {
        if (contains(hidden, id)) continue;
        const bool rhythmic = contains(rhythm, id);
        const Expr& f = rhythmic ? composed.at(id) : net.function(id);
        for (AutomatonId v : essential_vars(f, limits)) {
            if (contains(hidden, v)) {
                throw HidingError("automaton " + std::to_string(id) + " still reads hidden x" +
                                  std::to_string(v) +
                                  (rhythmic ? " after composing along " + period
                                            : " and is outside the rhythmic block"));
            }
        }
        functions.emplace(id, f);
        if (rhythmic && fired.count(id)) {
            out.provenance[id].push_back("composed along " + period + " from " +
                                         to_string(net.function(id)));
            out.updated_set.push_back(id);
        } else if (rhythmic) {
            out.provenance[id].push_back("rhythmic but never updated; keeps its state");
        } else {
            out.provenance[id].push_back("outside the rhythm; keeps " + to_string(f));
        }
    }
    out.raw = Network(functions, net.names());

    if (spec.constant_propagation) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [id, f] : functions) {
                if (out.propagated_constants.count(id)) continue;
                const Expr s = simplify(f, limits);
                if (!s.is_constant()) continue;
                f = s;
                out.propagated_constants.emplace(id, s.value());
                const std::map<AutomatonId, Expr> binding{{id, s}};
                for (auto& [other, g] : functions) {
                    if (other == id || !contains(g.support(), id)) continue;
                    g = simplify(substitute(g, binding), limits);
                    out.provenance[other].push_back("x" + std::to_string(id) + "=" +
                                                    (s.value() ? "1" : "0") + " propagated, giving " +
                                                    to_string(g));
                }
                changed = true;
            }
        }
    }
    out.network = Network(std::move(functions), net.names());
    return out;
}

ProjectionReport verify_projection(const Network& net, const ObservationSpec& spec,
                                   const ProjectedNetwork& proj, const Limits& limits) {
    constexpr std::size_t kMaxExamples = 16;
    const detail::CompiledNetwork underlying(net, limits);
    const detail::CompiledNetwork observed(proj.network, limits);
    const auto rhythm = sorted_unique(spec.rhythmic_block);

    std::vector<std::uint64_t> period;
    for (const auto& block : spec.micro_schedule.blocks()) period.push_back(underlying.mask_of(block));

    const std::size_t visible = proj.network.size();
    std::vector<unsigned> source(visible);  // underlying position of each visible position
    std::vector<bool> outside_rhythm(visible);
    for (std::size_t k = 0; k < visible; ++k) {
        const AutomatonId id = proj.network.ids()[k];
        source[k] = static_cast<unsigned>(net.position(id));
        outside_rhythm[k] = !contains(rhythm, id);
    }
    const std::uint64_t updated = observed.mask_of(proj.updated_set);

    std::uint64_t constant_mask = 0;
    std::uint64_t constant_value = 0;
    for (const auto& [id, value] : proj.propagated_constants) {
        constant_mask |= std::uint64_t{1} << net.position(id);
        if (value) constant_value |= std::uint64_t{1} << net.position(id);
    }

    ProjectionReport report;
    report.states = underlying.state_count();
    for (std::uint64_t x = 0; x < underlying.state_count(); ++x) {
        std::uint64_t y = x;
        for (auto m : period) y = underlying.step(y, m);

        std::uint64_t xr = 0;
        std::uint64_t yr = 0;
        for (std::size_t k = 0; k < visible; ++k) {
            xr |= ((x >> source[k]) & 1U) << k;
            yr |= ((y >> source[k]) & 1U) << k;
        }
        const std::uint64_t predicted = observed.step(xr, updated);

        bool disagrees = false;
        for (std::size_t k = 0; k < visible; ++k) {
            bool bad = ((predicted ^ yr) >> k) & 1U;
            if (outside_rhythm[k]) {
                bad = bad || observed.evaluate(k, xr) != underlying.evaluate(source[k], x);
            }
            if (bad) {
                ++report.by_automaton[proj.network.ids()[k]];
                disagrees = true;
            }
        }
        const bool in_region = (x & constant_mask) == constant_value;
        if (in_region) ++report.invariant_region_states;
        if (disagrees) {
            ++report.full_space_disagreements;
            if (in_region) ++report.invariant_region_disagreements;
            if (report.examples.size() < kMaxExamples) {
                report.examples.push_back(detail::unpack(x, net.size()));
            }
        }
    }
    return report;
}

std::string format_projection(const ProjectedNetwork& proj, const ObservationSpec& spec) {
    std::string out = "# perspective: " + to_string(spec) + "\n";
    out += "# updated per observation: " + join_ids(proj.updated_set) + "\n";
    out += format_network(proj.network);
    out += "# provenance\n";
    for (const auto& [id, notes] : proj.provenance) {
        for (const auto& note : notes) out += "# " + std::to_string(id) + ": " + note + "\n";
    }
    return out;
}

}  // namespace ban
