#include "compiled_network.hpp"

#include <string>

#include "ban/error.hpp"

namespace ban::detail {

void require_exhaustive(std::size_t n, const Limits& limits) {
    if (n > limits.max_exhaustive || n > 63) {
        throw LimitError("exhaustive analysis of " + std::to_string(n) +
                             " automata exceeds max-exhaustive=" +
                             std::to_string(limits.max_exhaustive) + "; raise --max-exhaustive",
                         "max-exhaustive", limits.max_exhaustive);
    }
}

CompiledNetwork::CompiledNetwork(const Network& net, const Limits& limits) : net_(&net) {
    require_exhaustive(net.size(), limits);
    locals_.reserve(net.size());
    for (AutomatonId id : net.ids()) {
        SupportTable st = support_table(net.function(id), limits);
        Local local;
        for (AutomatonId v : st.vars) local.inputs.push_back(static_cast<unsigned>(net.position(v)));
        local.table = std::move(st.table);
        locals_.push_back(std::move(local));
    }
}

std::uint64_t CompiledNetwork::unstable_mask(std::uint64_t state) const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < locals_.size(); ++k) {
        if (evaluate(k, state) != static_cast<bool>((state >> k) & 1U)) mask |= std::uint64_t{1} << k;
    }
    return mask;
}

std::uint64_t CompiledNetwork::step(std::uint64_t state, std::uint64_t mask) const {
    std::uint64_t next = state;
    for (std::size_t k = 0; k < locals_.size(); ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        if (!(mask & bit)) continue;
        if (evaluate(k, state)) {
            next |= bit;
        } else {
            next &= ~bit;
        }
    }
    return next;
}

std::uint64_t CompiledNetwork::mask_of(std::span<const AutomatonId> ids) const {
    std::uint64_t mask = 0;
    for (AutomatonId id : ids) mask |= std::uint64_t{1} << net_->position(id);
    return mask;
}

State unpack(std::uint64_t state, std::size_t size) { return State::from_index(size, state); }

}  // namespace ban::detail
