#pragma once

// Table-driven evaluation over packed states, used by the exhaustive sweeps.
// A packed state holds position k (ascending id order) in bit k.

#include <cstdint>
#include <span>
#include <vector>

#include "ban/network.hpp"

namespace ban::detail {

/// Throws LimitError when 2^n states may not be enumerated.
void require_exhaustive(std::size_t n, const Limits& limits);

class CompiledNetwork {
public:
    CompiledNetwork(const Network& net, const Limits& limits);

    std::size_t size() const noexcept { return locals_.size(); }
    std::uint64_t state_count() const noexcept { return std::uint64_t{1} << locals_.size(); }

    bool evaluate(std::size_t position, std::uint64_t state) const {
        const Local& local = locals_[position];
        std::uint64_t row = 0;
        for (std::size_t i = 0; i < local.inputs.size(); ++i) {
            row |= ((state >> local.inputs[i]) & 1U) << i;
        }
        return local.table.get(row);
    }

    /// Bit k set iff position k is unstable.
    std::uint64_t unstable_mask(std::uint64_t state) const;
    /// Updates the positions in `mask` simultaneously.
    std::uint64_t step(std::uint64_t state, std::uint64_t mask) const;
    std::uint64_t mask_of(std::span<const AutomatonId> ids) const;

private:
    struct Local {
        std::vector<unsigned> inputs;
        TruthTable table;
    };

    const Network* net_;
    std::vector<Local> locals_;
};

State unpack(std::uint64_t state, std::size_t size);

}  // namespace ban::detail
