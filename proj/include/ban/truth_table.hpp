#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ban {

/// Packed truth table of a function of `num_vars` inputs. Row r assigns
/// input j the value of bit j of r.
class TruthTable {
public:
    static constexpr unsigned kMaxVars = 30;

    TruthTable() : TruthTable(0) {}
    explicit TruthTable(unsigned num_vars, bool fill = false);

    /// Projection onto input `var`.
    static TruthTable variable(unsigned num_vars, unsigned var);

    unsigned num_vars() const noexcept { return num_vars_; }
    std::uint64_t rows() const noexcept { return std::uint64_t{1} << num_vars_; }

    bool get(std::uint64_t row) const noexcept {
        return (words_[row >> 6] >> (row & 63)) & 1U;
    }
    void set(std::uint64_t row, bool value) noexcept;

    bool is_constant(bool value) const noexcept;
    std::uint64_t count_ones() const noexcept;

    /// True iff flipping input `var` changes the output for some row.
    bool depends_on(unsigned var) const noexcept;

    TruthTable operator~() const;
    TruthTable& operator&=(const TruthTable& other);
    TruthTable& operator|=(const TruthTable& other);
    TruthTable& operator^=(const TruthTable& other);

    friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
    friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
    friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    void clear_padding() noexcept;

    unsigned num_vars_;
    std::vector<std::uint64_t> words_;
};

}  // namespace ban
