#include "ban/truth_table.hpp"

#include <bit>
#include <stdexcept>

namespace ban {
namespace {

constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(unsigned num_vars) {
    return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

}  // namespace

TruthTable::TruthTable(unsigned num_vars, bool fill) : num_vars_(num_vars) {
    if (num_vars > kMaxVars) {
        throw std::invalid_argument("truth table too wide");
    }
    words_.assign(word_count(num_vars), fill ? ~std::uint64_t{0} : 0);
    clear_padding();
}

TruthTable TruthTable::variable(unsigned num_vars, unsigned var) {
    if (var >= num_vars) {
        throw std::out_of_range("truth table variable out of range");
    }
    TruthTable table(num_vars);
    for (std::size_t w = 0; w < table.words_.size(); ++w) {
        if (var < 6) {
            table.words_[w] = kVarPattern[var];
        } else {
            table.words_[w] = ((w >> (var - 6)) & 1U) ? ~std::uint64_t{0} : 0;
        }
    }
    table.clear_padding();
    return table;
}

void TruthTable::set(std::uint64_t row, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (row & 63);
    if (value) {
        words_[row >> 6] |= bit;
    } else {
        words_[row >> 6] &= ~bit;
    }
}

bool TruthTable::is_constant(bool value) const noexcept {
    return *this == TruthTable(num_vars_, value);
}

std::uint64_t TruthTable::count_ones() const noexcept {
    std::uint64_t total = 0;
    for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

bool TruthTable::depends_on(unsigned var) const noexcept {
    if (var >= num_vars_) return false;
    if (var < 6) {
        const unsigned shift = 1U << var;
        for (auto w : words_) {
            if ((w & ~kVarPattern[var]) != ((w & kVarPattern[var]) >> shift)) return true;
        }
        return false;
    }
    const std::size_t stride = std::size_t{1} << (var - 6);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((w & stride) == 0 && words_[w] != words_[w | stride]) return true;
    }
    return false;
}

TruthTable TruthTable::operator~() const {
    TruthTable out(*this);
    for (auto& w : out.words_) w = ~w;
    out.clear_padding();
    return out;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

void TruthTable::clear_padding() noexcept {
    if (num_vars_ < 6) {
        words_[0] &= (std::uint64_t{1} << (1U << num_vars_)) - 1;
    }
}

}  // namespace ban
