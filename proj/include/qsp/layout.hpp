#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/bits.hpp"
#include "qsp/error.hpp"

namespace qsp {

// One named tensor factor. `labels` name the basis states (bit strings for
// X/V, the family's k labels for K).
struct Register {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> labels;
};

// Ordered register list; the amplitude index runs over registers left to
// right with the last register fastest. The canonical order is K, X, V.
class RegisterLayout {
public:
    RegisterLayout() = default;
    RegisterLayout(std::vector<Register> regs, int x_bits, int v_bits);

    // K of the given size, X of 2^x_bits, V of 2^v_bits
    static RegisterLayout kxv(std::vector<std::string> k_labels, int x_bits, int v_bits);

    std::size_t dim() const { return dim_; }
    std::size_t count() const { return regs_.size(); }
    int x_bits() const { return x_bits_; }
    int v_bits() const { return v_bits_; }

    const Register& reg(std::size_t i) const { return regs_[i]; }
    std::size_t stride(std::size_t i) const { return strides_[i]; }

    bool has(std::string_view name) const;
    std::size_t index_of(std::string_view name) const; // layout error if absent

    std::size_t digit(std::size_t amp_index, std::size_t reg_index) const {
        return (amp_index / strides_[reg_index]) % regs_[reg_index].dim;
    }

    std::size_t compose(const std::vector<std::size_t>& digits) const;
    std::vector<std::size_t> decompose(std::size_t amp_index) const;

    // K/X/V shorthand for the canonical layout
    std::size_t kxv_index(std::size_t k, std::size_t x, std::size_t v) const;

    bool same_shape(const RegisterLayout& other) const;

private:
    std::vector<Register> regs_;
    std::vector<std::size_t> strides_;
    std::size_t dim_ = 0;
    int x_bits_ = 0;
    int v_bits_ = 0;
};

inline std::vector<std::string> binary_labels(std::size_t dim, int bits) {
    std::vector<std::string> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(bits > 0 ? to_bits(i, bits) : std::string("-"));
    return out;
}

} // namespace qsp
