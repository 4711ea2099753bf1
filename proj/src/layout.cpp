#include "qsp/layout.hpp"

namespace qsp {

RegisterLayout::RegisterLayout(std::vector<Register> regs, int x_bits, int v_bits)
    : regs_(std::move(regs)), x_bits_(x_bits), v_bits_(v_bits) {
    if (regs_.empty()) throw Error(Errc::layout, "layout needs at least one register");
    dim_ = 1;
    for (auto& r : regs_) {
        if (r.dim < 1) throw Error(Errc::layout, "register '" + r.name + "' has dimension 0");
        if (r.labels.empty()) {
            int bits = 0;
            while ((std::size_t{1} << bits) < r.dim) ++bits;
            if ((std::size_t{1} << bits) == r.dim)
                r.labels = binary_labels(r.dim, bits);
            else
                for (std::size_t i = 0; i < r.dim; ++i) r.labels.push_back(std::to_string(i));
        }
        if (r.labels.size() != r.dim)
            throw Error(Errc::layout, "register '" + r.name + "' labels do not match its dimension");
        dim_ *= r.dim;
    }
    strides_.assign(regs_.size(), 1);
    for (std::size_t i = regs_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * regs_[i].dim;
}

RegisterLayout RegisterLayout::kxv(std::vector<std::string> k_labels, int x_bits, int v_bits) {
    std::vector<Register> regs;
    regs.push_back({"K", k_labels.size(), std::move(k_labels)});
    regs.push_back({"X", std::size_t{1} << x_bits, binary_labels(std::size_t{1} << x_bits, x_bits)});
    regs.push_back({"V", std::size_t{1} << v_bits, binary_labels(std::size_t{1} << v_bits, v_bits)});
    return RegisterLayout(std::move(regs), x_bits, v_bits);
}

bool RegisterLayout::has(std::string_view name) const {
    for (auto& r : regs_)
        if (r.name == name) return true;
    return false;
}

std::size_t RegisterLayout::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name == name) return i;
    throw Error(Errc::layout, "no register named '" + std::string(name) + "'");
}

std::size_t RegisterLayout::compose(const std::vector<std::size_t>& digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < regs_.size(); ++i) idx += digits[i] * strides_[i];
    return idx;
}

std::vector<std::size_t> RegisterLayout::decompose(std::size_t amp_index) const {
    std::vector<std::size_t> digits(regs_.size());
    for (std::size_t i = 0; i < regs_.size(); ++i) digits[i] = digit(amp_index, i);
    return digits;
}

std::size_t RegisterLayout::kxv_index(std::size_t k, std::size_t x, std::size_t v) const {
    return k * strides_[index_of("K")] + x * strides_[index_of("X")] + v * strides_[index_of("V")];
}

bool RegisterLayout::same_shape(const RegisterLayout& other) const {
    if (regs_.size() != other.regs_.size()) return false;
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name != other.regs_[i].name || regs_[i].dim != other.regs_[i].dim) return false;
    return true;
}

} // namespace qsp
