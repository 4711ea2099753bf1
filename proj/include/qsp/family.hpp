#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/layout.hpp"

namespace qsp {

// One black-box function: the value table over all x, plus the label the
// oracle's choice register uses for it.
struct OracleFunction {
    std::string k_label;
    std::vector<unsigned> table; // table[x] = value, x in increasing binary order

    unsigned operator()(std::size_t x) const { return table[x]; }
};

// Structural promise a built-in family carries; checked by validate_family,
// not serialized. Parsed families rely on per-member metadata instead.
enum class Promise { none, balanced_or_constant, kronecker_delta, permutation };

struct FunctionFamily {
    std::string name;
    int x_bits = 0;
    int v_bits = 0;
    int solution_bits = 0;
    std::vector<OracleFunction> members;
    std::vector<std::string> solutions; // sigma per member, aligned with members
    std::map<std::string, std::string> meta_h; // Simon period per k label
    std::map<std::string, std::string> meta_a; // hidden linear string per k label
    Promise promise = Promise::none;
    // Labeling the X readout correlates with; equals `solutions` except for
    // dj(2), where sigma is the balanced flag but distinct oracle pairs
    // correlate with distinct X outcomes.
    std::optional<std::vector<std::string>> correlation;

    std::size_t size() const { return members.size(); }
    std::size_t rows() const { return std::size_t{1} << x_bits; }
    unsigned f(std::size_t k_index, std::size_t x) const { return members[k_index].table[x]; }
    const std::string& solution(std::size_t k_index) const { return solutions[k_index]; }
    const std::string& correlation_label(std::size_t k_index) const {
        return correlation ? (*correlation)[k_index] : solutions[k_index];
    }
    std::size_t index_of(const std::string& k_label) const; // layout error if absent
    std::vector<std::string> k_labels() const;
    RegisterLayout layout() const;
};

// Built-in catalogs: deutsch, dj2, dj3, bv2..bv4, simon2, simon3,
// grover2..grover4, minute, perm. Unknown names raise usage errors,
// out-of-range parameters raise size errors.
FunctionFamily builtin(const std::string& name);
bool is_builtin_name(const std::string& name);

// Invariant violations as data; empty means valid.
std::vector<std::string> validate_family(const FunctionFamily& family);

} // namespace qsp
