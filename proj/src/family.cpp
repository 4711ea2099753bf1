#include "qsp/family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "qsp/bits.hpp"

namespace qsp {

std::size_t FunctionFamily::index_of(const std::string& k_label) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].k_label == k_label) return i;
    throw Error(Errc::layout, "family '" + name + "' has no member '" + k_label + "'");
}

std::vector<std::string> FunctionFamily::k_labels() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (auto& m : members) out.push_back(m.k_label);
    return out;
}

RegisterLayout FunctionFamily::layout() const { return RegisterLayout::kxv(k_labels(), x_bits, v_bits); }

namespace {

void sort_members(FunctionFamily& fam) {
    std::vector<std::size_t> order(fam.members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fam.members[a].k_label < fam.members[b].k_label;
    });
    std::vector<OracleFunction> members;
    std::vector<std::string> solutions;
    for (auto i : order) {
        members.push_back(std::move(fam.members[i]));
        solutions.push_back(std::move(fam.solutions[i]));
    }
    fam.members = std::move(members);
    fam.solutions = std::move(solutions);
}

std::string table_label(const std::vector<unsigned>& table, int v_bits) {
    std::string label;
    for (unsigned v : table) label += to_bits(v, v_bits);
    return label;
}

FunctionFamily make_deutsch() {
    FunctionFamily fam;
    fam.name = "deutsch";
    fam.x_bits = 1;
    fam.v_bits = 1;
    fam.solution_bits = 1;
    for (unsigned t = 0; t < 4; ++t) {
        std::vector<unsigned> table{(t >> 1) & 1u, t & 1u};
        const bool balanced = table[0] != table[1];
        fam.members.push_back({table_label(table, 1), table});
        fam.solutions.push_back(balanced ? "1" : "0");
    }
    sort_members(fam);
    fam.promise = Promise::balanced_or_constant;
    return fam;
}

FunctionFamily make_dj(int n) {
    if (n < 2 || n > 3) throw Error(Errc::size, "dj is catalogued for n in {2, 3}");
    FunctionFamily fam;
    fam.name = "dj" + std::to_string(n);
    fam.x_bits = n;
    fam.v_bits = 1;
    fam.solution_bits = 1;
    const std::size_t rows = std::size_t{1} << n;
    for (std::size_t t = 0; t < (std::size_t{1} << rows); ++t) {
        const int ones = std::popcount(t);
        const bool constant = ones == 0 || ones == static_cast<int>(rows);
        const bool balanced = ones == static_cast<int>(rows / 2);
        if (!constant && !balanced) continue;
        std::vector<unsigned> table(rows);
        for (std::size_t x = 0; x < rows; ++x) table[x] = (t >> (rows - 1 - x)) & 1u;
        fam.members.push_back({table_label(table, 1), table});
        fam.solutions.push_back(balanced ? "1" : "0");
    }
    sort_members(fam);
    fam.promise = Promise::balanced_or_constant;
    if (n == 2) {
        // distinct oracle pairs land on distinct X outcomes: 00 for the
        // constants, the linear part of the table for the balanced ones
        std::vector<std::string> corr;
        for (auto& m : fam.members) {
            const auto& t = m.table;
            if (t[0] == t[1] && t[1] == t[2] && t[2] == t[3]) {
                corr.push_back("00");
            } else {
                const unsigned a0 = t[0] ^ t[2], a1 = t[0] ^ t[1];
                corr.push_back(std::string() + char('0' + a0) + char('0' + a1));
            }
        }
        fam.correlation = std::move(corr);
    }
    return fam;
}

FunctionFamily make_bv(int n) {
    if (n < 2 || n > 4) throw Error(Errc::size, "bv is catalogued for n in {2, 3, 4}");
    FunctionFamily fam;
    fam.name = "bv" + std::to_string(n);
    fam.x_bits = n;
    fam.v_bits = 1;
    fam.solution_bits = n;
    const std::size_t rows = std::size_t{1} << n;
    for (std::size_t a = 0; a < rows; ++a) {
        std::vector<unsigned> table(rows);
        for (std::size_t x = 0; x < rows; ++x) table[x] = std::popcount(a & x) & 1u;
        const std::string label = table_label(table, 1);
        fam.members.push_back({label, table});
        fam.solutions.push_back(to_bits(a, n));
        fam.meta_a[label] = to_bits(a, n);
    }
    sort_members(fam);
    // member order changed; realign solutions with meta_a
    for (std::size_t i = 0; i < fam.members.size(); ++i) fam.solutions[i] = fam.meta_a[fam.members[i].k_label];
    return fam;
}

FunctionFamily make_simon(int n) {
    if (n < 2 || n > 3) throw Error(Errc::size, "simon is catalogued for n in {2, 3}");
    FunctionFamily fam;
    fam.name = "simon" + std::to_string(n);
    fam.x_bits = n;
    fam.v_bits = n - 1;
    fam.solution_bits = n;
    const std::size_t rows = std::size_t{1} << n;
    const std::size_t n_values = std::size_t{1} << (n - 1);
    for (std::size_t h = 1; h < rows; ++h) {
        // pair classes {x, x ^ h}, listed by their smaller element
        std::vector<std::size_t> class_rep;
        for (std::size_t x = 0; x < rows; ++x)
            if (x < (x ^ h)) class_rep.push_back(x);
        std::vector<unsigned> value(n_values);
        for (std::size_t i = 0; i < n_values; ++i) value[i] = static_cast<unsigned>(i);
        std::sort(value.begin(), value.end());
        do {
            std::vector<unsigned> table(rows);
            for (std::size_t i = 0; i < class_rep.size(); ++i) {
                table[class_rep[i]] = value[i];
                table[class_rep[i] ^ h] = value[i];
            }
            const std::string label = table_label(table, n - 1);
            fam.members.push_back({label, table});
            fam.solutions.push_back(to_bits(h, n));
            fam.meta_h[label] = to_bits(h, n);
        } while (std::next_permutation(value.begin(), value.end()));
    }
    sort_members(fam);
    for (std::size_t i = 0; i < fam.members.size(); ++i) fam.solutions[i] = fam.meta_h[fam.members[i].k_label];
    return fam;
}

FunctionFamily make_grover(int n) {
    if (n < 2 || n > 4) throw Error(Errc::size, "grover is catalogued for n in {2, 3, 4}");
    FunctionFamily fam;
    fam.name = "grover" + std::to_string(n);
    fam.x_bits = n;
    fam.v_bits = 1;
    fam.solution_bits = n;
    const std::size_t rows = std::size_t{1} << n;
    for (std::size_t k = 0; k < rows; ++k) {
        std::vector<unsigned> table(rows, 0u);
        table[k] = 1u;
        fam.members.push_back({to_bits(k, n), table});
        fam.solutions.push_back(to_bits(k, n));
    }
    fam.promise = Promise::kronecker_delta;
    return fam; // already in label order
}

FunctionFamily make_minute() {
    FunctionFamily fam;
    fam.name = "minute";
    fam.x_bits = 1;
    fam.v_bits = 2;
    fam.solution_bits = 1;
    // codomain {00, 01, 10}; value 11 never occurs
    for (unsigned v0 = 0; v0 < 3; ++v0)
        for (unsigned v1 = 0; v1 < 3; ++v1) {
            std::vector<unsigned> table{v0, v1};
            const unsigned parity = (std::popcount(v0) + std::popcount(v1)) & 1u;
            fam.members.push_back({table_label(table, 2), table});
            fam.solutions.push_back(std::string(1, char('0' + parity)));
        }
    sort_members(fam);
    return fam;
}

FunctionFamily make_perm() {
    FunctionFamily fam;
    fam.name = "perm";
    fam.x_bits = 2;
    fam.v_bits = 2;
    fam.solution_bits = 2;
    // Partition labels frozen from derive_partitions: the X outcome that
    // carries each member after one evaluation and Hadamard on X.
    static const std::map<std::string, std::string> frozen = {
        {"00011011", "11"}, {"00011110", "01"}, {"00100111", "11"}, {"00101101", "01"},
        {"00110110", "10"}, {"00111001", "10"}, {"01001011", "01"}, {"01001110", "11"},
        {"01100011", "10"}, {"01101100", "10"}, {"01110010", "11"}, {"01111000", "01"},
        {"10000111", "01"}, {"10001101", "11"}, {"10010011", "10"}, {"10011100", "10"},
        {"10110001", "11"}, {"10110100", "01"}, {"11000110", "10"}, {"11001001", "10"},
        {"11010010", "01"}, {"11011000", "11"}, {"11100001", "01"}, {"11100100", "11"},
    };
    std::vector<unsigned> value{0, 1, 2, 3};
    do {
        std::vector<unsigned> table(value.begin(), value.end());
        const std::string label = table_label(table, 2);
        fam.members.push_back({label, table});
        fam.solutions.push_back(frozen.at(label));
    } while (std::next_permutation(value.begin(), value.end()));
    sort_members(fam);
    fam.promise = Promise::permutation;
    return fam;
}

} // namespace

bool is_builtin_name(const std::string& name) {
    static const std::set<std::string> names = {"deutsch", "dj2",     "dj3",     "bv2",  "bv3",
                                                "bv4",     "simon2",  "simon3",  "grover2",
                                                "grover3", "grover4", "minute",  "perm"};
    return names.count(name) > 0;
}

FunctionFamily builtin(const std::string& name) {
    if (name == "deutsch") return make_deutsch();
    if (name == "minute") return make_minute();
    if (name == "perm") return make_perm();
    const auto split = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        const std::string digits = name.substr(prefix.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        return std::stoi(digits);
    };
    if (auto n = split("dj")) return make_dj(*n);
    if (auto n = split("bv")) return make_bv(*n);
    if (auto n = split("simon")) return make_simon(*n);
    if (auto n = split("grover")) return make_grover(*n);
    throw Error(Errc::usage, "unknown family '" + name + "'");
}

std::vector<std::string> validate_family(const FunctionFamily& fam) {
    std::vector<std::string> out;
    const std::size_t rows = fam.rows();
    const std::size_t v_max = std::size_t{1} << fam.v_bits;

    if (fam.members.empty()) out.push_back("family has no members");
    if (fam.members.size() != fam.solutions.size()) out.push_back("solutions do not align with members");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        if (!seen.insert(m.k_label).second) out.push_back("duplicate member '" + m.k_label + "'");
        if (m.table.size() != rows) out.push_back("member '" + m.k_label + "' table is not total");
        for (unsigned v : m.table)
            if (v >= v_max) out.push_back("member '" + m.k_label + "' has a value wider than v_bits");
        if (i < fam.solutions.size() &&
            fam.solutions[i].size() != static_cast<std::size_t>(fam.solution_bits))
            out.push_back("member '" + m.k_label + "' solution has the wrong width");
    }

    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        if (m.table.size() != rows) continue;

        if (auto it = fam.meta_h.find(m.k_label); it != fam.meta_h.end()) {
            const std::string& h_bits = it->second;
            if (!is_bit_string(h_bits) || h_bits.size() != static_cast<std::size_t>(fam.x_bits)) {
                out.push_back("member '" + m.k_label + "' has a malformed period");
            } else if (parse_bits(h_bits) == 0) {
                out.push_back("member '" + m.k_label + "': all zeroes period");
            } else {
                const std::size_t h = parse_bits(h_bits);
                for (std::size_t x = 0; x < rows; ++x)
                    for (std::size_t y = x + 1; y < rows; ++y) {
                        const bool same = m.table[x] == m.table[y];
                        const bool paired = (x ^ y) == h;
                        if (same != paired) {
                            out.push_back("member '" + m.k_label + "' is not two-to-one with period " + h_bits);
                            x = rows;
                            break;
                        }
                    }
            }
        }
        if (auto it = fam.meta_a.find(m.k_label); it != fam.meta_a.end()) {
            const std::size_t a = parse_bits(it->second);
            for (std::size_t x = 0; x < rows; ++x)
                if (m.table[x] != (static_cast<unsigned>(std::popcount(a & x)) & 1u)) {
                    out.push_back("member '" + m.k_label + "' is not the linear function of a=" + it->second);
                    break;
                }
        }
        if (fam.promise == Promise::balanced_or_constant) {
            std::size_t ones = 0;
            for (unsigned v : m.table) ones += v;
            if (ones != 0 && ones != rows && ones != rows / 2)
                out.push_back("member '" + m.k_label + "' is neither constant nor balanced");
        }
        if (fam.promise == Promise::kronecker_delta) {
            const std::size_t k = parse_bits(m.k_label);
            for (std::size_t x = 0; x < rows; ++x)
                if (m.table[x] != (x == k ? 1u : 0u)) {
                    out.push_back("member '" + m.k_label + "' is not the Kronecker delta at its label");
                    break;
                }
        }
        if (fam.promise == Promise::permutation) {
            std::set<unsigned> values(m.table.begin(), m.table.end());
            if (values.size() != rows)
                out.push_back("member '" + m.k_label + "' is not a permutation of the arguments");
        }
    }
    return out;
}

} // namespace qsp
