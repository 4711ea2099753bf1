#include "qsp/query.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "qsp/bits.hpp"

namespace qsp {

const char* half_mode_name(HalfMode m) { return m == HalfMode::bit_half ? "bit" : "row"; }

bool AdvancedInfo::consistent_with(const FunctionFamily& family, std::size_t k_index) const {
    const auto& member = family.members[k_index];
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (mode == HalfMode::row_half) {
            if (member.table[positions[i]] != values[i]) return false;
        } else {
            const unsigned bit = static_cast<unsigned>(member.k_label[positions[i]] - '0');
            if (bit != values[i]) return false;
        }
    }
    return true;
}

std::string AdvancedInfo::describe(const FunctionFamily& family) const {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out += ",";
        if (mode == HalfMode::row_half)
            out += "f(" + to_bits(positions[i], family.x_bits) + ")=" + to_bits(values[i], family.v_bits);
        else
            out += "k" + std::to_string(positions[i]) + "=" + std::to_string(values[i]);
    }
    return out;
}

bool AdvancedInfo::operator<(const AdvancedInfo& o) const {
    if (mode != o.mode) return mode < o.mode;
    if (positions != o.positions) return positions < o.positions;
    return values < o.values;
}

bool AdvancedInfo::operator==(const AdvancedInfo& o) const {
    return mode == o.mode && positions == o.positions && values == o.values;
}

std::pair<std::string, int> QueryTree::replay(const FunctionFamily& family, std::size_t k_index) const {
    int at = root;
    int queries = 0;
    while (nodes[static_cast<std::size_t>(at)].query >= 0) {
        const auto& node = nodes[static_cast<std::size_t>(at)];
        const unsigned v = family.f(k_index, static_cast<std::size_t>(node.query));
        const auto it = node.next.find(v);
        if (it == node.next.end()) return {"", -1};
        at = it->second;
        ++queries;
    }
    return {nodes[static_cast<std::size_t>(at)].label, queries};
}

std::size_t family_capacity() {
    std::size_t cap = 64;
    if (const char* env = std::getenv("QSPEEDUP_MAX_FAMILY")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) cap = static_cast<std::size_t>(v);
    }
    return std::min<std::size_t>(cap, 128);
}

namespace {

// consistent-member set, up to 128 members
struct MemberSet {
    std::array<std::uint64_t, 2> w{0, 0};

    void add(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool has(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
    bool operator==(const MemberSet& o) const { return w == o.w; }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
};

struct MemberSetHash {
    std::size_t operator()(const MemberSet& s) const {
        return std::hash<std::uint64_t>()(s.w[0] * 0x9e3779b97f4a7c15ull ^ s.w[1]);
    }
};

class MinimaxSearch {
public:
    explicit MinimaxSearch(const FunctionFamily& family) : fam_(family) {
        const std::size_t cap = family_capacity();
        if (family.rows() > 16)
            throw Error(Errc::capacity, "family '" + family.name + "' has more than 16 table rows");
        if (family.size() > cap)
            throw Error(Errc::capacity, "family '" + family.name + "' exceeds the capacity bound of " +
                                            std::to_string(cap) + " members (set QSPEEDUP_MAX_FAMILY)");
    }

    MemberSet all() const {
        MemberSet s;
        for (std::size_t i = 0; i < fam_.size(); ++i) s.add(i);
        return s;
    }

    bool solved(const MemberSet& s) const {
        const std::string* label = nullptr;
        for (std::size_t i = 0; i < fam_.size(); ++i)
            if (s.has(i)) {
                if (!label)
                    label = &fam_.solution(i);
                else if (*label != fam_.solution(i))
                    return false;
            }
        return true;
    }

    int depth(const MemberSet& s) {
        if (solved(s)) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;

        int best = std::numeric_limits<int>::max();
        int best_query = -1;
        for (std::size_t x = 0; x < fam_.rows(); ++x) {
            std::map<unsigned, MemberSet> classes;
            for (std::size_t i = 0; i < fam_.size(); ++i)
                if (s.has(i)) classes[fam_.f(i, x)].add(i);
            if (classes.size() < 2) continue; // uninformative query
            int worst = 0;
            for (auto& [value, sub] : classes) {
                worst = std::max(worst, depth(sub));
                if (1 + worst >= best) break;
            }
            if (1 + worst < best) {
                best = 1 + worst;
                best_query = static_cast<int>(x);
            }
        }
        if (best == std::numeric_limits<int>::max())
            throw Error(Errc::model_mismatch,
                        "members of '" + fam_.name + "' differ in solution but not in any table value");
        memo_[s] = best;
        choice_[s] = best_query;
        return best;
    }

    int build_tree(const MemberSet& s, QueryTree& tree) {
        if (solved(s)) {
            for (std::size_t i = 0; i < fam_.size(); ++i)
                if (s.has(i)) {
                    tree.nodes.push_back({-1, fam_.solution(i), {}});
                    return static_cast<int>(tree.nodes.size()) - 1;
                }
            throw Error(Errc::model_mismatch, "empty consistent set in tree construction");
        }
        depth(s);
        const int x = choice_.at(s);
        std::map<unsigned, MemberSet> classes;
        for (std::size_t i = 0; i < fam_.size(); ++i)
            if (s.has(i)) classes[fam_.f(i, static_cast<std::size_t>(x))].add(i);
        QueryTree::Node node;
        node.query = x;
        for (auto& [value, sub] : classes) node.next[value] = build_tree(sub, tree);
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

private:
    const FunctionFamily& fam_;
    std::unordered_map<MemberSet, int, MemberSetHash> memo_;
    std::unordered_map<MemberSet, int, MemberSetHash> choice_;
};

} // namespace

DecisionTreeResult classical_query_complexity(const FunctionFamily& family) {
    MinimaxSearch search(family);
    DecisionTreeResult result;
    result.depth = search.depth(search.all());
    result.tree.root = search.build_tree(search.all(), result.tree);
    return result;
}

namespace {

void position_sets(std::size_t universe, std::size_t take, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> current;
    const auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (current.size() == take) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < universe; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

} // namespace

AdvancedResult advanced_query_complexity(const FunctionFamily& family, HalfMode mode) {
    MinimaxSearch search(family);

    std::size_t universe, take;
    if (mode == HalfMode::bit_half) {
        universe = family.members.front().k_label.size();
        take = (universe + 1) / 2; // ceiling for odd-length k
    } else {
        universe = family.rows();
        take = (universe + 1) / 2;
    }
    std::vector<std::vector<std::size_t>> sets;
    position_sets(universe, take, sets);

    // realizable halves: each member induces one value tuple per position set
    std::map<AdvancedInfo, std::vector<std::size_t>> halves;
    for (const auto& positions : sets)
        for (std::size_t i = 0; i < family.size(); ++i) {
            AdvancedInfo h;
            h.mode = mode;
            h.positions = positions;
            for (auto p : positions)
                h.values.push_back(mode == HalfMode::row_half
                                       ? family.f(i, p)
                                       : static_cast<unsigned>(family.members[i].k_label[p] - '0'));
            halves[h].push_back(i);
        }

    AdvancedResult result;
    result.depth = 0;
    bool any_active = false;
    for (auto& [half, consistent] : halves) {
        HalfReport report;
        report.half = half;
        report.consistent = consistent;
        const std::string& first = family.solution(consistent.front());
        report.excluded = std::all_of(consistent.begin(), consistent.end(),
                                      [&](std::size_t i) { return family.solution(i) == first; });
        if (report.excluded) {
            result.excluded.push_back(half);
        } else {
            MemberSet s;
            for (auto i : consistent) s.add(i);
            report.depth = search.depth(s);
            result.depth = std::max(result.depth, report.depth);
            any_active = true;
        }
        result.per_half.push_back(std::move(report));
    }
    if (!any_active)
        throw Error(Errc::degenerate_problem, "every half of '" + family.name + "' already determines the solution");
    return result;
}

RuleVerdict check_fifty_percent_rule(const FunctionFamily& family, int quantum_queries, HalfMode mode) {
    RuleVerdict v;
    v.family = family.name;
    v.problem = problem_name(family);
    v.mode = mode;
    v.classical_depth = classical_query_complexity(family).depth;
    const auto adv = advanced_query_complexity(family, mode);
    v.advanced_depth = adv.depth;
    v.excluded_count = adv.excluded.size();
    v.quantum_queries = quantum_queries;
    v.pass = quantum_queries == adv.depth;
    attach_stated_figures(v);
    return v;
}

HalfMode canonical_mode(const FunctionFamily& family) {
    // location-encoded k gets bit halves, table-encoded k gets row halves
    return family.promise == Promise::kronecker_delta ? HalfMode::bit_half : HalfMode::row_half;
}

std::string problem_name(const FunctionFamily& family) {
    const std::string& n = family.name;
    if (n == "deutsch" || n.rfind("dj", 0) == 0) return "balanced-vs-constant";
    if (n.rfind("bv", 0) == 0) return "hidden-string";
    if (n.rfind("simon", 0) == 0) return "period";
    if (n.rfind("grover", 0) == 0) return "locate";
    if (n == "minute") return "parity";
    if (n == "perm") return "partition";
    return "identify";
}

void attach_stated_figures(RuleVerdict& v) {
    if (v.family == "deutsch") {
        v.stated_classical = 2;
        v.stated_advanced = 1;
    } else if (v.family == "dj2" || v.family == "bv2" || v.family == "simon2" || v.family == "grover2") {
        v.stated_advanced = 1;
    } else if (v.family == "perm") {
        v.stated_classical = 3;
        v.stated_advanced = 1;
    }
}

} // namespace qsp
