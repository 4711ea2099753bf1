#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/family.hpp"

namespace qsp {

enum class HalfMode { bit_half, row_half };

const char* half_mode_name(HalfMode m);

// Revealed half of the oracle's choice: bit indices of k (bit mode) or table
// row indices (row mode), together with the revealed values.
struct AdvancedInfo {
    HalfMode mode = HalfMode::row_half;
    std::vector<std::size_t> positions;
    std::vector<unsigned> values; // aligned with positions

    bool consistent_with(const FunctionFamily& family, std::size_t k_index) const;
    std::string describe(const FunctionFamily& family) const;
    bool operator<(const AdvancedInfo& o) const;
    bool operator==(const AdvancedInfo& o) const;
};

// Adaptive query tree: interior nodes name the x to evaluate, edges carry the
// observed value, leaves carry the solution label.
struct QueryTree {
    struct Node {
        int query = -1;               // -1 at leaves
        std::string label;            // leaf label
        std::map<unsigned, int> next; // value -> node index
    };
    std::vector<Node> nodes;
    int root = -1;

    // walks the tree for one member; returns (label, queries used)
    std::pair<std::string, int> replay(const FunctionFamily& family, std::size_t k_index) const;
};

struct DecisionTreeResult {
    int depth = 0;
    QueryTree tree;
};

// Exact worst-case adaptive complexity by exhaustive minimax over consistent
// member sets. Bails out with a capacity error above 2^x_bits = 16 rows or
// |family| members beyond the capacity bound (64 by default; the
// QSPEEDUP_MAX_FAMILY environment variable raises it up to 128).
DecisionTreeResult classical_query_complexity(const FunctionFamily& family);

struct HalfReport {
    AdvancedInfo half;
    std::vector<std::size_t> consistent; // member indices
    bool excluded = false;               // half already determines sigma
    int depth = 0;                       // minimax depth when not excluded
};

struct AdvancedResult {
    int depth = 0; // max over non-excluded halves
    std::vector<AdvancedInfo> excluded;
    std::vector<HalfReport> per_half;
};

AdvancedResult advanced_query_complexity(const FunctionFamily& family, HalfMode mode);

struct RuleVerdict {
    std::string family;
    std::string problem;
    HalfMode mode = HalfMode::row_half;
    int classical_depth = 0;
    int advanced_depth = 0;
    int quantum_queries = 0;
    std::size_t excluded_count = 0;
    bool pass = false;
    // query counts the construction is documented with, when any;
    // reports flag rows where the exhaustive search disagrees
    std::optional<int> stated_classical;
    std::optional<int> stated_advanced;

    bool stated_mismatch() const {
        return (stated_classical && *stated_classical != classical_depth) ||
               (stated_advanced && *stated_advanced != advanced_depth);
    }
};

RuleVerdict check_fifty_percent_rule(const FunctionFamily& family, int quantum_queries, HalfMode mode);

// conventions used by the CLI and reports
HalfMode canonical_mode(const FunctionFamily& family);
std::string problem_name(const FunctionFamily& family);
void attach_stated_figures(RuleVerdict& v);

std::size_t family_capacity();

} // namespace qsp
