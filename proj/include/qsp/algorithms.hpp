#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsp/family.hpp"
#include "qsp/readout.hpp"
#include "qsp/state.hpp"

namespace qsp {

enum class ReadoutChoice { standard, synthesized };

struct RunReport {
    std::string family;
    std::vector<std::string> steps;
    std::vector<StateVector> stages; // Psi0, Psi1, Psi2 (and per-iteration states for grover)
    ReadoutUnitary readout;
    int quantum_queries = 0;          // apply_oracle calls only
    std::optional<bool> correlated;   // verify_correlation verdict when applicable
    std::vector<double> iteration_probs; // grover: P(X = k | K = k) at t = 0, 1, ...
    std::uint64_t seed = 0;
};

// standard V preparation of a family's construction (all zeroes for the
// period problems, antisymmetric per qubit otherwise)
VPreparation canonical_vprep(const FunctionFamily& family);

// prepare -> evaluate -> rotate X; one oracle call
RunReport run_extended(const FunctionFamily& family, const VPreparation& vprep, ReadoutChoice choice);

// the single-query period variant: antisymmetric V, swap readout
RunReport run_simon_optimal(int n);

int grover_auto_iterations(int n);

// repeated (evaluate, rotate) rounds on the extended state for 2 <= n <= 4
RunReport grover_iterate(int n, std::optional<int> iterations);

struct SimonSample {
    std::string s;
};

struct SimonLoopResult {
    std::string k_label;
    std::string h;                   // recovered period
    std::string expected_h;          // from the collapsed member's metadata
    std::vector<SimonSample> samples; // the n-1 independent nonzero samples, in order found
    std::vector<std::string> all_outcomes; // every measured X string, queries in order
    int queries = 0;
    std::uint64_t seed = 0;
};

SimonLoopResult simon_sample_loop(int n, std::uint64_t seed);

// unique nonzero h with s . h = 0 for all samples; rank error on dependence
std::string solve_mod2(const std::vector<std::string>& samples, int n);

struct Partition {
    // X outcome string -> member k labels, three blocks of eight for perm
    std::map<std::string, std::vector<std::string>> blocks;
};

Partition derive_partitions(const FunctionFamily& family);

// collapse-then-run equals run-then-collapse on every K outcome
bool backdating_check(const FunctionFamily& family);

RunReport run_minute();

// default quantum query count fed to the rule table
int canonical_quantum_queries(const FunctionFamily& family);

} // namespace qsp
