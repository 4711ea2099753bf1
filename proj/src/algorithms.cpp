#include "qsp/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qsp/bits.hpp"
#include "qsp/query.hpp"

namespace qsp {

VPreparation canonical_vprep(const FunctionFamily& family) {
    // the period problems evaluate into an all-zeroes V; everything else
    // evaluates into antisymmetric qubits
    if (family.name.rfind("simon", 0) == 0) return VPreparation::all_zeros();
    return VPreparation::antisymmetric();
}

RunReport run_extended(const FunctionFamily& family, const VPreparation& vprep, ReadoutChoice choice) {
    RunReport report;
    report.family = family.name;
    const auto layout = family.layout();

    report.steps.push_back("prepare K uniform, X uniform, V per preparation");
    report.stages.push_back(prepare_extended(layout, vprep));

    report.steps.push_back("evaluate f(k, x) into V");
    report.stages.push_back(apply_oracle(report.stages.back(), family));
    report.quantum_queries = 1;

    if (choice == ReadoutChoice::synthesized) {
        const auto conditionals = conditional_x_states(report.stages.back(), family);
        report.readout = synthesize_readout(conditionals, identity_label_map(family));
        report.steps.push_back("rotate X by the synthesized readout");
    } else {
        report.readout = standard_readout(family);
        report.steps.push_back("rotate X by the construction's readout");
    }
    report.correlated = verify_correlation(report.stages[1], report.readout, family);
    report.stages.push_back(apply_on_register(report.stages.back(), "X", report.readout.matrix));
    return report;
}

RunReport run_simon_optimal(int n) {
    if (n != 2) throw Error(Errc::size, "the single-query period variant is built for n = 2");
    const auto family = builtin("simon2");
    RunReport report;
    report.family = family.name;
    report.steps = {"prepare K uniform, X uniform, V antisymmetric", "evaluate f(k, x) into V",
                    "rotate X by Hadamard then swap |01> and |10>"};
    report.stages.push_back(prepare_extended(family.layout(), VPreparation::antisymmetric()));
    report.stages.push_back(apply_oracle(report.stages.back(), family));
    report.quantum_queries = 1;
    report.readout = simon_swap_readout(family);
    report.correlated = verify_correlation(report.stages.back(), report.readout, family);
    report.stages.push_back(apply_on_register(report.stages.back(), "X", report.readout.matrix));
    return report;
}

int grover_auto_iterations(int n) {
    // the optimal round count; floor keeps n = 2 at the single evaluation
    return static_cast<int>(std::floor(0.25 * 3.14159265358979323846 * std::pow(2.0, n / 2.0)));
}

RunReport grover_iterate(int n, std::optional<int> iterations) {
    if (n < 2 || n > 4) throw Error(Errc::size, "grover iteration is built for n in {2, 3, 4}");
    const auto family = builtin("grover" + std::to_string(n));
    const int rounds = iterations.value_or(grover_auto_iterations(n));
    if (rounds < 0) throw Error(Errc::usage, "iteration count must be nonnegative");

    RunReport report;
    report.family = family.name;
    report.readout = standard_readout(family);

    auto correlation_prob = [&](const StateVector& st) {
        // P(X = k | K = k); identical across k by symmetry
        double p = 0.0;
        for (std::size_t k = 0; k < family.size(); ++k)
            p += conditional_distribution(st, "X", "K", family.members[k].k_label).at(family.members[k].k_label);
        return p / static_cast<double>(family.size());
    };

    auto st = prepare_extended(family.layout(), VPreparation::antisymmetric());
    report.steps.push_back("prepare");
    report.stages.push_back(st);
    report.iteration_probs.push_back(correlation_prob(st));
    for (int t = 0; t < rounds; ++t) {
        st = apply_oracle(st, family);
        ++report.quantum_queries;
        st = apply_on_register(st, "X", report.readout.matrix);
        report.steps.push_back("evaluate + rotate");
        report.stages.push_back(st);
        report.iteration_probs.push_back(correlation_prob(st));
    }
    report.correlated = report.iteration_probs.back() >= 1.0 - kTol;
    return report;
}

namespace {

// GF(2) row space kept in echelon form, keyed by leading bit
class Gf2Basis {
public:
    explicit Gf2Basis(int bits) : lead_(static_cast<std::size_t>(bits), 0) {}

    // false when the row is dependent on what is already here
    bool insert(std::size_t row) {
        for (std::size_t i = lead_.size(); i-- > 0;) {
            if (!((row >> i) & 1u)) continue;
            if (lead_[i] == 0) {
                lead_[i] = row;
                return true;
            }
            row ^= lead_[i];
        }
        return false;
    }

private:
    std::vector<std::size_t> lead_;
};

} // namespace

std::string solve_mod2(const std::vector<std::string>& samples, int n) {
    std::vector<std::size_t> rows;
    for (const auto& s : samples) {
        if (s.size() != static_cast<std::size_t>(n) || !is_bit_string(s))
            throw Error(Errc::usage, "sample '" + s + "' is not an n-bit string");
        rows.push_back(parse_bits(s));
    }
    if (rows.size() != static_cast<std::size_t>(n - 1))
        throw Error(Errc::rank, "need exactly n-1 samples, got " + std::to_string(rows.size()));

    Gf2Basis basis(n);
    for (auto r : rows)
        if (!basis.insert(r)) throw Error(Errc::rank, "samples are linearly dependent");

    // the one nonzero h orthogonal to every row
    for (std::size_t h = 1; h < (std::size_t{1} << n); ++h) {
        bool ok = true;
        for (auto r : rows)
            if (std::popcount(r & h) & 1u) {
                ok = false;
                break;
            }
        if (ok) return to_bits(h, n);
    }
    throw Error(Errc::rank, "no nonzero solution (samples span the full space)");
}

SimonLoopResult simon_sample_loop(int n, std::uint64_t seed) {
    if (n < 2 || n > 3) throw Error(Errc::size, "the sampling loop is built for n in {2, 3}");
    const auto family = builtin("simon" + std::to_string(n));
    const auto layout = family.layout();
    Rng rng(seed);

    SimonLoopResult result;
    result.seed = seed;

    // collapse the oracle's choice once (its marginal is uniform)
    const std::size_t k = rng.next_below(family.size());
    result.k_label = family.members[k].k_label;
    result.expected_h = family.meta_h.at(result.k_label);

    const auto hadamard = Matrix::hadamard_power(n);
    auto run_once = [&]() -> std::string {
        auto st = prepare_extended(layout, VPreparation::all_zeros());
        st = collapse(st, "K", result.k_label);
        st = apply_oracle(st, family);
        ++result.queries;
        st = apply_on_register(st, "X", hadamard);
        const auto dist = measure_distribution(st, "X");
        std::vector<double> weights;
        std::vector<std::string> labels;
        for (const auto& [label, p] : dist) {
            labels.push_back(label);
            weights.push_back(p);
        }
        return labels[rng.sample(weights)];
    };

    std::vector<std::string> independent;
    Gf2Basis basis(n);
    for (int guard = 0; guard < 1000; ++guard) {
        const std::string s = run_once();
        result.all_outcomes.push_back(s);
        if (parse_bits(s) == 0) continue;
        if (!basis.insert(parse_bits(s))) continue; // dependent on earlier samples
        independent.push_back(s);
        result.samples.push_back({s});
        if (independent.size() == static_cast<std::size_t>(n - 1)) {
            result.h = solve_mod2(independent, n);
            return result;
        }
    }
    throw Error(Errc::non_termination, "sampling loop exceeded 1000 evaluations");
}

Partition derive_partitions(const FunctionFamily& family) {
    if (family.name != "perm") throw Error(Errc::usage, "partition derivation is built for the perm family");
    const auto report = run_extended(family, VPreparation::antisymmetric(), ReadoutChoice::standard);
    const auto& final_state = report.stages.back();

    Partition partition;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto dist = conditional_distribution(final_state, "X", "K", family.members[k].k_label);
        std::string outcome;
        for (const auto& [label, p] : dist)
            if (p >= 1.0 - kTol) outcome = label;
        if (outcome.empty())
            throw Error(Errc::model_mismatch,
                        "member '" + family.members[k].k_label + "' is not carried by a single X outcome");
        if (outcome == std::string(static_cast<std::size_t>(family.x_bits), '0'))
            throw Error(Errc::model_mismatch, "a member landed on the all-zeroes outcome");
        partition.blocks[outcome].push_back(family.members[k].k_label);
    }
    if (partition.blocks.size() != 3)
        throw Error(Errc::model_mismatch, "expected 3 partition blocks, got " +
                                              std::to_string(partition.blocks.size()));
    for (const auto& [label, block] : partition.blocks)
        if (block.size() != 8)
            throw Error(Errc::model_mismatch, "partition block '" + label + "' has " +
                                                  std::to_string(block.size()) + " members, expected 8");
    return partition;
}

bool backdating_check(const FunctionFamily& family) {
    const auto vprep = canonical_vprep(family);
    const auto layout = family.layout();
    const auto readout = standard_readout(family);

    const auto psi0 = prepare_extended(layout, vprep);
    const auto run = [&](const StateVector& start) {
        return apply_on_register(apply_oracle(start, family), "X", readout.matrix);
    };
    const auto full = run(psi0);

    for (std::size_t k = 0; k < family.size(); ++k) {
        const std::string& k_label = family.members[k].k_label;
        const auto after = conditional_distribution(full, "X", "K", k_label); // run, then reduce
        const auto before = measure_distribution(run(collapse(psi0, "K", k_label)), "X");
        for (const auto& [label, p] : after)
            if (std::abs(p - before.at(label)) > kTol) return false;
    }
    return true;
}

RunReport run_minute() { return run_extended(builtin("minute"), VPreparation::antisymmetric(), ReadoutChoice::standard); }

int canonical_quantum_queries(const FunctionFamily& family) {
    if (family.name == "grover3" || family.name == "grover4")
        return grover_auto_iterations(family.x_bits);
    return 1;
}

} // namespace qsp
