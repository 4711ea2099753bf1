#include "qsp/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qsp/algorithms.hpp"
#include "qsp/family_io.hpp"
#include "qsp/histories.hpp"

namespace qsp {

namespace {

std::string fmt_amp(const cplx& a) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "(%+.6f,%+.6f)", a.real(), a.imag());
    return buf;
}

std::string fmt_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

void emit_state(std::ostream& out, const StateVector& st) {
    const auto& layout = st.layout;
    for (std::size_t i = 0; i < layout.dim(); ++i) {
        const auto digits = layout.decompose(i);
        for (std::size_t r = 0; r < layout.count(); ++r) {
            if (r) out << " ";
            out << layout.reg(r).name << "=" << layout.reg(r).labels[digits[r]];
        }
        out << " " << fmt_amp(st.amps[i]) << "\n";
    }
}

struct CommonOpts {
    std::string family;
    std::string file;
    std::string mode;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_family) {
    if (with_family) {
        cmd->add_option("--family", o.family, "built-in family name");
        cmd->add_option("--file", o.file, "family file path");
    }
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--tol", o.tol, "comparison tolerance");
}

FunctionFamily resolve_family(const CommonOpts& o) {
    if (!o.family.empty() && !o.file.empty())
        throw Error(Errc::usage, "--family and --file are mutually exclusive");
    if (!o.family.empty()) return builtin(o.family);
    if (!o.file.empty()) return load_family_file(o.file);
    throw Error(Errc::usage, "one of --family or --file is required");
}

HalfMode resolve_mode(const CommonOpts& o, const FunctionFamily& fam) {
    if (o.mode.empty()) return canonical_mode(fam);
    if (o.mode == "bit") return HalfMode::bit_half;
    if (o.mode == "row") return HalfMode::row_half;
    throw Error(Errc::usage, "--mode must be 'bit' or 'row'");
}

void print_rule_row(std::ostream& out, const RuleVerdict& v) {
    out << v.family << "\t" << v.classical_depth << "\t" << v.advanced_depth << "\t" << v.quantum_queries
        << "\t" << (v.pass ? "PASS" : "FAIL") << "\n";
    if (v.stated_mismatch()) {
        out << "# stated figures differ from the exhaustive search:";
        if (v.stated_classical && *v.stated_classical != v.classical_depth)
            out << " classical " << *v.stated_classical << " vs " << v.classical_depth;
        if (v.stated_advanced && *v.stated_advanced != v.advanced_depth)
            out << " advanced " << *v.stated_advanced << " vs " << v.advanced_depth;
        out << "\n";
    }
}

void print_report_row(std::ostream& out, const RuleVerdict& v) {
    out << v.family << "\t" << v.problem << "\t" << v.classical_depth << "\t" << v.advanced_depth << "\t"
        << v.excluded_count << "\t" << v.quantum_queries << "\t" << (v.pass ? "PASS" : "FAIL") << "\n";
}

int run_simulate(std::ostream& out, const CommonOpts& o, int steps) {
    const auto fam = resolve_family(o);
    if (steps < 0 || steps > 2) throw Error(Errc::usage, "--steps must be 0, 1 or 2");
    const auto report = run_extended(fam, canonical_vprep(fam), ReadoutChoice::standard);
    out << "# family " << fam.name << "\n";
    out << "# step " << steps << ": " << report.steps[static_cast<std::size_t>(steps)] << "\n";
    emit_state(out, report.stages[static_cast<std::size_t>(steps)]);
    if (steps == 2 && report.correlated)
        out << "# correlated " << (*report.correlated ? "yes" : "no") << "\n";
    return 0;
}

int run_rule(std::ostream& out, const CommonOpts& o) {
    const auto fam = resolve_family(o);
    const auto mode = resolve_mode(o, fam);
    auto verdict = check_fifty_percent_rule(fam, canonical_quantum_queries(fam), mode);
    print_rule_row(out, verdict);
    return verdict.pass ? 0 : 1;
}

int run_histories(std::ostream& out, const CommonOpts& o) {
    const auto fam = resolve_family(o);
    const auto mode = resolve_mode(o, fam);
    auto bundle = assign_phases(enumerate_histories(fam, mode), VPreparation::antisymmetric());
    out << "# family " << fam.name << " mode " << half_mode_name(mode) << "\n";
    out << "row\tadvanced\tcomputed\tk\tv\tphase\n";
    std::size_t row = 0;
    const History* prev = nullptr;
    for (const auto& h : bundle.histories) {
        if (!prev || !(*prev->advanced == *h.advanced) || prev->x_query != h.x_query || prev->result != h.result)
            ++row;
        prev = &h;
        out << row << "\t" << h.advanced->describe(fam) << "\t"
            << "f(" << to_bits(h.x_query, fam.x_bits) << ")=" << to_bits(h.result, fam.v_bits) << "\t"
            << h.k_label << "\t" << to_bits(h.v_initial, fam.v_bits) << "\t" << fmt_amp(h.phase) << "\n";
    }
    return 0;
}

int run_synthesize(std::ostream& out, const CommonOpts& o) {
    const auto fam = resolve_family(o);
    const auto psi1 = apply_oracle(prepare_extended(fam.layout(), canonical_vprep(fam)), fam);
    const auto conditionals = conditional_x_states(psi1, fam);
    const auto readout = synthesize_readout(conditionals, identity_label_map(fam));
    out << "# family " << fam.name << "\n";
    out << "# label_map:";
    for (const auto& [label, target] : readout.label_map) out << " " << label << "->" << target;
    out << "\n";
    for (std::size_t r = 0; r < readout.matrix.dim; ++r) {
        for (std::size_t c = 0; c < readout.matrix.dim; ++c) {
            if (c) out << " ";
            out << fmt_amp(readout.matrix.at(r, c));
        }
        out << "\n";
    }
    return 0;
}

int run_grover(std::ostream& out, int n, const std::string& iterations) {
    std::optional<int> rounds;
    if (!iterations.empty() && iterations != "auto") {
        try {
            rounds = std::stoi(iterations);
        } catch (const std::exception&) {
            throw Error(Errc::usage, "--iterations takes an integer or 'auto'");
        }
    }
    const auto report = grover_iterate(n, rounds);
    out << "# grover n=" << n << " iterations=" << report.quantum_queries
        << (rounds ? "" : " (auto)") << "\n";
    out << "iteration\tp_correlated\n";
    for (std::size_t t = 0; t < report.iteration_probs.size(); ++t)
        out << t << "\t" << fmt_prob(report.iteration_probs[t]) << "\n";
    return 0;
}

int run_simon(std::ostream& out, int n, std::uint64_t seed) {
    const auto result = simon_sample_loop(n, seed);
    out << "# simon n=" << n << " seed=" << seed << "\n";
    out << "# collapsed k=" << result.k_label << " (period " << result.expected_h << ")\n";
    out << "query\toutcome\tkept\n";
    std::size_t kept = 0;
    for (std::size_t q = 0; q < result.all_outcomes.size(); ++q) {
        // kept samples appear in order; a rejected outcome can never equal the
        // next sample to keep (it would have been independent and kept)
        const bool is_kept = kept < result.samples.size() && result.samples[kept].s == result.all_outcomes[q];
        if (is_kept) ++kept;
        out << (q + 1) << "\t" << result.all_outcomes[q] << "\t" << (is_kept ? "yes" : "no") << "\n";
    }
    out << "# recovered h=" << result.h << " queries=" << result.queries << "\n";
    if (n == 2) {
        const auto optimal = run_simon_optimal(2);
        out << "# single-query variant: antisymmetric V, swap readout, correlated "
            << (optimal.correlated && *optimal.correlated ? "yes" : "no") << " with 1 query\n";
    }
    return result.h == result.expected_h ? 0 : 1;
}

int run_report(std::ostream& out) {
    static const char* table_families[] = {"deutsch", "dj2", "bv2", "simon2", "grover2", "grover4", "minute", "perm"};
    out << "# 50% rule speedup table\n";
    out << "family\tproblem\tclassical\tadvanced\texcluded\tquantum\tverdict\n";
    bool all_pass = true;
    std::ostringstream checks;
    for (const char* name : table_families) {
        const auto fam = builtin(name);
        auto verdict = check_fifty_percent_rule(fam, canonical_quantum_queries(fam), canonical_mode(fam));
        print_report_row(out, verdict);
        all_pass = all_pass && verdict.pass && !verdict.stated_mismatch();
    }
    for (const char* name : {"deutsch", "dj2", "bv2", "grover2", "minute", "perm"}) {
        const auto fam = builtin(name);
        const auto run = run_extended(fam, canonical_vprep(fam), ReadoutChoice::standard);
        const bool ok = run.correlated && *run.correlated;
        checks << " " << name << "=" << (ok ? "ok" : "FAIL");
        all_pass = all_pass && ok;
    }
    {
        const auto optimal = run_simon_optimal(2);
        const bool ok = optimal.correlated && *optimal.correlated;
        checks << " simon2-optimal=" << (ok ? "ok" : "FAIL");
        all_pass = all_pass && ok;
    }
    out << "# correlation:" << checks.str() << "\n";
    std::ostringstream backdating;
    for (const char* name : {"deutsch", "dj2", "bv2", "simon2", "grover2", "grover4", "minute", "perm"}) {
        const bool ok = backdating_check(builtin(name));
        backdating << " " << name << "=" << (ok ? "ok" : "FAIL");
        all_pass = all_pass && ok;
    }
    out << "# backdating:" << backdating.str() << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"oracle-choice register quantum algorithm laboratory"};
    app.require_subcommand(1);

    CommonOpts opts;
    int steps = 2;
    std::string emit = "state";
    int n = 2;
    std::string iterations = "auto";
    bool report_all = false;

    auto* simulate = app.add_subcommand("simulate", "run an extended algorithm and print states");
    add_common(simulate, opts, true);
    simulate->add_option("--steps", steps, "stages to execute (0 prepare, 1 evaluate, 2 rotate)");
    simulate->add_option("--emit", emit, "output form (state)");

    auto* rule = app.add_subcommand("rule", "check the advanced-information query count");
    add_common(rule, opts, true);
    rule->add_option("--mode", opts.mode, "half mode: bit or row");

    auto* histories = app.add_subcommand("histories", "print the classical history table");
    add_common(histories, opts, true);
    histories->add_option("--mode", opts.mode, "half mode: bit or row");
    histories->add_option("--emit", emit, "output form (table)");

    auto* synthesize = app.add_subcommand("synthesize", "derive the readout rotation from the correlations");
    add_common(synthesize, opts, true);

    auto* grover = app.add_subcommand("grover", "iterate the locate algorithm");
    add_common(grover, opts, false);
    grover->add_option("--n", n, "location width in bits (2..4)");
    grover->add_option("--iterations", iterations, "round count or 'auto'");

    auto* simon = app.add_subcommand("simon", "run the period sampling loop");
    add_common(simon, opts, false);
    simon->add_option("--n", n, "input width in bits (2..3)");

    auto* report = app.add_subcommand("report", "speedup table and correlation checks");
    add_common(report, opts, false);
    report->add_flag("--all", report_all, "cover every catalogued family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(out, opts, steps);
        if (rule->parsed()) return run_rule(out, opts);
        if (histories->parsed()) return run_histories(out, opts);
        if (synthesize->parsed()) return run_synthesize(out, opts);
        if (grover->parsed()) return run_grover(out, n, iterations);
        if (simon->parsed()) return run_simon(out, n, opts.seed);
        if (report->parsed()) {
            if (!report_all) throw Error(Errc::usage, "report requires --all");
            return run_report(out);
        }
    } catch (const Error& e) {
        err << errc_name(e.code()) << " error: " << e.what() << "\n";
        return e.code() == Errc::usage ? 2 : 1;
    }
    err << "usage error: no command\n";
    return 2;
}

} // namespace qsp
