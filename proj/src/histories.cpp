#include "qsp/histories.hpp"

#include <algorithm>
#include <cmath>

namespace qsp {

namespace {

StateVector sharp_state(const RegisterLayout& layout, const FunctionFamily& family, const History& h,
                        Stage stage) {
    StateVector st(layout);
    const std::size_t k = family.index_of(h.k_label);
    std::size_t v = h.v_initial;
    if (stage == Stage::after_evaluation) v ^= family.f(k, h.x_query);
    st.at_kxv(k, h.x_query, v) = h.phase;
    return st;
}

} // namespace

HistoryBundle enumerate_histories(const FunctionFamily& family, HalfMode mode) {
    HistoryBundle bundle;
    bundle.family = family;

    const std::size_t v_dim = std::size_t{1} << family.v_bits;

    if (family.size() == 1) {
        // Degenerate problem: nothing is missing, every evaluation merely
        // confirms. Kept so one-member bundles are still labeled.
        const std::size_t take =
            mode == HalfMode::row_half ? (family.rows() + 1) / 2 : (family.members[0].k_label.size() + 1) / 2;
        std::vector<std::size_t> positions(take);
        for (std::size_t i = 0; i < take; ++i) positions[i] = i;
        AdvancedInfo half;
        half.mode = mode;
        half.positions = positions;
        for (auto p : positions)
            half.values.push_back(mode == HalfMode::row_half
                                      ? family.f(0, p)
                                      : static_cast<unsigned>(family.members[0].k_label[p] - '0'));
        for (std::size_t x = 0; x < family.rows(); ++x) {
            if (mode == HalfMode::row_half &&
                std::find(positions.begin(), positions.end(), x) != positions.end())
                continue;
            for (std::size_t v = 0; v < v_dim; ++v)
                bundle.histories.push_back({half, x, family.f(0, x), family.members[0].k_label, v, {1.0, 0.0}});
        }
        if (bundle.histories.empty())
            throw Error(Errc::unsupported_depth, "family '" + family.name + "' yields no histories");
        return bundle;
    }

    const auto adv = advanced_query_complexity(family, mode);
    if (adv.depth != 1)
        throw Error(Errc::unsupported_depth, "family '" + family.name + "' needs advanced depth 1, got " +
                                                 std::to_string(adv.depth));

    for (const auto& report : adv.per_half) {
        if (report.excluded) continue; // the half already names the solution
        for (std::size_t x = 0; x < family.rows(); ++x) {
            if (mode == HalfMode::row_half &&
                std::find(report.half.positions.begin(), report.half.positions.end(), x) !=
                    report.half.positions.end())
                continue;
            // admissible query: each observed value pins exactly one member
            std::map<unsigned, std::vector<std::size_t>> classes;
            for (auto i : report.consistent) classes[family.f(i, x)].push_back(i);
            if (classes.size() < 2) continue;
            if (!std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.second.size() == 1; }))
                continue;
            for (const auto& [value, who] : classes)
                for (std::size_t v = 0; v < v_dim; ++v)
                    bundle.histories.push_back(
                        {report.half, x, value, family.members[who.front()].k_label, v, {1.0, 0.0}});
        }
    }

    if (bundle.histories.empty())
        throw Error(Errc::unsupported_depth, "family '" + family.name + "' yields no histories");

    std::sort(bundle.histories.begin(), bundle.histories.end(), [](const History& a, const History& b) {
        if (!(*a.advanced == *b.advanced)) return *a.advanced < *b.advanced;
        if (a.x_query != b.x_query) return a.x_query < b.x_query;
        if (a.result != b.result) return a.result < b.result;
        return a.v_initial < b.v_initial;
    });
    return bundle;
}

HistoryBundle assign_phases(const HistoryBundle& bundle, const VPreparation& vprep) {
    HistoryBundle out = bundle;
    for (auto& h : out.histories) h.phase = vprep.weight(h.v_initial, bundle.family.v_bits);
    return out;
}

StateVector sum_histories(const HistoryBundle& bundle, Stage stage) {
    if (bundle.histories.empty()) throw Error(Errc::cancellation, "empty history bundle");
    const auto layout = bundle.family.layout();
    StateVector sum(layout);
    for (const auto& h : bundle.histories) {
        const auto sharp = sharp_state(layout, bundle.family, h, stage);
        for (std::size_t i = 0; i < sum.amps.size(); ++i) sum.amps[i] += sharp.amps[i];
    }
    if (sum.norm2() < 1e-24) throw Error(Errc::cancellation, "history phases cancel to the zero vector");
    return sum.normalized_copy();
}

HistoryBundle shortcut_bundle(const FunctionFamily& family, const VPreparation& vprep) {
    HistoryBundle bundle;
    bundle.family = family;
    const std::size_t v_dim = std::size_t{1} << family.v_bits;
    for (std::size_t k = 0; k < family.size(); ++k)
        for (std::size_t x = 0; x < family.rows(); ++x)
            for (std::size_t v = 0; v < v_dim; ++v)
                bundle.histories.push_back({std::nullopt, x, family.f(k, x), family.members[k].k_label, v,
                                            vprep.weight(v, family.v_bits)});
    return bundle;
}

double entanglement_after_evaluation(const FunctionFamily& family, VSweep sweep, double theta_degrees) {
    const double theta = theta_degrees * 3.14159265358979323846 / 180.0;
    const VPreparation vprep = sweep == VSweep::symmetric_antisymmetric
                                   ? VPreparation{std::cos(theta), std::sin(theta)}
                                   : VPreparation::from_computational(std::cos(theta), std::sin(theta));
    if (!vprep.nonzero()) return 0.0;
    const auto psi1 = apply_oracle(prepare_extended(family.layout(), vprep), family);
    return entanglement_entropy(psi1, {"K"});
}

SweepMaximum find_entanglement_maximum(const FunctionFamily& family, VSweep sweep) {
    double best_theta = 0.0, best = -1.0;
    for (int deg = 0; deg < 360; ++deg) {
        const double s = entanglement_after_evaluation(family, sweep, deg);
        if (s > best) {
            best = s;
            best_theta = deg;
        }
    }
    // golden-section refinement in the +-1 degree bracket around the grid best
    double lo = best_theta - 1.0, hi = best_theta + 1.0;
    const double phi = 0.6180339887498949;
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = entanglement_after_evaluation(family, sweep, a);
    double fb = entanglement_after_evaluation(family, sweep, b);
    while (hi - lo > 1e-6) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + phi * (hi - lo);
            fb = entanglement_after_evaluation(family, sweep, b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - phi * (hi - lo);
            fa = entanglement_after_evaluation(family, sweep, a);
        }
    }
    const double theta = (lo + hi) / 2.0;
    return {theta, entanglement_after_evaluation(family, sweep, theta)};
}

} // namespace qsp
