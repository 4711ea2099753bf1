#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsp/family.hpp"
#include "qsp/query.hpp"
#include "qsp/state.hpp"

namespace qsp {

// One sharp-state trajectory of the advanced-information classical
// algorithm: a way of holding half the oracle's choice, one evaluation of the
// missing information, and an initial V content. Shortcut histories carry no
// half (they evaluate everywhere).
struct History {
    std::optional<AdvancedInfo> advanced;
    std::size_t x_query = 0;
    unsigned result = 0;
    std::string k_label;
    std::size_t v_initial = 0;
    cplx phase{1.0, 0.0};
};

struct HistoryBundle {
    FunctionFamily family;
    std::vector<History> histories;

    RegisterLayout target_layout() const { return family.layout(); }
};

enum class Stage { initial, after_evaluation };

// One history per (consistent half that still needs a query, admissible
// missing query, observed result, V basis string). Requires advanced depth 1.
HistoryBundle enumerate_histories(const FunctionFamily& family, HalfMode mode);

// Weight each history by the vprep expansion coefficient of its V content.
HistoryBundle assign_phases(const HistoryBundle& bundle, const VPreparation& vprep);

// Normalized superposition of the sharp states at the requested stage.
StateVector sum_histories(const HistoryBundle& bundle, Stage stage);

// Evaluation for every (k, x, v) triple; junk histories included on purpose.
// Sums to the oracle-applied extended state for any family.
HistoryBundle shortcut_bundle(const FunctionFamily& family, const VPreparation& vprep);

// (theta degrees, K-vs-rest entropy) samples used by the entanglement sweep.
enum class VSweep {
    symmetric_antisymmetric, // V(theta) = cos(theta)*(|0>+|1>) + sin(theta)*(|0>-|1>) per qubit
    computational,           // V(theta) = cos(theta)|0> + sin(theta)|1> per qubit
};

double entanglement_after_evaluation(const FunctionFamily& family, VSweep sweep, double theta_degrees);

struct SweepMaximum {
    double theta_degrees = 0.0;
    double entropy = 0.0;
};

// 1 degree grid over [0, 360) refined to 1e-6 degrees around the best point.
SweepMaximum find_entanglement_maximum(const FunctionFamily& family, VSweep sweep);

} // namespace qsp
