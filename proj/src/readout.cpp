#include "qsp/readout.hpp"

#include <algorithm>
#include <cmath>

namespace qsp {

namespace {

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vnorm(const std::vector<cplx>& a) { return std::sqrt(std::abs(dot(a, a))); }

// rotate so the first entry above tolerance is real positive
void fix_phase(std::vector<cplx>& v) {
    for (const auto& e : v)
        if (std::abs(e) > 1e-9) {
            const cplx rot = std::conj(e) / std::abs(e);
            for (auto& x : v) x *= rot;
            return;
        }
}

} // namespace

std::map<std::string, std::string> identity_label_map(const FunctionFamily& family) {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const std::string& label = family.correlation_label(i);
        out[label] = label;
    }
    return out;
}

std::map<std::string, std::vector<cplx>> conditional_x_states(const StateVector& state,
                                                              const FunctionFamily& family) {
    const auto& layout = state.layout;
    const std::size_t k_dim = layout.reg(layout.index_of("K")).dim;
    const std::size_t x_dim = layout.reg(layout.index_of("X")).dim;
    const std::size_t v_dim = layout.reg(layout.index_of("V")).dim;
    if (k_dim != family.size() || x_dim != family.rows())
        throw Error(Errc::layout, "state layout does not match the family");

    // remove V as an exact tensor factor
    std::vector<cplx> v_factor(v_dim, cplx{0.0, 0.0});
    {
        // dominant V column: amplitudes at the first (k, x) with weight
        std::size_t ref_k = 0, ref_x = 0;
        double best = -1.0;
        for (std::size_t k = 0; k < k_dim; ++k)
            for (std::size_t x = 0; x < x_dim; ++x) {
                double w = 0.0;
                for (std::size_t v = 0; v < v_dim; ++v) w += std::norm(state.at_kxv(k, x, v));
                if (w > best) {
                    best = w;
                    ref_k = k;
                    ref_x = x;
                }
            }
        for (std::size_t v = 0; v < v_dim; ++v) v_factor[v] = state.at_kxv(ref_k, ref_x, v);
        const double n = vnorm(v_factor);
        if (n == 0.0) throw Error(Errc::model_mismatch, "state has no support");
        for (auto& e : v_factor) e /= n;
        fix_phase(v_factor); // conditional phases then read off the canonical V factor
        // factor check: every (k, x) column must be proportional to it
        for (std::size_t k = 0; k < k_dim; ++k)
            for (std::size_t x = 0; x < x_dim; ++x) {
                std::vector<cplx> col(v_dim);
                double w = 0.0;
                for (std::size_t v = 0; v < v_dim; ++v) {
                    col[v] = state.at_kxv(k, x, v);
                    w += std::norm(col[v]);
                }
                if (w < 1e-18) continue;
                const double residual = std::sqrt(std::max(0.0, w - std::norm(dot(v_factor, col))));
                if (residual > 1e-6)
                    throw Error(Errc::model_mismatch, "V register is not an exact tensor factor");
            }
    }

    // per-member X conditionals, projected on the V factor
    std::vector<std::vector<cplx>> per_member(k_dim, std::vector<cplx>(x_dim));
    for (std::size_t k = 0; k < k_dim; ++k) {
        double w = 0.0;
        for (std::size_t x = 0; x < x_dim; ++x) {
            std::vector<cplx> col(v_dim);
            for (std::size_t v = 0; v < v_dim; ++v) col[v] = state.at_kxv(k, x, v);
            per_member[k][x] = dot(v_factor, col);
            w += std::norm(per_member[k][x]);
        }
        if (w < 1e-18)
            throw Error(Errc::model_mismatch,
                        "member '" + family.members[k].k_label + "' carries no amplitude");
        for (auto& e : per_member[k]) e /= std::sqrt(w);
    }

    // group by correlation label; members sharing a label must agree up to phase
    std::map<std::string, std::vector<cplx>> out;
    std::map<std::string, std::string> rep_member;
    for (std::size_t k = 0; k < k_dim; ++k) {
        const std::string& label = family.correlation_label(k);
        auto it = out.find(label);
        if (it == out.end()) {
            out[label] = per_member[k];
            rep_member[label] = family.members[k].k_label;
        } else if (std::abs(dot(it->second, per_member[k])) < 1.0 - kTol) {
            throw Error(Errc::label_incoherence, "members '" + rep_member[label] + "' and '" +
                                                     family.members[k].k_label + "' share label '" + label +
                                                     "' but their X conditionals differ");
        }
    }

    for (auto a = out.begin(); a != out.end(); ++a)
        for (auto b = std::next(a); b != out.end(); ++b)
            if (std::abs(dot(a->second, b->second)) > kTol)
                throw Error(Errc::separation, "labels '" + a->first + "' and '" + b->first +
                                                  "' have non-orthogonal X conditionals; one evaluation does not "
                                                  "separate the solutions");
    return out;
}

ReadoutUnitary synthesize_readout(const std::map<std::string, std::vector<cplx>>& conditionals,
                                  const std::map<std::string, std::string>& label_map) {
    if (conditionals.empty()) throw Error(Errc::separation, "no conditionals to synthesize from");
    const std::size_t dim = conditionals.begin()->second.size();

    std::vector<std::vector<cplx>> ins;
    std::vector<std::size_t> targets;
    std::vector<bool> target_used(dim, false);
    for (const auto& [label, vec] : conditionals) {
        const auto it = label_map.find(label);
        if (it == label_map.end()) throw Error(Errc::usage, "label_map misses label '" + label + "'");
        const std::size_t t = parse_bits(it->second);
        if (t >= dim || target_used[t])
            throw Error(Errc::usage, "label_map targets must be distinct X basis strings");
        target_used[t] = true;
        std::vector<cplx> v = vec;
        const double n = vnorm(v);
        if (n == 0.0) throw Error(Errc::separation, "zero conditional for label '" + label + "'");
        for (auto& e : v) e /= n;
        fix_phase(v);
        ins.push_back(std::move(v));
        targets.push_back(t);
    }

    for (std::size_t i = 0; i < ins.size(); ++i)
        for (std::size_t j = i + 1; j < ins.size(); ++j)
            if (std::abs(dot(ins[i], ins[j])) > kTol)
                throw Error(Errc::separation, "conditionals are not pairwise orthogonal");

    // complete the basis from unused computational vectors, in increasing order
    std::vector<std::size_t> free_targets;
    for (std::size_t t = 0; t < dim; ++t)
        if (!target_used[t]) free_targets.push_back(t);
    std::size_t next_free = 0;
    for (std::size_t cand = 0; cand < dim && ins.size() < dim; ++cand) {
        std::vector<cplx> v(dim, cplx{0.0, 0.0});
        v[cand] = 1.0;
        for (const auto& u : ins) {
            const cplx c = dot(u, v);
            for (std::size_t i = 0; i < dim; ++i) v[i] -= c * u[i];
        }
        const double n = vnorm(v);
        if (n < 1e-6) continue; // already spanned
        for (auto& e : v) e /= n;
        fix_phase(v);
        ins.push_back(std::move(v));
        targets.push_back(free_targets[next_free++]);
    }
    if (ins.size() != dim) throw Error(Errc::model_mismatch, "basis completion failed");

    ReadoutUnitary out;
    out.matrix = Matrix(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t c = 0; c < dim; ++c) out.matrix.at(targets[i], c) += std::conj(ins[i][c]);
    out.label_map = label_map;
    if (!is_unitary(out.matrix)) throw Error(Errc::unitarity, "synthesized readout is not unitary");
    return out;
}

bool verify_correlation(const StateVector& state, const ReadoutUnitary& readout, const FunctionFamily& family) {
    const auto rotated = apply_on_register(state, "X", readout.matrix);
    const auto k_probs = measure_distribution(rotated, "K");
    for (std::size_t k = 0; k < family.size(); ++k) {
        const std::string& k_label = family.members[k].k_label;
        if (k_probs.at(k_label) <= kTol) continue;
        const auto it = readout.label_map.find(family.correlation_label(k));
        if (it == readout.label_map.end()) return false;
        const auto dist = conditional_distribution(rotated, "X", "K", k_label);
        const auto hit = dist.find(it->second);
        if (hit == dist.end() || hit->second < 1.0 - kTol) return false;
    }
    return true;
}

ReadoutUnitary standard_readout(const FunctionFamily& family) {
    ReadoutUnitary out;
    out.label_map = identity_label_map(family);
    if (family.promise == Promise::kronecker_delta) {
        // Hadamard, phase flip on x = 0, Hadamard: the reflection about the
        // uniform vector (sign fixed so the correlated branch lands with +1)
        out.matrix = Matrix::reflection_about_uniform(family.rows());
    } else {
        out.matrix = Matrix::hadamard_power(family.x_bits);
    }
    return out;
}

ReadoutUnitary simon_swap_readout(const FunctionFamily& family) {
    if (family.x_bits != 2) throw Error(Errc::size, "the swap readout is built for the n = 2 period family");
    ReadoutUnitary out;
    out.label_map = identity_label_map(family);
    out.matrix = matmul(Matrix::basis_swap(4, 1, 2), Matrix::hadamard_power(2));
    return out;
}

} // namespace qsp
