#include "qsp/state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>

#include "qsp/family.hpp"

namespace qsp {

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::hadamard_power(int bits) {
    const std::size_t d = std::size_t{1} << bits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m.at(r, c) = (std::popcount(r & c) & 1) ? -scale : scale;
    return m;
}

Matrix Matrix::reflection_about_uniform(std::size_t d) {
    Matrix m(d);
    const double offdiag = 2.0 / static_cast<double>(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = (r == c) ? offdiag - 1.0 : offdiag;
    return m;
}

Matrix Matrix::basis_swap(std::size_t d, std::size_t i, std::size_t j) {
    Matrix m = identity(d);
    m.at(i, i) = 0.0;
    m.at(j, j) = 0.0;
    m.at(i, j) = 1.0;
    m.at(j, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
    Matrix out(lhs.dim);
    for (std::size_t r = 0; r < lhs.dim; ++r)
        for (std::size_t k = 0; k < lhs.dim; ++k) {
            const cplx l = lhs.at(r, k);
            if (l == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < lhs.dim; ++c) out.at(r, c) += l * rhs.at(k, c);
        }
    return out;
}

bool is_unitary(const Matrix& m, double tol) {
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < m.dim; ++k) acc += std::conj(m.at(k, r)) * m.at(k, c);
            if (std::abs(acc - (r == c ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) > tol) return false;
        }
    return true;
}

std::vector<cplx> VPreparation::qubit_state() const {
    const cplx c0 = alpha + beta;
    const cplx c1 = alpha - beta;
    const double n = std::sqrt(std::norm(c0) + std::norm(c1));
    if (n == 0.0) throw Error(Errc::degenerate_preparation, "V preparation is the zero vector");
    return {c0 / n, c1 / n};
}

std::vector<cplx> VPreparation::v_state(int v_bits) const {
    std::vector<cplx> out{cplx{1.0, 0.0}};
    if (v_bits == 0) {
        if (!nonzero()) throw Error(Errc::degenerate_preparation, "V preparation is the zero vector");
        return out;
    }
    const auto q = qubit_state();
    for (int b = 0; b < v_bits; ++b) {
        std::vector<cplx> next(out.size() * 2);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[2 * i] = out[i] * q[0];
            next[2 * i + 1] = out[i] * q[1];
        }
        out = std::move(next);
    }
    return out;
}

cplx VPreparation::weight(std::size_t v, int v_bits) const {
    cplx w{1.0, 0.0};
    for (int b = 0; b < v_bits; ++b) {
        const bool one = (v >> (v_bits - 1 - b)) & 1u;
        w *= one ? (alpha - beta) : (alpha + beta);
    }
    return w;
}

PhaseAssignment PhaseAssignment::random(std::size_t k_dim, Rng& rng) {
    PhaseAssignment p;
    p.angles.resize(k_dim);
    for (auto& a : p.angles) a = rng.next_angle();
    return p;
}

double StateVector::norm2() const {
    double n = 0.0;
    for (auto& a : amps) n += std::norm(a);
    return n;
}

bool StateVector::normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

StateVector StateVector::normalized_copy() const {
    StateVector out = *this;
    const double n = std::sqrt(norm2());
    if (n == 0.0) throw Error(Errc::cancellation, "cannot normalize the zero vector");
    for (auto& a : out.amps) a /= n;
    return out;
}

StateVector prepare_extended(const RegisterLayout& layout, const VPreparation& vprep,
                             const PhaseAssignment& kphases) {
    if (!vprep.nonzero()) throw Error(Errc::degenerate_preparation, "V preparation is the zero vector");
    const std::size_t k_dim = layout.reg(layout.index_of("K")).dim;
    const std::size_t x_dim = layout.reg(layout.index_of("X")).dim;
    if (!kphases.angles.empty() && kphases.angles.size() != k_dim)
        throw Error(Errc::layout, "phase assignment does not match the K dimension");

    const auto v = vprep.v_state(layout.v_bits());
    const double scale = 1.0 / std::sqrt(static_cast<double>(k_dim) * static_cast<double>(x_dim));

    StateVector st(layout);
    for (std::size_t k = 0; k < k_dim; ++k) {
        const cplx phase = kphases.angles.empty()
                               ? cplx{1.0, 0.0}
                               : std::polar(1.0, kphases.angles[k]);
        for (std::size_t x = 0; x < x_dim; ++x)
            for (std::size_t vi = 0; vi < v.size(); ++vi) st.at_kxv(k, x, vi) = phase * scale * v[vi];
    }
    return st;
}

StateVector apply_oracle(const StateVector& state, const FunctionFamily& family) {
    const auto& layout = state.layout;
    const std::size_t k_dim = layout.reg(layout.index_of("K")).dim;
    const std::size_t x_dim = layout.reg(layout.index_of("X")).dim;
    const std::size_t v_dim = layout.reg(layout.index_of("V")).dim;
    if (family.size() != k_dim || family.rows() != x_dim || (std::size_t{1} << family.v_bits) != v_dim)
        throw Error(Errc::layout, "family dimensions do not match the state layout");

    StateVector out(layout);
    for (std::size_t k = 0; k < k_dim; ++k)
        for (std::size_t x = 0; x < x_dim; ++x) {
            const std::size_t fv = family.f(k, x);
            for (std::size_t v = 0; v < v_dim; ++v) out.at_kxv(k, x, v ^ fv) = state.at_kxv(k, x, v);
        }
    return out;
}

StateVector apply_on_register(const StateVector& state, std::string_view reg_name, const Matrix& unitary) {
    const auto& layout = state.layout;
    const std::size_t r = layout.index_of(reg_name);
    const std::size_t d = layout.reg(r).dim;
    if (unitary.dim != d) throw Error(Errc::layout, "matrix dimension does not match register");
    if (!is_unitary(unitary)) throw Error(Errc::unitarity, "matrix is not unitary");

    const std::size_t stride = layout.stride(r);
    const std::size_t block = stride * d;
    StateVector out(layout);
    for (std::size_t base = 0; base < layout.dim(); base += block)
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t at = base + inner;
            for (std::size_t row = 0; row < d; ++row) {
                cplx acc{0.0, 0.0};
                for (std::size_t col = 0; col < d; ++col) acc += unitary.at(row, col) * state.amps[at + col * stride];
                out.amps[at + row * stride] = acc;
            }
        }
    return out;
}

std::map<std::string, double> measure_distribution(const StateVector& state, std::string_view reg_name) {
    if (!state.normalized()) throw Error(Errc::normalization, "state is not normalized");
    const auto& layout = state.layout;
    const std::size_t r = layout.index_of(reg_name);
    std::vector<double> probs(layout.reg(r).dim, 0.0);
    for (std::size_t i = 0; i < layout.dim(); ++i) probs[layout.digit(i, r)] += std::norm(state.amps[i]);
    std::map<std::string, double> out;
    for (std::size_t j = 0; j < probs.size(); ++j) out[layout.reg(r).labels[j]] = probs[j];
    return out;
}

StateVector collapse(const StateVector& state, std::string_view reg_name, const std::string& outcome) {
    const auto& layout = state.layout;
    const std::size_t r = layout.index_of(reg_name);
    const auto& labels = layout.reg(r).labels;
    const auto it = std::find(labels.begin(), labels.end(), outcome);
    if (it == labels.end())
        throw Error(Errc::impossible_outcome, "register has no basis state '" + outcome + "'");
    const std::size_t which = static_cast<std::size_t>(it - labels.begin());

    StateVector out(layout);
    double kept = 0.0;
    for (std::size_t i = 0; i < layout.dim(); ++i)
        if (layout.digit(i, r) == which) {
            out.amps[i] = state.amps[i];
            kept += std::norm(state.amps[i]);
        }
    if (kept <= kTol * kTol)
        throw Error(Errc::impossible_outcome, "outcome '" + outcome + "' has zero probability");
    const double scale = 1.0 / std::sqrt(kept);
    for (auto& a : out.amps) a *= scale;
    return out;
}

std::map<std::string, double> conditional_distribution(const StateVector& state, std::string_view target,
                                                       std::string_view given, const std::string& outcome) {
    return measure_distribution(collapse(state, given, outcome), target);
}

double entanglement_entropy(const StateVector& state, const std::set<std::string>& partition) {
    if (!state.normalized()) throw Error(Errc::normalization, "state is not normalized");
    const auto& layout = state.layout;
    if (partition.empty()) throw Error(Errc::partition, "partition is empty");
    for (auto& name : partition)
        if (!layout.has(name)) throw Error(Errc::partition, "partition names unknown register '" + name + "'");
    if (partition.size() >= layout.count()) throw Error(Errc::partition, "partition must be a proper subset");

    std::vector<std::size_t> in, out;
    for (std::size_t i = 0; i < layout.count(); ++i)
        (partition.count(layout.reg(i).name) ? in : out).push_back(i);

    std::size_t rows = 1, cols = 1;
    for (auto i : in) rows *= layout.reg(i).dim;
    for (auto i : out) cols *= layout.reg(i).dim;

    Eigen::MatrixXcd a(rows, cols);
    for (std::size_t idx = 0; idx < layout.dim(); ++idx) {
        std::size_t ri = 0, ci = 0;
        for (auto i : in) ri = ri * layout.reg(i).dim + layout.digit(idx, i);
        for (auto i : out) ci = ci * layout.reg(i).dim + layout.digit(idx, i);
        a(static_cast<Eigen::Index>(ri), static_cast<Eigen::Index>(ci)) = state.amps[idx];
    }

    // eigenvalues of the smaller Gram matrix = squared Schmidt coefficients
    Eigen::MatrixXcd gram = (rows <= cols) ? Eigen::MatrixXcd(a * a.adjoint()) : Eigen::MatrixXcd(a.adjoint() * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda < 1e-12) continue; // dropped to avoid 0*log 0
        entropy -= lambda * std::log2(lambda);
    }
    return entropy;
}

cplx overlap(const StateVector& a, const StateVector& b) {
    if (!a.layout.same_shape(b.layout)) throw Error(Errc::layout, "states live on different layouts");
    const double na = std::sqrt(a.norm2()), nb = std::sqrt(b.norm2());
    if (na == 0.0 || nb == 0.0) throw Error(Errc::cancellation, "overlap with the zero vector");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc / (na * nb);
}

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    return std::abs(overlap(a, b)) >= 1.0 - tol;
}

} // namespace qsp
