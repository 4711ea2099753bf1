#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsp/layout.hpp"

namespace qsp {

using cplx = std::complex<double>;

inline constexpr double kTol = 1e-9;

struct FunctionFamily;

// Dense square complex matrix acting on a single register.
struct Matrix {
    std::size_t dim = 0;
    std::vector<cplx> a; // row major

    Matrix() = default;
    explicit Matrix(std::size_t d) : dim(d), a(d * d, cplx{0.0, 0.0}) {}

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Matrix identity(std::size_t d);
    static Matrix hadamard_power(int bits);
    // 2|u><u| - I with u the uniform vector; the readout for locate problems
    static Matrix reflection_about_uniform(std::size_t d);
    static Matrix basis_swap(std::size_t d, std::size_t i, std::size_t j);
};

Matrix matmul(const Matrix& lhs, const Matrix& rhs);
bool is_unitary(const Matrix& m, double tol = kTol);

// Per-qubit V preparation alpha*(|0>+|1>) + beta*(|0>-|1>).
struct VPreparation {
    cplx alpha{0.0, 0.0};
    cplx beta{0.0, 0.0};

    static VPreparation symmetric() { return {1.0, 0.0}; }
    static VPreparation antisymmetric() { return {0.0, 1.0}; }
    static VPreparation all_zeros() { return {1.0, 1.0}; } // (|0>+|1>)+(|0>-|1>) = 2|0>
    // coefficients in the computational basis c0|0> + c1|1>
    static VPreparation from_computational(cplx c0, cplx c1) { return {(c0 + c1) / 2.0, (c0 - c1) / 2.0}; }

    bool nonzero() const { return std::norm(alpha) + std::norm(beta) > 0.0; }
    // normalized state of one qubit
    std::vector<cplx> qubit_state() const;
    // normalized tensor power over v_bits qubits (dim 1 vector for v_bits = 0)
    std::vector<cplx> v_state(int v_bits) const;
    // unnormalized expansion weight of the basis string v (alpha+beta per 0 bit,
    // alpha-beta per 1 bit)
    cplx weight(std::size_t v, int v_bits) const;
};

// Phase angle per K basis state; uniform (all zero) when empty.
struct PhaseAssignment {
    std::vector<double> angles;

    static PhaseAssignment uniform() { return {}; }
    static PhaseAssignment random(std::size_t k_dim, Rng& rng);
};

struct StateVector {
    RegisterLayout layout;
    std::vector<cplx> amps;

    StateVector() = default;
    explicit StateVector(RegisterLayout l) : layout(std::move(l)), amps(layout.dim(), cplx{0.0, 0.0}) {}

    double norm2() const;
    bool normalized(double tol = kTol) const;
    StateVector normalized_copy() const;

    cplx& at_kxv(std::size_t k, std::size_t x, std::size_t v) { return amps[layout.kxv_index(k, x, v)]; }
    const cplx& at_kxv(std::size_t k, std::size_t x, std::size_t v) const { return amps[layout.kxv_index(k, x, v)]; }
};

// --- state-core operations (all pure) ---

StateVector prepare_extended(const RegisterLayout& layout, const VPreparation& vprep,
                             const PhaseAssignment& kphases = PhaseAssignment::uniform());

StateVector apply_oracle(const StateVector& state, const FunctionFamily& family);

StateVector apply_on_register(const StateVector& state, std::string_view reg_name, const Matrix& unitary);

std::map<std::string, double> measure_distribution(const StateVector& state, std::string_view reg_name);

StateVector collapse(const StateVector& state, std::string_view reg_name, const std::string& outcome);

// Born distribution of `target` within the branch `given` = `outcome`
std::map<std::string, double> conditional_distribution(const StateVector& state, std::string_view target,
                                                       std::string_view given, const std::string& outcome);

double entanglement_entropy(const StateVector& state, const std::set<std::string>& partition);

cplx overlap(const StateVector& a, const StateVector& b); // <a|b> after normalizing

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kTol);

} // namespace qsp
