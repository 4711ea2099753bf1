#pragma once

// Hand-transcribed final states of the four catalogued constructions, used as
// fixed expectations. Amplitudes are written out from the displayed sign
// patterns, independently of the simulator's evolution path.

#include <bit>
#include <cmath>

#include "qsp/family.hpp"
#include "qsp/state.hpp"

namespace eq {

using qsp::cplx;
using qsp::StateVector;

inline double vsign(std::size_t v) { return v == 0 ? 1.0 : -1.0; }

// ---- locate, n = 2 (K = 4, X = 4, V = 1 qubit) ----

inline StateVector grover_psi0() {
    const auto fam = qsp::builtin("grover2");
    StateVector st(fam.layout());
    const double c = 1.0 / (4.0 * std::sqrt(2.0));
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t v = 0; v < 2; ++v) st.at_kxv(k, x, v) = c * vsign(v);
    return st;
}

inline StateVector grover_psi1() {
    const auto fam = qsp::builtin("grover2");
    StateVector st(fam.layout());
    const double c = 1.0 / (4.0 * std::sqrt(2.0));
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t v = 0; v < 2; ++v) st.at_kxv(k, x, v) = c * (x == k ? -1.0 : 1.0) * vsign(v);
    return st;
}

inline StateVector grover_psi2() {
    const auto fam = qsp::builtin("grover2");
    StateVector st(fam.layout());
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t v = 0; v < 2; ++v) st.at_kxv(k, k, v) = c * vsign(v);
    return st;
}

// ---- balanced vs constant, 1 bit (K = 4, X = 2, V = 1 qubit) ----

inline StateVector deutsch_psi0() {
    const auto fam = qsp::builtin("deutsch");
    StateVector st(fam.layout());
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t v = 0; v < 2; ++v) st.at_kxv(k, x, v) = 0.25 * vsign(v);
    return st;
}

inline StateVector deutsch_psi1() {
    const auto fam = qsp::builtin("deutsch");
    StateVector st(fam.layout());
    // (|00>-|11>)(|0>+|1>) + (|01>-|10>)(|0>-|1>), V antisymmetric
    const auto coeff = [&](const std::string& k, std::size_t x) -> double {
        if (k == "00") return 1.0;
        if (k == "11") return -1.0;
        if (k == "01") return x == 0 ? 1.0 : -1.0;
        return x == 0 ? -1.0 : 1.0; // k = 10
    };
    for (const std::string k : {"00", "01", "10", "11"})
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t v = 0; v < 2; ++v)
                st.at_kxv(fam.index_of(k), x, v) = 0.25 * coeff(k, x) * vsign(v);
    return st;
}

inline StateVector deutsch_psi2() {
    const auto fam = qsp::builtin("deutsch");
    StateVector st(fam.layout());
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    // (|00>-|11>)|0> + (|01>-|10>)|1>
    const auto put = [&](const std::string& k, std::size_t x, double sign) {
        for (std::size_t v = 0; v < 2; ++v) st.at_kxv(fam.index_of(k), x, v) = c * sign * vsign(v);
    };
    put("00", 0, 1.0);
    put("11", 0, -1.0);
    put("01", 1, 1.0);
    put("10", 1, -1.0);
    return st;
}

// ---- balanced vs constant, 2 bits (K = 8, X = 4, V = 1 qubit) ----

struct DjColumn {
    const char* k;
    double sign;          // + on the first member of each displayed pair
    int pattern[4];       // X sign pattern of the pair, +1 / -1
    const char* target;   // X string after Hadamard
};

inline const DjColumn* dj_columns() {
    static const DjColumn cols[8] = {
        {"0000", 1.0, {1, 1, 1, 1}, "00"},   {"1111", -1.0, {1, 1, 1, 1}, "00"},
        {"0011", 1.0, {1, 1, -1, -1}, "10"}, {"1100", -1.0, {1, 1, -1, -1}, "10"},
        {"0101", 1.0, {1, -1, 1, -1}, "01"}, {"1010", -1.0, {1, -1, 1, -1}, "01"},
        {"0110", 1.0, {1, -1, -1, 1}, "11"}, {"1001", -1.0, {1, -1, -1, 1}, "11"},
    };
    return cols;
}

inline StateVector dj2_psi0() {
    const auto fam = qsp::builtin("dj2");
    StateVector st(fam.layout());
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t v = 0; v < 2; ++v) st.at_kxv(k, x, v) = 0.125 * vsign(v);
    return st;
}

inline StateVector dj2_psi1() {
    const auto fam = qsp::builtin("dj2");
    StateVector st(fam.layout());
    for (int c = 0; c < 8; ++c) {
        const auto& col = dj_columns()[c];
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t v = 0; v < 2; ++v)
                st.at_kxv(fam.index_of(col.k), x, v) = 0.125 * col.sign * col.pattern[x] * vsign(v);
    }
    return st;
}

inline StateVector dj2_psi2() {
    const auto fam = qsp::builtin("dj2");
    StateVector st(fam.layout());
    for (int c = 0; c < 8; ++c) {
        const auto& col = dj_columns()[c];
        const std::size_t x = qsp::parse_bits(col.target);
        for (std::size_t v = 0; v < 2; ++v)
            st.at_kxv(fam.index_of(col.k), x, v) = 0.25 * col.sign * vsign(v);
    }
    return st;
}

// ---- period, n = 2 (K = 6, X = 4, V = 1 bit, prepared all zeroes) ----

struct SimonColumn {
    const char* k;
    unsigned table[4];
};

inline const SimonColumn* simon_columns() {
    static const SimonColumn cols[6] = {
        {"0011", {0, 0, 1, 1}}, {"1100", {1, 1, 0, 0}}, {"0101", {0, 1, 0, 1}},
        {"1010", {1, 0, 1, 0}}, {"0110", {0, 1, 1, 0}}, {"1001", {1, 0, 0, 1}},
    };
    return cols;
}

inline StateVector simon_psi0() {
    const auto fam = qsp::builtin("simon2");
    StateVector st(fam.layout());
    const double c = 1.0 / (2.0 * std::sqrt(6.0));
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t x = 0; x < 4; ++x) st.at_kxv(k, x, 0) = c;
    return st;
}

inline StateVector simon_psi1() {
    const auto fam = qsp::builtin("simon2");
    StateVector st(fam.layout());
    const double c = 1.0 / (2.0 * std::sqrt(6.0));
    for (int i = 0; i < 6; ++i) {
        const auto& col = simon_columns()[i];
        for (std::size_t x = 0; x < 4; ++x) st.at_kxv(fam.index_of(col.k), x, col.table[x]) = c;
    }
    return st;
}

inline StateVector simon_psi2() {
    const auto fam = qsp::builtin("simon2");
    StateVector st(fam.layout());
    const double c = 1.0 / (4.0 * std::sqrt(6.0));
    // Hadamard on X turns each value class {x : f_k(x) = v} into its
    // character sum: amp(k, s, v) = sum over that class of (-1)^(s.x)
    for (int i = 0; i < 6; ++i) {
        const auto& col = simon_columns()[i];
        for (std::size_t s = 0; s < 4; ++s)
            for (unsigned v = 0; v < 2; ++v) {
                double acc = 0.0;
                for (std::size_t x = 0; x < 4; ++x)
                    if (col.table[x] == v) acc += (std::popcount(s & x) & 1) ? -1.0 : 1.0;
                st.at_kxv(fam.index_of(col.k), s, v) = c * acc;
            }
    }
    return st;
}

} // namespace eq
