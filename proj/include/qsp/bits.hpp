#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsp/error.hpp"

namespace qsp {

// Bit strings are written MSB first: to_bits(2, 3) == "010".
inline std::string to_bits(std::size_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = width - 1; i >= 0; --i) {
        if (value & 1u) s[static_cast<std::size_t>(i)] = '1';
        value >>= 1;
    }
    return s;
}

inline std::size_t parse_bits(const std::string& s) {
    std::size_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw Error(Errc::parse, "invalid bit string '" + s + "'");
        v = (v << 1) | static_cast<std::size_t>(c - '0');
    }
    return v;
}

inline bool is_bit_string(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

// mod-2 inner product of two equally wide bit strings
inline unsigned dot2(const std::string& a, const std::string& b) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= static_cast<unsigned>((a[i] - '0') & (b[i] - '0'));
    return acc;
}

inline std::string xor_bits(const std::string& a, const std::string& b) {
    std::string r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<char>('0' + ((a[i] - '0') ^ (b[i] - '0')));
    return r;
}

// Deterministic random source. Only the mt19937_64 stream (which the standard
// pins down exactly) is consumed, so identical seeds give identical output on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1) with 53 random bits
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    std::size_t next_below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    double next_angle() { return next_unit() * 6.283185307179586476925286766559; }

    // sample an index from an unnormalized nonnegative weight vector
    std::size_t sample(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double r = next_unit() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (r < acc) return i;
        }
        return weights.size() - 1;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace qsp
