#include <doctest.h>

#include <cmath>

#include "expected_states.hpp"
#include "qsp/algorithms.hpp"
#include "qsp/family.hpp"
#include "qsp/state.hpp"

using namespace qsp;

namespace {

bool close(const cplx& a, const cplx& b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// random family generator for the fuzz properties
FunctionFamily random_family(Rng& rng) {
    FunctionFamily fam;
    fam.name = "fuzz";
    fam.x_bits = 1 + static_cast<int>(rng.next_below(2));
    fam.v_bits = 1 + static_cast<int>(rng.next_below(2));
    fam.solution_bits = 1;
    const std::size_t rows = fam.rows();
    const std::size_t v_max = std::size_t{1} << fam.v_bits;
    const std::size_t distinct = std::size_t{1} << (rows * static_cast<std::size_t>(fam.v_bits));
    const std::size_t members = 1 + rng.next_below(std::min<std::size_t>(8, distinct));
    std::set<std::string> seen;
    while (fam.members.size() < members) {
        OracleFunction m;
        for (std::size_t x = 0; x < rows; ++x)
            m.table.push_back(static_cast<unsigned>(rng.next_below(v_max)));
        std::string label;
        for (unsigned v : m.table) label += to_bits(v, fam.v_bits);
        if (!seen.insert(label).second) continue;
        m.k_label = label;
        fam.members.push_back(std::move(m));
        fam.solutions.push_back(rng.next_below(2) ? "1" : "0");
    }
    return fam;
}

} // namespace

TEST_SUITE("state-core") {

TEST_CASE("prepare: locate n=2 layout gives 32 amplitudes +-1/(4 sqrt 2) signed by V") {
    const auto fam = builtin("grover2");
    const auto st = prepare_extended(fam.layout(), VPreparation::antisymmetric());
    const double c = 1.0 / (4.0 * std::sqrt(2.0));
    REQUIRE(st.amps.size() == 32);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(close(st.at_kxv(k, x, 0), c));
            CHECK(close(st.at_kxv(k, x, 1), -c));
        }
    CHECK(states_equal_up_to_phase(st, eq::grover_psi0()));
}

TEST_CASE("prepare: trivial single-register layout with symmetric V") {
    const auto layout = RegisterLayout::kxv({"only"}, 0, 1);
    const auto st = prepare_extended(layout, VPreparation::symmetric());
    REQUIRE(st.amps.size() == 2);
    CHECK(close(st.amps[0], 1.0 / std::sqrt(2.0)));
    CHECK(close(st.amps[1], 1.0 / std::sqrt(2.0)));
}

TEST_CASE("prepare: deutsch layout matches the displayed initial state") {
    const auto fam = builtin("deutsch");
    const auto st = prepare_extended(fam.layout(), VPreparation::antisymmetric());
    const auto expected = eq::deutsch_psi0();
    for (std::size_t i = 0; i < st.amps.size(); ++i) CHECK(close(st.amps[i], expected.amps[i]));
}

TEST_CASE("prepare: zero V preparation is rejected") {
    const auto fam = builtin("deutsch");
    try {
        prepare_extended(fam.layout(), VPreparation{0.0, 0.0});
        FAIL("expected a degenerate-preparation error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_preparation);
    }
}

TEST_CASE("oracle: deutsch evaluation stage") {
    const auto fam = builtin("deutsch");
    const auto psi1 = apply_oracle(eq::deutsch_psi0(), fam);
    const auto expected = eq::deutsch_psi1();
    for (std::size_t i = 0; i < psi1.amps.size(); ++i) CHECK(close(psi1.amps[i], expected.amps[i]));
}

TEST_CASE("oracle: a single constant-zero function leaves the state alone") {
    FunctionFamily fam;
    fam.name = "const0";
    fam.x_bits = 1;
    fam.v_bits = 1;
    fam.solution_bits = 1;
    fam.members.push_back({"00", {0, 0}});
    fam.solutions.push_back("0");
    const auto st = prepare_extended(fam.layout(), VPreparation::antisymmetric());
    const auto evolved = apply_oracle(st, fam);
    for (std::size_t i = 0; i < st.amps.size(); ++i) CHECK(close(st.amps[i], evolved.amps[i]));
}

TEST_CASE("oracle: locate n=2 evaluation stage") {
    const auto fam = builtin("grover2");
    const auto psi1 = apply_oracle(eq::grover_psi0(), fam);
    const auto expected = eq::grover_psi1();
    for (std::size_t i = 0; i < psi1.amps.size(); ++i) CHECK(close(psi1.amps[i], expected.amps[i]));
}

TEST_CASE("oracle: layout mismatch is a layout error") {
    const auto fam = builtin("deutsch");
    const auto st = prepare_extended(builtin("grover2").layout(), VPreparation::antisymmetric());
    CHECK_THROWS_AS(apply_oracle(st, fam), Error);
}

TEST_CASE("apply_on_register: the locate readout maps the evaluated state to the final one") {
    const auto u = Matrix::reflection_about_uniform(4);
    const auto psi2 = apply_on_register(eq::grover_psi1(), "X", u);
    CHECK(states_equal_up_to_phase(psi2, eq::grover_psi2()));
    for (std::size_t i = 0; i < psi2.amps.size(); ++i)
        CHECK(close(psi2.amps[i], eq::grover_psi2().amps[i]));
}

TEST_CASE("apply_on_register: identity changes nothing") {
    const auto st = eq::deutsch_psi1();
    const auto out = apply_on_register(st, "X", Matrix::identity(2));
    for (std::size_t i = 0; i < st.amps.size(); ++i) CHECK(close(st.amps[i], out.amps[i]));
}

TEST_CASE("apply_on_register: Hadamard on X finishes the deutsch run") {
    const auto out = apply_on_register(eq::deutsch_psi1(), "X", Matrix::hadamard_power(1));
    const auto expected = eq::deutsch_psi2();
    for (std::size_t i = 0; i < out.amps.size(); ++i) CHECK(close(out.amps[i], expected.amps[i]));
}

TEST_CASE("apply_on_register: non-unitary matrices are rejected") {
    Matrix m(2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 2.0;
    CHECK_THROWS_AS(apply_on_register(eq::deutsch_psi1(), "X", m), Error);
}

TEST_CASE("measure: K marginal of the locate final state is uniform") {
    const auto dist = measure_distribution(eq::grover_psi2(), "K");
    REQUIRE(dist.size() == 4);
    for (const auto& [label, p] : dist) CHECK(p == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("measure: a sharp state is a point mass") {
    const auto fam = builtin("grover2");
    StateVector st(fam.layout());
    st.at_kxv(0, 0, 0) = 1.0;
    const auto dist = measure_distribution(st, "X");
    CHECK(dist.at("00") == doctest::Approx(1.0));
    CHECK(dist.at("01") == doctest::Approx(0.0));
}

TEST_CASE("measure: period final state only supports strings orthogonal to the period") {
    const auto dist = conditional_distribution(eq::simon_psi2(), "X", "K", "0011");
    // h = 01, so X support is {00, 10}
    CHECK(dist.at("00") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(dist.at("10") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(dist.at("01") == doctest::Approx(0.0));
    CHECK(dist.at("11") == doctest::Approx(0.0));
}

TEST_CASE("measure: unnormalized states are rejected") {
    auto st = eq::deutsch_psi1();
    for (auto& a : st.amps) a *= 2.0;
    CHECK_THROWS_AS(measure_distribution(st, "K"), Error);
}

TEST_CASE("collapse: K outcome 01 of the locate final state leaves X sharp on 01") {
    const auto st = collapse(eq::grover_psi2(), "K", "01");
    const auto dist = measure_distribution(st, "X");
    CHECK(dist.at("01") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("collapse: idempotent on a sharp state") {
    const auto fam = builtin("grover2");
    StateVector st(fam.layout());
    st.at_kxv(2, 1, 0) = 1.0;
    const auto out = collapse(st, "K", "10");
    CHECK(states_equal_up_to_phase(st, out));
}

TEST_CASE("collapse: zero-probability outcomes are impossible") {
    const auto fam = builtin("grover2");
    StateVector st(fam.layout());
    st.at_kxv(0, 0, 0) = 1.0;
    CHECK_THROWS_AS(collapse(st, "K", "11"), Error);
}

TEST_CASE("collapse: reducing the period initial state on one k gives the single-oracle run") {
    const auto fam = builtin("simon2");
    const auto collapsed = collapse(eq::simon_psi0(), "K", "0011");
    auto st = apply_oracle(collapsed, fam);
    st = apply_on_register(st, "X", Matrix::hadamard_power(2));
    const auto dist = measure_distribution(st, "X");
    CHECK(dist.at("00") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(dist.at("10") == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("entropy: product states carry none") {
    const auto fam = builtin("deutsch");
    const auto st = prepare_extended(fam.layout(), VPreparation::antisymmetric());
    CHECK(entanglement_entropy(st, {"K"}) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("entropy: locate final state holds two bits between K and the rest") {
    CHECK(entanglement_entropy(eq::grover_psi2(), {"K"}) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("entropy: deutsch evaluated state holds one bit") {
    // two equal Schmidt coefficients across the K | XV split
    CHECK(entanglement_entropy(eq::deutsch_psi1(), {"K"}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("entropy: equal on a partition and its complement") {
    Rng rng(11);
    const auto fam = builtin("simon2");
    StateVector st(fam.layout());
    for (auto& a : st.amps) a = cplx{rng.next_unit() - 0.5, rng.next_unit() - 0.5};
    st = st.normalized_copy();
    const double a = entanglement_entropy(st, {"K"});
    const double b = entanglement_entropy(st, {"X", "V"});
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("entropy: improper partitions are rejected") {
    const auto st = eq::deutsch_psi1();
    CHECK_THROWS_AS(entanglement_entropy(st, {}), Error);
    CHECK_THROWS_AS(entanglement_entropy(st, {"K", "X", "V"}), Error);
    CHECK_THROWS_AS(entanglement_entropy(st, {"Q"}), Error);
}

TEST_CASE("equal up to phase: global phases are invisible, orthogonal states are not") {
    auto a = eq::deutsch_psi2();
    auto b = a;
    const cplx rot = std::polar(1.0, 3.14159 / 3.0);
    for (auto& amp : b.amps) amp *= rot;
    CHECK(states_equal_up_to_phase(a, b));

    const auto fam = builtin("deutsch");
    StateVector zero(fam.layout()), one(fam.layout());
    zero.at_kxv(0, 0, 0) = 1.0;
    one.at_kxv(0, 0, 1) = 1.0;
    CHECK_FALSE(states_equal_up_to_phase(zero, one));
}

TEST_CASE("property: evaluating twice is the identity and never changes the norm") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fam = random_family(rng);
        const auto st = prepare_extended(fam.layout(), VPreparation::antisymmetric());
        const auto once = apply_oracle(st, fam);
        const auto twice = apply_oracle(once, fam);
        CHECK(once.norm2() == doctest::Approx(1.0).epsilon(1e-9));
        for (std::size_t i = 0; i < st.amps.size(); ++i) REQUIRE(close(st.amps[i], twice.amps[i]));
    }
}

TEST_CASE("property: rotating X never moves the K or V marginals") {
    const auto fam = builtin("dj2");
    const auto st = apply_oracle(prepare_extended(fam.layout(), VPreparation::antisymmetric()), fam);
    const auto before_k = measure_distribution(st, "K");
    const auto before_v = measure_distribution(st, "V");
    const auto rotated = apply_on_register(st, "X", Matrix::hadamard_power(2));
    for (const auto& [label, p] : measure_distribution(rotated, "K"))
        CHECK(p == doctest::Approx(before_k.at(label)).epsilon(1e-9));
    for (const auto& [label, p] : measure_distribution(rotated, "V"))
        CHECK(p == doctest::Approx(before_v.at(label)).epsilon(1e-9));
}

TEST_CASE("property: random K phases never move the conditional X distributions") {
    Rng rng(7);
    for (const char* name : {"deutsch", "dj2", "grover2", "minute", "perm"}) {
        const auto fam = builtin(name);
        const auto readout = standard_readout(fam);
        const auto run = [&](const PhaseAssignment& phases) {
            auto st = prepare_extended(fam.layout(), canonical_vprep(fam), phases);
            st = apply_oracle(st, fam);
            return apply_on_register(st, "X", readout.matrix);
        };
        const auto base = run(PhaseAssignment::uniform());
        for (int trial = 0; trial < 3; ++trial) {
            const auto other = run(PhaseAssignment::random(fam.size(), rng));
            for (std::size_t k = 0; k < fam.size(); ++k) {
                const auto& label = fam.members[k].k_label;
                const auto a = conditional_distribution(base, "X", "K", label);
                const auto b = conditional_distribution(other, "X", "K", label);
                for (const auto& [x, p] : a) REQUIRE(p == doctest::Approx(b.at(x)).epsilon(1e-9));
            }
        }
    }
}

} // TEST_SUITE

