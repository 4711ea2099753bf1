#include <doctest.h>

#include <cmath>

#include "expected_states.hpp"
#include "qsp/algorithms.hpp"
#include "qsp/histories.hpp"

using namespace qsp;

namespace {

const History* find_history(const HistoryBundle& bundle, const std::string& k, std::size_t x, std::size_t v) {
    for (const auto& h : bundle.histories)
        if (h.k_label == k && h.x_query == x && h.v_initial == v) return &h;
    return nullptr;
}

} // namespace

TEST_SUITE("histories") {

TEST_CASE("deutsch enumeration: the eight table rows, split in two V sub-histories each") {
    const auto fam = builtin("deutsch");
    const auto bundle = enumerate_histories(fam, HalfMode::row_half);
    CHECK(bundle.histories.size() == 16);

    // row #1: advanced f(0)=0, computed f(1)=0, member 00
    const auto* h11 = find_history(bundle, "00", 1, 0);
    REQUIRE(h11);
    CHECK(h11->advanced->positions == std::vector<std::size_t>{0});
    CHECK(h11->advanced->values == std::vector<unsigned>{0});
    CHECK(h11->result == 0);
    const auto* h12 = find_history(bundle, "00", 1, 1);
    REQUIRE(h12);

    // every (k, x) pair appears with both V contents
    for (const std::string k : {"00", "01", "10", "11"})
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t v = 0; v < 2; ++v) CHECK(find_history(bundle, k, x, v));
}

TEST_CASE("deutsch enumeration: each (advanced, computed) pair is consistent with exactly one member") {
    const auto fam = builtin("deutsch");
    const auto bundle = enumerate_histories(fam, HalfMode::row_half);
    for (const auto& h : bundle.histories) {
        int consistent = 0;
        for (std::size_t k = 0; k < fam.size(); ++k) {
            if (!h.advanced->consistent_with(fam, k)) continue;
            if (fam.f(k, h.x_query) != h.result) continue;
            ++consistent;
            CHECK(fam.members[k].k_label == h.k_label);
        }
        CHECK(consistent == 1);
    }
}

TEST_CASE("single-member family: histories all carry that label") {
    FunctionFamily fam;
    fam.name = "single";
    fam.x_bits = 1;
    fam.v_bits = 1;
    fam.solution_bits = 1;
    fam.members.push_back({"01", {0, 1}});
    fam.solutions.push_back("1");
    const auto bundle = enumerate_histories(fam, HalfMode::row_half);
    REQUIRE(!bundle.histories.empty());
    for (const auto& h : bundle.histories) CHECK(h.k_label == "01");
}

TEST_CASE("dj2 enumeration: no history starts from a half with two differing values") {
    const auto bundle = enumerate_histories(builtin("dj2"), HalfMode::row_half);
    REQUIRE(!bundle.histories.empty());
    for (const auto& h : bundle.histories) CHECK(h.advanced->values[0] == h.advanced->values[1]);
}

TEST_CASE("enumeration rejects families needing more than one query") {
    try {
        enumerate_histories(builtin("grover4"), HalfMode::bit_half);
        FAIL("expected an unsupported-depth error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_depth);
    }
}

TEST_CASE("phases: antisymmetric preparation alternates the V sub-histories") {
    const auto fam = builtin("deutsch");
    const auto bundle = assign_phases(enumerate_histories(fam, HalfMode::row_half), VPreparation::antisymmetric());
    const auto* h11 = find_history(bundle, "00", 1, 0);
    const auto* h12 = find_history(bundle, "00", 1, 1);
    REQUIRE(h11);
    REQUIRE(h12);
    CHECK(std::abs(h11->phase - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(h12->phase - cplx{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("phases: symmetric preparation weights every history alike; generic gives alpha +- beta") {
    const auto fam = builtin("deutsch");
    const auto base = enumerate_histories(fam, HalfMode::row_half);
    for (const auto& h : assign_phases(base, VPreparation::symmetric()).histories)
        CHECK(std::abs(h.phase - cplx{1.0, 0.0}) < 1e-12);
    const VPreparation generic{0.3, 0.4};
    for (const auto& h : assign_phases(base, generic).histories)
        CHECK(std::abs(h.phase - (h.v_initial == 0 ? cplx{0.7, 0.0} : cplx{-0.1, 0.0})) < 1e-12);
}

TEST_CASE("sum: the sixteen deutsch histories rebuild the initial and evaluated states") {
    const auto fam = builtin("deutsch");
    const auto bundle = assign_phases(enumerate_histories(fam, HalfMode::row_half), VPreparation::antisymmetric());
    CHECK(states_equal_up_to_phase(sum_histories(bundle, Stage::initial), eq::deutsch_psi0()));
    CHECK(states_equal_up_to_phase(sum_histories(bundle, Stage::after_evaluation), eq::deutsch_psi1()));
}

TEST_CASE("sum: zero preparation cancels") {
    const auto fam = builtin("deutsch");
    const auto bundle = assign_phases(enumerate_histories(fam, HalfMode::row_half), VPreparation{0.0, 0.0});
    CHECK_THROWS_AS(sum_histories(bundle, Stage::initial), Error);
}

TEST_CASE("shortcut: covers every (k, x, v) triple and rebuilds the deutsch evaluation") {
    const auto fam = builtin("deutsch");
    const auto bundle = shortcut_bundle(fam, VPreparation::antisymmetric());
    CHECK(bundle.histories.size() == 16);
    CHECK(states_equal_up_to_phase(sum_histories(bundle, Stage::after_evaluation), eq::deutsch_psi1()));
}

TEST_CASE("shortcut: locate n=2 and dj2 sums match the displayed evaluated states") {
    CHECK(states_equal_up_to_phase(
        sum_histories(shortcut_bundle(builtin("grover2"), VPreparation::antisymmetric()), Stage::after_evaluation),
        eq::grover_psi1()));
    CHECK(states_equal_up_to_phase(
        sum_histories(shortcut_bundle(builtin("dj2"), VPreparation::antisymmetric()), Stage::after_evaluation),
        eq::dj2_psi1()));
}

TEST_CASE("property: shortcut sums equal the oracle evolution for every catalogued family") {
    for (const char* name :
         {"deutsch", "dj2", "dj3", "bv2", "bv3", "simon2", "simon3", "grover2", "grover3", "grover4", "minute", "perm"}) {
        const auto fam = builtin(name);
        const auto vprep = canonical_vprep(fam);
        const auto bundle = shortcut_bundle(fam, vprep);
        const auto direct = apply_oracle(prepare_extended(fam.layout(), vprep), fam);
        REQUIRE(states_equal_up_to_phase(sum_histories(bundle, Stage::after_evaluation), direct));
        REQUIRE(states_equal_up_to_phase(sum_histories(bundle, Stage::initial),
                                         prepare_extended(fam.layout(), vprep)));
    }
}

// The sweep landscape, pinned against the closed forms. For deutsch in the
// symmetric/antisymmetric sweep the K eigenvalues are (cos^2 t, sin^2 t / 2
// twice), so S(t) = h(sin^2 t) + sin^2 t with the maximum log2(3) at
// sin^2 t = 2/3, while the antisymmetric point t = 90 sits at exactly 1 bit.
TEST_CASE("sweep: deutsch landscape closed forms") {
    const auto fam = builtin("deutsch");
    CHECK(entanglement_after_evaluation(fam, VSweep::symmetric_antisymmetric, 0.0) ==
          doctest::Approx(0.0).epsilon(1e-9)); // factorizable: the computation gets lost
    CHECK(entanglement_after_evaluation(fam, VSweep::symmetric_antisymmetric, 90.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(entanglement_after_evaluation(fam, VSweep::symmetric_antisymmetric, 45.0) ==
          doctest::Approx(1.5).epsilon(1e-9));
    const auto best = find_entanglement_maximum(fam, VSweep::symmetric_antisymmetric);
    CHECK(best.entropy == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    const double t = best.theta_degrees * 3.14159265358979323846 / 180.0;
    CHECK(std::sin(t) * std::sin(t) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

// For simon2 in the computational sweep the K eigenvalues are ((1+u)/2 and
// (1-u)/6 three times) with u = sin 2t: S is largest (2 bits exactly) at
// u = -1/2, while the antisymmetric point t = 135 gives log2(3).
TEST_CASE("sweep: simon2 landscape closed forms") {
    const auto fam = builtin("simon2");
    CHECK(entanglement_after_evaluation(fam, VSweep::computational, 135.0) ==
          doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    CHECK(entanglement_after_evaluation(fam, VSweep::computational, 105.0) ==
          doctest::Approx(2.0).epsilon(1e-9));
    const auto best = find_entanglement_maximum(fam, VSweep::computational);
    CHECK(best.entropy == doctest::Approx(2.0).epsilon(1e-9));
}

} // TEST_SUITE
