#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "diracabc/core_model.hpp"
#include "diracabc/quantization.hpp"

using namespace diracabc;
using Catch::Approx;

TEST_CASE("cyclotron frequency", "[core_model]") {
    CHECK(cyclotron_frequency({1.0, 1.0, 0.0, 0.0, 0.0}) == 0.0);
    CHECK(cyclotron_frequency({1.0, 1.0, 0.0, 0.0, 2.0}) == 2.0);
    CHECK(cyclotron_frequency({2.0, 0.5, 0.0, 0.0, 2.0}) == 0.5);
}

TEST_CASE("effective frequency rules", "[core_model]") {
    CHECK(effective_frequency(1.0, 1.0) == 0.5);
    CHECK(effective_frequency(0.5, 1.0) == 0.0); // resonance
    CHECK(effective_frequency(0.0, 0.8) == 0.8); // omega = 0 substitution
    CHECK_THROWS_AS(effective_frequency(0.4, 1.0), NegativeEffectiveFrequency);
}

TEST_CASE("effective frequency is affine on the omega > 0 branch", "[core_model]") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double wc = u(rng);
        const double w = 0.5 * wc + u(rng); // keeps omega_bar >= 0
        const double d = u(rng);
        CHECK(effective_frequency(w + d, wc) - effective_frequency(w, wc) == Approx(d).epsilon(1e-13));
        const double wc2 = wc * 0.5;
        CHECK(effective_frequency(w, wc2) - effective_frequency(w, wc) ==
              Approx(0.5 * (wc - wc2)).epsilon(1e-13));
    }
}

TEST_CASE("AB-Coulomb index gamma", "[core_model]") {
    SECTION("free case") {
        SystemParams p{1.0, 1.0, 0.0, 0.0, 0.0};
        CHECK(compute_gamma(p, 0.5) == 0.5);
    }
    SECTION("3-4-5 radicand") {
        // m_l + |e|phi = 0.5, Z|e|^2 = 0.3
        SystemParams p{1.0, 1.0, 0.3, 0.0, 0.0};
        CHECK(compute_gamma(p, 0.5) == Approx(0.4).epsilon(1e-15));
    }
    SECTION("critical boundary gives gamma = 0") {
        SystemParams p{1.0, 1.0, 0.5, 0.0, 0.0};
        CHECK(compute_gamma(p, 0.5) == 0.0);
    }
    SECTION("supercritical throws") {
        SystemParams p{1.0, 1.0, 0.6, 0.0, 0.0};
        CHECK_THROWS_AS(compute_gamma(p, 0.5), SupercriticalCoupling);
    }
    SECTION("as-printed compatibility form squares m_l") {
        SystemParams p{1.0, 1.0, 0.1, 0.0, 0.0};
        const double printed = compute_gamma(p, 0.5, GammaConvention::as_printed);
        CHECK(printed == Approx(std::sqrt(0.0625 - 0.01)).epsilon(1e-15));
        CHECK(printed != compute_gamma(p, 0.5));
    }
}

TEST_CASE("gamma satisfies its defining identity", "[core_model]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uml(-4.0, 4.0);
    std::uniform_real_distribution<double> ue(0.3, 1.5);
    std::uniform_real_distribution<double> uphi(-1.0, 1.0);
    std::uniform_real_distribution<double> ufrac(0.0, 0.95);
    for (int i = 0; i < 500; ++i) {
        const double ml = std::floor(uml(rng)) + 0.5;
        SystemParams p;
        p.e_abs = ue(rng);
        p.phi_ab = uphi(rng);
        const double base = ml + p.flux_coupling();
        const double c = ufrac(rng) * std::fabs(base);
        p.Z = c / (p.e_abs * p.e_abs);
        const double g = compute_gamma(p, ml);
        CHECK(g * g + c * c == Approx(base * base).epsilon(1e-12).margin(1e-14));
    }
}

TEST_CASE("kappa", "[core_model]") {
    CHECK(kappa(1, 0.5, +1, 0.5, 0.0) == 1.0);
    // direct substitution: 2 + 0.5 + 1 - (-1) - 0.5 - 0
    CHECK(kappa(2, 0.5, -1, 0.5, 0.0) == 4.0);
    const double g = std::sqrt(0.25 - 0.01); // Z|e|^2 = 0.1
    CHECK(kappa(1, g, +1, 0.5, 0.0) == Approx(0.989897948556636).epsilon(1e-12));
}

TEST_CASE("kappa increments by one in n", "[core_model]") {
    // bitwise for exactly representable inputs
    for (int n : {1, 2, 5, 17})
        CHECK(kappa(n + 1, 0.5, +1, 1.5, 0.25) - kappa(n, 0.5, +1, 1.5, 0.25) == 1.0);
    // ulp-scale for irrational gamma
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double g = u(rng), ml = std::floor(u(rng)) + 0.5, ephi = u(rng) - 1.5;
        const int n = 1 + static_cast<int>(u(rng));
        const int s = i % 2 == 0 ? 1 : -1;
        CHECK(kappa(n + 1, g, s, ml, ephi) - kappa(n, g, s, ml, ephi) ==
              Approx(1.0).margin(1e-13));
    }
}

TEST_CASE("quantum number validation", "[core_model]") {
    CHECK_THROWS_AS((QuantumNumbers{0, 0.5, 1, 1}.validate()), ValidationError);
    CHECK_THROWS_AS((QuantumNumbers{1, 0.4, 1, 1}.validate()), ValidationError);
    CHECK_THROWS_AS((QuantumNumbers{1, 1.0, 1, 1}.validate()), ValidationError);
    CHECK_THROWS_AS((QuantumNumbers{1, 0.5, 2, 1}.validate()), ValidationError);
    CHECK_THROWS_AS((QuantumNumbers{1, 0.5, 1, 0}.validate()), ValidationError);
    CHECK_NOTHROW((QuantumNumbers{3, -2.5, -1, -1}.validate()));
}

TEST_CASE("params validation", "[core_model]") {
    SystemParams bad;
    bad.m0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    SystemParams neg;
    neg.B = -1.0;
    CHECK_THROWS_AS(neg.validate(), ValidationError);
    SystemParams slow; // omega below omega_c/2
    slow.B = 2.0;
    slow.omega = 0.5;
    CHECK_THROWS_AS(slow.validate(), NegativeEffectiveFrequency);
}

TEST_CASE("branch flip negates energy, preserves frequencies, flips a_bar", "[core_model]") {
    SystemParams p{1.0, 1.0, 0.1, 0.2, 0.5};
    for (int n : {1, 2, 3}) {
        SolutionSet plus = solve(SpectrumRequest{p, {n, 0.5, +1, +1}, 1e-12});
        SolutionSet minus = solve(SpectrumRequest{p, {n, 0.5, +1, -1}, 1e-12});
        REQUIRE(plus.states.size() == minus.states.size());
        for (std::size_t i = 0; i < plus.states.size(); ++i) {
            const auto& a = plus.states[i];
            const auto& b = minus.states[i];
            CHECK(a.energy == Approx(-b.energy).epsilon(1e-13));
            CHECK(a.omega == Approx(b.omega).epsilon(1e-13));
            CHECK(a.omega_bar == Approx(b.omega_bar).epsilon(1e-13));
            CHECK(a.a_bar_root == Approx(-b.a_bar_root).epsilon(1e-13));
            CHECK(a.derived.gamma == b.derived.gamma);
            CHECK(a.derived.kappa == b.derived.kappa);
        }
    }
}

TEST_CASE("derived quantities are mutually consistent on solved states", "[core_model]") {
    SystemParams p{1.0, 1.0, 0.1, 0.0, 0.3};
    const auto set = solve_ground_state(p, 0.5, +1);
    for (const auto& st : set.states) {
        CHECK(st.derived.delta_s == Approx(2.0 * st.derived.gamma + 1.0 - st.qn.s));
        CHECK(st.derived.eps_s == Approx(2.0 * st.qn.n).margin(1e-10));
        CHECK(st.omega == Approx(st.omega_bar + 0.5 * st.derived.omega_c).epsilon(1e-14));
        CHECK(st.energy * st.energy >= p.m0 * p.m0); // omega_bar * kappa >= 0 here
    }
}
