#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "diracabc/polynomial.hpp"
#include "diracabc/quantization.hpp"
#include "diracabc/wavefunction.hpp"

using namespace diracabc;
using Catch::Approx;

namespace {

const SystemParams running{1.0, 1.0, 0.1, 0.0, 0.0};

BoundState solved(int n, double ml, int s, int branch, const SystemParams& p = running) {
    return solve(SpectrumRequest{p, {n, ml, s, branch}, 1e-12}).states.front();
}

double peak_by_scan(const RadialFunction& rf, double x_max = 8.0, int pts = 4000) {
    double peak = 0.0;
    for (int i = 1; i <= pts; ++i)
        peak = std::max(peak, std::fabs(radial_value(rf, x_max * i / pts)));
    return peak;
}

} // namespace

TEST_CASE("profile construction guards", "[wavefunction]") {
    SECTION("resonance states have no profile") {
        SystemParams p{1.0, 1.0, 0.0, 0.0, 1.0};
        const auto st = solve_ground_state(p, 0.5, +1).states.front();
        CHECK_THROWS_AS(make_radial_function(st), DegenerateCondition);
    }
    SECTION("exponent and polynomial come from the state") {
        const auto st = solved(1, 0.5, +1, +1);
        const auto rf = make_radial_function(st);
        CHECK(rf.exponent == Approx(st.derived.gamma)); // s = +1
        REQUIRE(rf.poly.size() == 2);
        const auto stm = solved(1, 0.5, -1, +1);
        CHECK(make_radial_function(stm).exponent == Approx(stm.derived.gamma + 1.0));
    }
}

TEST_CASE("radial values", "[wavefunction]") {
    const auto rf = make_radial_function(solved(1, 0.5, +1, +1));
    SECTION("boundary value at the origin") { CHECK(radial_value(rf, 0.0) == 0.0); }
    SECTION("single node of the positive-branch linear factor at delta/a_bar") {
        const double a_bar = rf.state.a_bar_root;
        REQUIRE(a_bar > 0.0);
        const double node = rf.state.derived.delta_s / a_bar;
        CHECK(radial_value(rf, node) == Approx(0.0).margin(1e-14));
        CHECK(radial_value(rf, 0.9 * node) * radial_value(rf, 1.1 * node) < 0.0);
    }
    SECTION("Gaussian decay dominates by x = 5") {
        // the nodeless negative-branch profile sits below 1e-4 of its peak there
        const auto rfm = make_radial_function(solved(1, 0.5, +1, -1));
        CHECK(std::fabs(radial_value(rfm, 5.0)) < 1e-4 * peak_by_scan(rfm));
        // the positive branch has its node pushing weight outward; still < 2e-4
        CHECK(std::fabs(radial_value(rf, 5.0)) < 2e-4 * peak_by_scan(rf));
    }
}

TEST_CASE("normalization", "[wavefunction]") {
    SECTION("gamma-function oracle for the pure power profile") {
        // phi = C x^g e^{-x^2/2}: C^2 = 2 / Gamma(g + 1/2)
        auto st = solved(1, 0.5, +1, +1);
        const double g = 0.75;
        st.derived.gamma = g;
        RadialFunction rf{st, g, {1.0}, 1.0};
        const auto nrm = normalize(rf, 1e-12);
        CHECK(nrm.norm_const * nrm.norm_const ==
              Approx(2.0 / std::tgamma(g + 0.5)).epsilon(1e-10));
    }
    SECTION("idempotence and round trip") {
        auto rf = normalize(make_radial_function(solved(1, 0.5, +1, +1)), 1e-11);
        const auto again = normalize(rf, 1e-11);
        CHECK(again.norm_const == Approx(rf.norm_const).epsilon(1e-10));
        const double integral = integrate_adaptive(
            [&rf](double x) {
                const double v = radial_value(rf, x);
                return v * v;
            },
            0.0, profile_x_max(rf), 1e-12);
        CHECK(integral == Approx(1.0).epsilon(1e-9));
    }
    SECTION("rho-space prefactor") {
        CHECK(rho_norm_prefactor(1.0, 0.016) == Approx(std::pow(0.016, 0.25)));
    }
}

TEST_CASE("node counting", "[wavefunction]") {
    SECTION("n = 1") {
        CHECK(count_nodes(make_radial_function(solved(1, 0.5, +1, +1)), 20.0) == 1);
        CHECK(count_nodes(make_radial_function(solved(1, 0.5, +1, -1)), 20.0) == 0);
    }
    SECTION("n = 2 solved states have 2 or 0 positive roots") {
        CHECK(count_nodes(make_radial_function(solved(2, 0.5, +1, +1)), 20.0) == 2);
        CHECK(count_nodes(make_radial_function(solved(2, 0.5, +1, -1)), 20.0) == 0);
    }
    SECTION("n = 3: the two admissible roots carry different node counts") {
        const auto set = solve_general(running, {3, 0.5, +1, +1}, 1e-12);
        REQUIRE(set.states.size() == 2);
        CHECK(count_nodes(make_radial_function(set.states[0]), 20.0) == 3);
        CHECK(count_nodes(make_radial_function(set.states[1]), 20.0) == 2);
    }
    SECTION("quadratic with a single positive crossing") {
        auto st = solved(1, 0.5, +1, +1);
        RadialFunction rf{st, 1.0, {-1.0, 0.0, 1.0}, 1.0}; // x^2 - 1
        CHECK(count_nodes(rf, 10.0) == 1);
    }
}

TEST_CASE("ODE residual", "[wavefunction]") {
    SECTION("exact n = 1 state near x = 1") {
        const auto rf = normalize(make_radial_function(solved(1, 0.5, +1, +1)), 1e-10);
        const double peak = peak_by_scan(rf);
        CHECK(ode_residual(rf, 1.0, 1e-3) <= 1e-8 * peak);
    }
    SECTION("one-percent detuning of a_bar is visible by orders of magnitude") {
        auto st = solved(1, 0.5, +1, +1);
        const auto exact = normalize(make_radial_function(st), 1e-10);
        BoundState bad = st;
        bad.a_bar_root *= 1.01;
        bad.heun_coeffs =
            coefficients(HeunParams(bad.a_bar_root, bad.derived.delta_s, 2.0), 1).coeffs;
        auto perturbed = make_radial_function(bad);
        perturbed.norm_const = exact.norm_const;
        CHECK(ode_residual(perturbed, 1.0, 1e-3) > 100.0 * ode_residual(exact, 1.0, 1e-3));
    }
    SECTION("exact n = 2 state across a grid") {
        const auto rf = normalize(make_radial_function(solved(2, 0.5, +1, +1)), 1e-10);
        const double peak = peak_by_scan(rf);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = 0.1 + (6.0 - 0.1) * i / 99.0;
            worst = std::max(worst, ode_residual(rf, x, 5e-4));
        }
        CHECK(worst <= 1e-7 * peak);
    }
    SECTION("stencil preconditions") {
        const auto rf = make_radial_function(solved(1, 0.5, +1, +1));
        CHECK_THROWS_AS(ode_residual(rf, 1e-3, 1e-3), ValidationError);
    }
}

TEST_CASE("substitution chain: the polynomial factor solves the Heun equation",
          "[wavefunction]") {
    // f'' + (delta/x - 2x) f' + (eps + a_bar/x) f must vanish for the solved
    // polynomial; the radial residual of phi must vanish at the same points.
    for (int n : {1, 2}) {
        const auto st = solved(n, 0.5, +1, +1);
        const auto rf = normalize(make_radial_function(st), 1e-10);
        const auto d1 = poly::derivative(rf.poly);
        const auto d2 = poly::derivative(d1);
        const double delta = st.derived.delta_s;
        const double a_bar = st.a_bar_root;
        const double eps = 2.0 * n;
        double scale = 0.0;
        for (double c : rf.poly) scale = std::max(scale, std::fabs(c));
        for (double x : {0.4, 1.1, 2.6}) {
            const double bhe = poly::eval(d2, x) +
                               (delta / x - 2.0 * x) * poly::eval(d1, x) +
                               (eps + a_bar / x) * poly::eval(rf.poly, x);
            CHECK(std::fabs(bhe) <= 1e-12 * scale * (1.0 + x * x));
            CHECK(ode_residual(rf, x, 1e-3) <= 1e-7);
        }
    }
}

TEST_CASE("x-space profile is untouched by the magnetic field for n = 1, 2",
          "[wavefunction]") {
    // B shifts omega by omega_c/2 but gamma, delta, a_bar and omega_bar stay
    // put, so the dimensionless profile and its norm are identical
    for (int n : {1, 2}) {
        SystemParams with_b = running;
        with_b.B = 2.0;
        const auto a = normalize(make_radial_function(solved(n, 0.5, +1, +1)), 1e-11);
        const auto b =
            normalize(make_radial_function(solved(n, 0.5, +1, +1, with_b)), 1e-11);
        CHECK(a.norm_const == Approx(b.norm_const).epsilon(1e-13));
        for (double x : {0.3, 1.0, 2.5})
            CHECK(radial_value(a, x) == Approx(radial_value(b, x)).epsilon(1e-13));
    }
}

TEST_CASE("critical exponent is rejected at profile construction", "[wavefunction]") {
    auto st = solved(1, 0.5, +1, +1);
    st.derived.gamma = 0.0; // gamma = 0 with s = +1: exponent collapses to 0
    st.heun_coeffs = {1.0, -1.0};
    CHECK_THROWS_AS(make_radial_function(st), CriticalExponent);
}

TEST_CASE("boundary behavior of solved profiles", "[wavefunction]") {
    // exponent > 1 here, so the x -> 0 suppression is strong
    const auto rf = normalize(make_radial_function(solved(1, 1.5, +1, +1)), 1e-10);
    const double peak = peak_by_scan(rf);
    CHECK(std::fabs(radial_value(rf, 1e-6)) < 1e-3 * peak);
    CHECK(std::fabs(radial_value(rf, 20.0)) < 1e-12 * peak);
}

TEST_CASE("profile CSV export", "[wavefunction]") {
    const auto rf = normalize(make_radial_function(solved(1, 0.5, +1, +1)), 1e-10);
    const std::string csv = profile_csv(rf, 6.0, 5);
    CHECK(csv.rfind("x,phi,phi_squared\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv.find("\n0,0,0\n") != std::string::npos); // boundary row
}

TEST_CASE("quadrature failure surfaces as the documented error", "[wavefunction]") {
    // integrable interior singularity at a non-dyadic point: every sample is
    // finite but the depth cap cannot localize it at this tolerance
    const double c = 0.3141592653589793;
    CHECK_THROWS_AS(
        integrate_adaptive([c](double x) { return 1.0 / std::sqrt(std::fabs(x - c)); }, 0.0, 1.0,
                           1e-12, 24),
        QuadratureFailure);
}
