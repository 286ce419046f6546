#include <doctest.h>

#include <cmath>

#include "galdec/config.hpp"
#include "galdec/config_file.hpp"

using namespace galdec;

namespace {
const GalileanConfig kSgConfig{PLANCK_H, 2.5e-13, 5.0e-17, 0.5235};
constexpr double kPointerMass = 1.79e-17;
constexpr double kAtomMass = 1.79e-25;
}  // namespace

TEST_CASE("derived quantities reproduce the published pointer scales") {
    const DerivedQuantities q = derive_quantities(kSgConfig, kPointerMass);
    CHECK(q.tau == doctest::Approx(5.235e-3).epsilon(5e-4));
    CHECK(q.sigma_x == doctest::Approx(3.618e-8).epsilon(5e-4));
    CHECK(q.sigma_u == doctest::Approx(5.116e-10).epsilon(5e-4));
}

TEST_CASE("SI hbar gives the 2-pi-shifted timescale") {
    GalileanConfig cfg = kSgConfig;
    cfg.hbar = HBAR_SI;
    const DerivedQuantities q = derive_quantities(cfg, kPointerMass);
    // tau = hbar / (2 m sqrt(alpha beta)), independently:
    const double expected = HBAR_SI / (2.0 * kPointerMass * std::sqrt(cfg.alpha * cfg.beta));
    CHECK(q.tau == doctest::Approx(expected).epsilon(1e-14));
    CHECK(q.tau == doctest::Approx(8.33e-4).epsilon(1e-3));
    CHECK(derive_quantities(kSgConfig, kPointerMass).tau / q.tau ==
          doctest::Approx(PLANCK_H / HBAR_SI).epsilon(1e-14));
}

TEST_CASE("uncertainty product and m_sf invariants") {
    for (double mass : {kAtomMass, kPointerMass, 1.0}) {
        for (double dt : {1e-4, 5.235e-3, 0.5235, 3.0}) {
            const DerivedQuantities q = derive_quantities(kSgConfig, mass, dt);
            CHECK(q.sigma_x * mass * q.sigma_u ==
                  doctest::Approx(kSgConfig.hbar / 2.0).epsilon(1e-12));
        }
        const DerivedQuantities at_tau =
            derive_quantities(kSgConfig, mass, derive_quantities(kSgConfig, mass, 1.0).tau);
        CHECK(at_tau.m_sf == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("damping widths decrease in duration and mass") {
    double prev_eta = 1e300, prev_mu = 1e300;
    for (double dt : {1e-3, 1e-2, 1e-1, 1.0}) {
        const DerivedQuantities q = derive_quantities(kSgConfig, kPointerMass, dt);
        CHECK(q.delta_eta < prev_eta);
        CHECK(q.delta_mu < prev_mu);
        prev_eta = q.delta_eta;
        prev_mu = q.delta_mu;
    }
    const auto light = derive_quantities(kSgConfig, kAtomMass, 0.5235);
    const auto heavy = derive_quantities(kSgConfig, kPointerMass, 0.5235);
    CHECK(heavy.delta_eta < light.delta_eta);
    CHECK(heavy.delta_mu < light.delta_mu);
}

TEST_CASE("eta-mu product relation: delta_eta * m * delta_mu = 2 hbar tau / dt") {
    for (double dt : {1e-3, 5.235e-3, 0.5235}) {
        const DerivedQuantities q = derive_quantities(kSgConfig, kPointerMass, dt);
        CHECK(q.delta_eta * kPointerMass * q.delta_mu ==
              doctest::Approx(2.0 * kSgConfig.hbar * q.tau / dt).epsilon(1e-12));
    }
}

TEST_CASE("decoherence condition threshold") {
    DerivedQuantities q = derive_quantities(kSgConfig, kPointerMass);
    q.m_sf = 0.5;
    CHECK(decoherence_condition(q));
    q.m_sf = 0.49;
    CHECK_FALSE(decoherence_condition(q));

    // pointer at delta_t = tau passes, the silver atom at 100 tau does not
    const double tau = derive_quantities(kSgConfig, kPointerMass, 1.0).tau;
    CHECK(decoherence_condition(derive_quantities(kSgConfig, kPointerMass, tau * (1 + 1e-12))));
    CHECK_FALSE(decoherence_condition(derive_quantities(kSgConfig, kPointerMass, 0.9 * tau)));
    const auto atom = derive_quantities(kSgConfig, kAtomMass, 0.5235);
    const double direct =
        std::sqrt(kAtomMass * 0.5235 / (2.0 * kSgConfig.hbar)) *
        std::pow(kSgConfig.alpha * kSgConfig.beta, 0.25);
    CHECK(atom.m_sf == doctest::Approx(direct).epsilon(1e-12));
    CHECK_FALSE(decoherence_condition(atom));
}

TEST_CASE("dissipation time") {
    CHECK(dissipation_time(kPointerMass, 3.618e-8, PLANCK_H) ==
          doctest::Approx(70.71).epsilon(5e-4));
    CHECK(dissipation_time(kPointerMass, 0.0, PLANCK_H) == 0.0);
    // the width rule equalizes the two dissipation times
    CHECK(dissipation_time(kAtomMass, 3.618e-4, PLANCK_H) ==
          doctest::Approx(dissipation_time(kPointerMass, 3.618e-8, PLANCK_H)).epsilon(1e-12));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(validate(GalileanConfig{PLANCK_H, 2.5e-13, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(validate(GalileanConfig{0.0, 2.5e-13, 5e-17, 1.0}), std::domain_error);
    CHECK_THROWS_AS(derive_quantities(kSgConfig, -1.0), std::domain_error);
}

namespace {
SternGerlachScenario shipped_scenario() {
    return SternGerlachScenario{kAtomMass, kPointerMass, 600.0, 0.25, 120.0,
                                9.274e-24, 0.2,          3.618e-4, 2e-31, 0.0};
}
}  // namespace

TEST_CASE("Stern-Gerlach derived numbers") {
    const SternGerlachScenario s = shipped_scenario();
    const SgReport r = sg_derived_numbers(s, kSgConfig);
    CHECK(r.v == doctest::Approx(2.5905).epsilon(5e-4));
    CHECK(r.t1 == doctest::Approx(4.1667e-4).epsilon(1e-4));
    CHECK(r.t3 == doctest::Approx(6.667e-4).epsilon(1e-3));
    CHECK(r.d2 == doctest::Approx(3.618e-8).epsilon(5e-4));
    CHECK(r.delta_z == doctest::Approx(3.454e-3).epsilon(5e-4));
    CHECK(r.delta_x == doctest::Approx(6.28e-6).epsilon(5e-4));
    CHECK(r.delta_eta == doctest::Approx(7.2353e-8).epsilon(5e-4));
    CHECK(r.delta_eta1 == doctest::Approx(0.72353).epsilon(5e-4));
    CHECK(r.t_diss_pointer == doctest::Approx(70.71).epsilon(5e-4));
    CHECK(r.delta_z / s.d1 == doctest::Approx(9.5).epsilon(1e-2));
    CHECK(r.all_ok());
}

TEST_CASE("zero gradient kills the deflection and the flags") {
    SternGerlachScenario s = shipped_scenario();
    s.dBdz = 0.0;
    const SgReport r = sg_derived_numbers(s, kSgConfig);
    CHECK(r.v == 0.0);
    CHECK(r.delta_z == 0.0);
    CHECK_FALSE(r.beam_sep_ok);
}

TEST_CASE("heavy pointer breaks the macroscopic-displacement condition") {
    SternGerlachScenario s = shipped_scenario();
    s.m2 *= 1e4;  // delta_x ~ 1/m2 shrinks faster than d2 ~ 1/sqrt(m2)
    const SgReport r = sg_derived_numbers(s, kSgConfig);
    CHECK_FALSE(r.macdis_ok);
}

TEST_CASE("config file parsing") {
    const std::string text = R"(
hbar = 6.62607015e-34
alpha = 2.5e-13
beta = 5.0e-17
delta_t = 0.5235

[stern_gerlach]
m1 = 1.79e-25
m2 = 1.79e-17
u = 600
L = 0.25
dBdz = 120
mu_B = 9.274e-24
A = 0.2
d1 = 3.618e-4
v0_strength = 2e-31
)";
    const ParsedConfig cfg = parse_config_text(text);
    CHECK(cfg.hbar == PLANCK_H);
    CHECK(cfg.delta_t.value() == 0.5235);
    REQUIRE(cfg.stern_gerlach.has_value());
    CHECK(cfg.stern_gerlach->d2() == doctest::Approx(3.618e-8).epsilon(1e-12));
    CHECK_FALSE(cfg.delta_t_defaulted());
}

TEST_CASE("omitted delta_t defaults to tau per mass") {
    const ParsedConfig cfg = parse_config_text("hbar = 1\nalpha = 2\nbeta = 0.5\nmasses = 1\n");
    CHECK(cfg.delta_t_defaulted());
    CHECK(cfg.galilean(1.0).delta_t == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cfg.galilean(2.0).delta_t == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("config parse errors carry line context") {
    const auto expect_line = [](const std::string& text, int line) {
        try {
            parse_config_text(text);
            FAIL("expected ConfigParseError");
        } catch (const ConfigParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("hbar = 1\nbogus line\n", 2);
    expect_line("hbar = 1\nalpha = fast\n", 2);
    expect_line("hbar = 1\nhbar = 2\n", 2);

    // d2 is never an input
    CHECK_THROWS_WITH_AS(
        parse_config_text("hbar = 1\nalpha = 2\nbeta = 0.5\n[stern_gerlach]\n"
                          "m1 = 1\nm2 = 10\nu = 1\nL = 1\ndBdz = 1\nmu_B = 1\nA = 1\n"
                          "d1 = 1\nv0_strength = 1\nd2 = 1\n"),
        doctest::Contains("unknown key 'd2'"), ConfigParseError);
    // missing required key
    CHECK_THROWS_WITH_AS(parse_config_text("alpha = 2\nbeta = 0.5\n"),
                         doctest::Contains("missing key 'hbar'"), ConfigParseError);
    // non-positive rate
    CHECK_THROWS_AS(parse_config_text("hbar = 1\nalpha = 2\nbeta = 0\n"), ConfigParseError);
}

TEST_CASE("shipped config files parse and validate") {
    const ParsedConfig sg = parse_config_file(std::string(GALDEC_CONFIG_DIR) + "/stern_gerlach.cfg");
    CHECK(sg.stern_gerlach.has_value());
    const ParsedConfig co =
        parse_config_file(std::string(GALDEC_CONFIG_DIR) + "/collision_desk.cfg");
    REQUIRE(co.collision.has_value());
    CHECK(co.collision->setup(co.hbar).theta(co.collision->t_final) ==
          doctest::Approx(0.18).epsilon(1e-12));
}
