#include <doctest.h>

#include <cmath>
#include <random>

#include "swe/errors.hpp"
#include "swe/interaction_rs.hpp"
#include "swe/step_riemann.hpp"

using namespace swe;

namespace {

const Gravity kUnit{1.0};

// canonical scenarios, one per case
ScenarioRS fix_case1() { return make_scenario_rs(State{2.6, 0.8, 1.0}, 1.0, 0.6, -3.0, 0.0, kUnit); }
ScenarioRS fix_case2_1() { return make_scenario_rs(State{0.8, 0.55, 1.0}, 1.0, 0.25, -3.0, 0.0, kUnit); }
ScenarioRS fix_case2_2() { return make_scenario_rs(State{0.5, 0.45, 1.0}, 1.0, 0.25, -3.0, 0.0, kUnit); }
ScenarioRS fix_case3_1() { return make_scenario_rs(State{1.75, 0.9, 1.0}, 1.0, 0.88, -3.0, 0.0, kUnit); }
ScenarioRS fix_case3_2() { return make_scenario_rs(State{0.6, 0.5, 1.0}, 1.0, 0.88, -3.0, 0.0, kUnit); }
ScenarioRS fix_case3_3() { return make_scenario_rs(State{0.45, 0.42, 1.0}, 1.0, 0.99, -3.0, 0.0, kUnit); }
ScenarioRS fix_case4() { return make_scenario_rs(State{0.3, 0.8, 1.0}, 1.0, 0.8, -3.0, 0.0, kUnit); }

std::vector<WaveFamily> families(const WaveFan& fan) {
    std::vector<WaveFamily> out;
    for (const Wave& w : fan.waves) out.push_back(w.family);
    return out;
}

}  // namespace

TEST_CASE("scenario construction and validation") {
    const ScenarioRS sc = fix_case1();
    CHECK(scenario_rs_violations(sc).empty());
    // mid state on the forward curve of U_minus by construction
    CHECK(sc.u_mid.u ==
          doctest::Approx(rarefaction_u(2, sc.u_minus, sc.u_mid.h, kUnit)).epsilon(1e-12));
    // plus state is the selected contact partner
    const State sel = stationary_select(sc.u_mid, sc.a1(), kUnit);
    CHECK(sc.u_plus.u == doctest::Approx(sel.u).epsilon(1e-12));

    ScenarioRS bad = sc;
    bad.u_mid.u += 1e-3;
    CHECK(!scenario_rs_violations(bad).empty());

    ScenarioRS swapped = sc;
    std::swap(swapped.x1, swapped.x2);
    CHECK(!scenario_rs_violations(swapped).empty());
}

TEST_CASE("image point delegates to the selected contact branch") {
    const ScenarioRS sc = fix_case1();
    const State img = s0_image_point(sc.u_mid, sc.a1(), kUnit);
    CHECK(img.u == doctest::Approx(sc.u_plus.u).epsilon(1e-12));
    CHECK(img.h == doctest::Approx(sc.u_plus.h).epsilon(1e-12));
    // identity at an unchanged level
    const State same = s0_image_point(sc.u_mid, sc.a0(), kUnit);
    CHECK(same.u == sc.u_mid.u);
    CHECK(same.h == sc.u_mid.h);
    // supercritical anchor thins across the drop
    const State img2 = s0_image_point(State{2.0, 1.0, 1.0}, 0.5, kUnit);
    CHECK(img2.h == doctest::Approx(0.871).epsilon(1e-3));
}

TEST_CASE("image curve slope matches finite differences of the image map") {
    const ScenarioRS sc = fix_case1();
    for (double h0 : {0.82, 0.9, 0.97}) {
        const State u0 = rs_incoming_state(sc, h0);
        const State u1 = s0_image_point(u0, sc.a1(), kUnit);
        const ImageCurveSlope slope = image_curve_slope(u1, u0, kUnit);
        // centered difference along the image curve
        const double dh = 1e-6;
        const State up = s0_image_point(rs_incoming_state(sc, h0 + dh), sc.a1(), kUnit);
        const State dn = s0_image_point(rs_incoming_state(sc, h0 - dh), sc.a1(), kUnit);
        const double fd = (up.u - dn.u) / (up.h - dn.h);
        CHECK(slope.du1_dh1 == doctest::Approx(fd).epsilon(1e-6));
        CHECK(slope.dh1_du1 == doctest::Approx(1.0 / fd).epsilon(1e-6));
    }
}

TEST_CASE("image curve slope tends to the incoming curve slope as the step vanishes") {
    const ScenarioRS sc = fix_case1();
    const State u0 = rs_incoming_state(sc, 0.9);
    double prev_err = 1e9;
    for (double da : {1e-2, 1e-4, 1e-6}) {
        const State u1 = s0_image_point(u0, sc.a0() - da, kUnit);
        const ImageCurveSlope slope = image_curve_slope(u1, u0, kUnit);
        const double expected = std::sqrt(kUnit.g / u0.h);
        const double err = std::abs(slope.du1_dh1 - expected);
        CHECK(err < prev_err + 1e-14);
        prev_err = err;
    }
    CHECK(prev_err < 1e-4);
}

TEST_CASE("image curve slope flags the sonic denominator") {
    // u1 sqrt(h0) = sqrt(g) h1 makes the depth-parameterized form singular
    const State u0{1.0, 1.0, 1.0};
    const State u1{1.0, 1.0, 0.5};
    CHECK_THROWS_AS(image_curve_slope(u1, u0, kUnit), NumericalFailure);
}

TEST_CASE("gap functions vanish at the shared endpoint") {
    for (const ScenarioRS& sc : {fix_case1(), fix_case4()}) {
        CHECK(std::abs(gap_f(sc.u_plus.h, sc)) < 1e-9);
        CHECK(std::abs(gap_q(sc.u_plus.u, sc)) < 1e-9);
    }
    const ScenarioRS sc1 = fix_case1();
    CHECK_THROWS_AS(gap_f(sc1.u_plus.h * 1.5, sc1), std::domain_error);
}

TEST_CASE("image curve lies right of the forward curve through U_plus") {
    // velocity gap positive, depth gap negative, on the open range
    const ScenarioRS sc1 = fix_case1();
    for (int i = 1; i < 40; ++i) CHECK(gap_f(sc1.u_plus.h * i / 40.0, sc1) > 0.0);
    const ScenarioRS sc4 = fix_case4();
    for (int i = 1; i < 40; ++i) CHECK(gap_q(sc4.u_plus.u * i / 40.0, sc4) < 0.0);
}

TEST_CASE("gap derivatives have fixed signs") {
    const ScenarioRS sc = fix_case1();
    for (int i = 2; i < 38; ++i) {
        const double h1 = sc.u_plus.h * i / 40.0;
        const double d = 1e-6 * sc.u_plus.h;
        CHECK((gap_f(h1 + d, sc) - gap_f(h1 - d, sc)) / (2.0 * d) < 0.0);
    }
    const ScenarioRS sc4 = fix_case4();
    for (int i = 2; i < 38; ++i) {
        const double u1 = sc4.u_plus.u * i / 40.0;
        const double d = 1e-6 * sc4.u_plus.u;
        CHECK((gap_q(u1 + d, sc4) - gap_q(u1 - d, sc4)) / (2.0 * d) > 0.0);
    }
}

TEST_CASE("special points: axis intercepts and orderings") {
    const ScenarioRS sc1 = fix_case1();
    const RsSpecialPoints p1 = special_points(sc1);
    REQUIRE(p1.mid_u_intercept.has_value());
    REQUIRE(p1.plus_u_intercept.has_value());
    REQUIRE(p1.image_u_intercept.has_value());
    // the image curve's axis point lies right of the forward curve's
    CHECK(*p1.image_u_intercept > *p1.plus_u_intercept);
    CHECK(!p1.sonic_on_incoming.has_value());

    const ScenarioRS sc4 = fix_case4();
    const RsSpecialPoints p4 = special_points(sc4);
    REQUIRE(p4.mid_h_intercept.has_value());
    REQUIRE(p4.plus_h_intercept.has_value());
    REQUIRE(p4.image_h_intercept.has_value());
    CHECK(*p4.image_h_intercept < *p4.plus_h_intercept);
    CHECK(*p4.image_h_intercept ==
          doctest::Approx(*p4.mid_h_intercept + sc4.a0() - sc4.a1()).epsilon(1e-12));
}

TEST_CASE("special points: sonic crossing and the stalled trace") {
    const ScenarioRS sc = fix_case3_2();
    const RsSpecialPoints p = special_points(sc);
    REQUIRE(p.sonic_on_incoming.has_value());
    const State& uc = *p.sonic_on_incoming;
    CHECK(uc.u == doctest::Approx(celerity(uc, kUnit)).epsilon(1e-12));
    CHECK(uc.u == doctest::Approx(rarefaction_u(2, sc.u_mid, uc.h, kUnit)).epsilon(1e-10));
    REQUIRE(p.sonic_image_super.has_value());
    REQUIRE(p.sonic_image_sub.has_value());
    CHECK(p.sonic_image_super->u > celerity(*p.sonic_image_super, kUnit));
    CHECK(p.sonic_image_sub->u < celerity(*p.sonic_image_sub, kUnit));

    REQUIRE(p.stall_sonic.has_value());
    REQUIRE(p.stall_image.has_value());
    REQUIRE(p.stall_incoming.has_value());
    // the stalled trace's transmitted shock dies exactly on the curve
    // through U_plus
    const auto hz = zero_speed_depth(1, *p.stall_image, kUnit);
    REQUIRE(hz.has_value());
    const double u_comp = shock_u(1, *p.stall_image, *hz, kUnit);
    CHECK(u_comp == doctest::Approx(rarefaction_u(2, sc.u_plus, *hz, kUnit)).epsilon(1e-8));
}

TEST_CASE("case classification per fixture") {
    CHECK(classify_rs_case(fix_case1()) == RsCaseLabel::Case1);
    CHECK(classify_rs_case(fix_case2_1()) == RsCaseLabel::Case2_1);
    CHECK(classify_rs_case(fix_case2_2()) == RsCaseLabel::Case2_2);
    CHECK(classify_rs_case(fix_case3_1()) == RsCaseLabel::Case3_1);
    CHECK(classify_rs_case(fix_case3_2()) == RsCaseLabel::Case3_2);
    CHECK(classify_rs_case(fix_case3_3()) == RsCaseLabel::Case3_3);
    CHECK(classify_rs_case(fix_case4()) == RsCaseLabel::Case4);
}

TEST_CASE("large-time fans match the case compositions") {
    using F = WaveFamily;
    CHECK(families(rs_large_time(fix_case1())) == std::vector<F>{F::S0, F::S1, F::R2});
    CHECK(families(rs_large_time(fix_case2_1())) == std::vector<F>{F::S0, F::S1, F::R2});
    CHECK(families(rs_large_time(fix_case2_2())) == std::vector<F>{F::R1, F::S0, F::S1, F::R2});
    CHECK(families(rs_large_time(fix_case3_1())) == std::vector<F>{F::S0, F::S1, F::R2});
    CHECK(families(rs_large_time(fix_case3_2())) == std::vector<F>{F::R1, F::S0, F::S1, F::R2});
    // the stalled backward shock dies inside the backward fan, so the
    // settled configuration carries rarefactions on both flanks
    CHECK(families(rs_large_time(fix_case3_3())) == std::vector<F>{F::R1, F::S0, F::R2});
    CHECK(families(rs_large_time(fix_case4())) == std::vector<F>{F::S1, F::S0, F::R2});
}

TEST_CASE("every fan is admissible and connects the data") {
    for (const ScenarioRS& sc : {fix_case1(), fix_case2_1(), fix_case2_2(), fix_case3_1(),
                                 fix_case3_2(), fix_case3_3(), fix_case4()}) {
        const WaveFan fan = rs_large_time(sc);
        const std::string err = validate_fan(fan, kUnit);
        INFO(err);
        CHECK(err.empty());
        CHECK(std::abs(fan.left_state().u - sc.u_minus.u) < 1e-10);
        CHECK(std::abs(fan.left_state().h - sc.u_minus.h) < 1e-10);
        CHECK(std::abs(fan.right_state().u - sc.u_plus.u) < 1e-10);
        CHECK(std::abs(fan.right_state().h - sc.u_plus.h) < 1e-10);
        // a backward fan running into the contact must end on a sonic trace
        for (size_t i = 1; i < fan.waves.size(); ++i) {
            if (fan.waves[i].family == WaveFamily::S0 &&
                fan.waves[i - 1].family == WaveFamily::R1 && fan.waves.size() == 4) {
                const State& trace = fan.waves[i].left;
                CHECK(trace.u == doctest::Approx(celerity(trace, kUnit)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("backward characteristics compress during the interaction") {
    const ScenarioRS sc = fix_case1();
    for (double h0 : {0.82, 0.88, 0.95, 0.99}) {
        const auto [u_image, u_landing] = rs_compression_pair(sc, h0);
        CHECK(u_image > u_landing);
    }
}

TEST_CASE("transmitted shock stalls exactly at the critical incoming state") {
    const ScenarioRS sc = fix_case3_2();
    const RsSpecialPoints p = special_points(sc);
    REQUIRE(p.stall_incoming.has_value());
    ScenarioRS crit = make_scenario_rs(*p.stall_incoming, sc.u_mid.h, sc.a1(), sc.x1, sc.x2, kUnit);
    const auto transient = choked_transient(crit.u_minus, crit.u_plus, kUnit);
    REQUIRE(transient.has_value());
    CHECK(std::abs(transient->sigma1) < 1e-8);
}

TEST_CASE("coincidence detection at the stall boundary") {
    // bisect the downstream level to the boundary where the settled shock
    // speed changes sign; just inside, the settled states coincide and the
    // label flips to the degenerate subcase
    const double u_minus = 0.45, h_minus = 0.42;
    auto sigma_at = [&](double a1) {
        ScenarioRS sc = make_scenario_rs(State{u_minus, h_minus, 1.0}, 1.0, a1, -3.0, 0.0, kUnit);
        const auto tr = choked_transient(sc.u_minus, sc.u_plus, kUnit);
        REQUIRE(tr.has_value());
        return tr->sigma1;
    };
    double lo = 0.90, hi = 0.999;
    REQUIRE(sigma_at(lo) > 0.0);
    REQUIRE(sigma_at(hi) < 0.0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (sigma_at(mid) > 0.0 ? lo : hi) = mid;
    }
    const ScenarioRS boundary =
        make_scenario_rs(State{u_minus, h_minus, 1.0}, 1.0, hi, -3.0, 0.0, kUnit);
    CHECK(classify_rs_case(boundary) == RsCaseLabel::Case3_4);
}

TEST_CASE("degenerate level reduces to the flat-bottom interaction") {
    const State u_minus{0.5, 0.6, 1.0};
    ScenarioRS sc = make_scenario_rs(u_minus, 1.0, 1.0, -3.0, 0.0, kUnit);
    CHECK(sc.u_plus.u == sc.u_mid.u);
    CHECK(sc.u_plus.h == sc.u_mid.h);
    const WaveFan fan = rs_large_time(sc);
    const FlatRiemannSolution flat = solve_flat_riemann(u_minus, sc.u_plus, kUnit);
    REQUIRE(fan.waves.size() == flat.fan.waves.size());
    for (size_t i = 0; i < fan.waves.size(); ++i) {
        CHECK(fan.waves[i].family == flat.fan.waves[i].family);
        CHECK(fan.waves[i].right.u == doctest::Approx(flat.fan.waves[i].right.u).epsilon(1e-10));
        CHECK(fan.waves[i].right.h == doctest::Approx(flat.fan.waves[i].right.h).epsilon(1e-10));
    }
}

TEST_CASE("randomized scenarios: every emitted fan is admissible") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const double u_mid = 0.1 + 2.6 * U(rng);
        const double h_minus = 0.08 + 0.88 * U(rng);
        const double a1 = 1.0 - (0.02 + 0.9 * U(rng));
        const double u_minus = u_mid + 2.0 * (std::sqrt(h_minus) - 1.0);
        if (u_minus <= 1e-3) continue;
        ScenarioRS sc;
        try {
            sc = make_scenario_rs(State{u_minus, h_minus, 1.0}, 1.0, a1, -3.0, 0.0, kUnit);
            classify_rs_case(sc);
        } catch (const UnsupportedConfiguration&) {
            continue;
        }
        const WaveFan fan = rs_large_time(sc);
        const std::string err = validate_fan(fan, kUnit);
        INFO("trial ", trial, ": ", err);
        CHECK(err.empty());
        ++solved;
    }
    CHECK(solved > 150);
}
