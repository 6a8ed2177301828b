#ifndef SWE_INTERACTION_RS_HPP
#define SWE_INTERACTION_RS_HPP

#include <optional>
#include <string>
#include <vector>

#include "swe/step_riemann.hpp"
#include "swe/wave_fan.hpp"

namespace swe {

/// Three-state initial data for a forward rarefaction meeting the
/// stationary wave: U_minus | U_mid on the rarefaction curve of U_minus,
/// then the contact image U_plus across the bottom step at x2.
struct ScenarioRS {
    State u_minus;
    State u_mid;
    State u_plus;
    double x1 = 0.0;
    double x2 = 1.0;
    Gravity grav;

    double a0() const { return u_mid.a; }
    double a1() const { return u_plus.a; }
};

/// Builds the scenario from the left state, the depth of the mid state and
/// the downstream bottom level, putting U_mid on the rarefaction curve and
/// U_plus on the selected contact branch.
ScenarioRS make_scenario_rs(const State& u_minus, double h_mid, double a1, double x1, double x2,
                            Gravity grav);

/// Empty when the scenario satisfies all structural invariants.
std::vector<std::string> scenario_rs_violations(const ScenarioRS& sc);

enum class RsCaseLabel { Case1, Case2_1, Case2_2, Case3_1, Case3_2, Case3_3, Case3_4, Case4 };
const char* to_string(RsCaseLabel label);

/// State on the incoming rarefaction curve at depth h0 (below U_mid).
State rs_incoming_state(const ScenarioRS& sc, double h0);

/// Contact image of a state on the incoming curve (entropy-selected branch).
State s0_image_point(const State& u0, double a1, Gravity grav);

/// Tangent of the image curve against the image depth and against the
/// image velocity. Throws on the sonic denominator.
struct ImageCurveSlope {
    double du1_dh1 = 0.0;
    double dh1_du1 = 0.0;
};
ImageCurveSlope image_curve_slope(const State& u1, const State& u0, Gravity grav);

/// Velocity of the composite image curve at image depth h1, and depth at
/// image velocity u1. The composite runs through the images of the
/// incoming states plus, when the incoming curve goes subcritical, the
/// images of the choked sonic trace. Throws when the curve does not reach
/// the requested parameter.
double rs_image_curve_u(const ScenarioRS& sc, double h1);
double rs_image_curve_h(const ScenarioRS& sc, double u1);

/// Signed gaps between the image curve and the forward rarefaction curve
/// through U_plus, in the two parameterizations. Both vanish at U_plus.
double gap_f(double h1, const ScenarioRS& sc);
double gap_q(double u1, const ScenarioRS& sc);

/// Landmark states of the case analysis. Entries absent when the scenario
/// class does not produce them.
struct RsSpecialPoints {
    std::optional<State> sonic_on_incoming;   // where the incoming curve crosses u = c
    std::optional<State> sonic_image_super;   // its supercritical contact partner
    std::optional<State> sonic_image_sub;     // its subcritical contact partner
    std::optional<double> image_u_intercept;  // u-axis intercept of the image curve
    std::optional<double> image_h_intercept;  // h-axis intercept of the image curve
    std::optional<double> mid_u_intercept;    // u-axis intercept of the incoming curve
    std::optional<double> mid_h_intercept;    // h-axis intercept of the incoming curve
    std::optional<double> plus_u_intercept;   // u-axis intercept of the curve through U_plus
    std::optional<double> plus_h_intercept;   // h-axis intercept of the curve through U_plus
    std::optional<State> stall_sonic;         // choked trace whose transmitted shock stalls
    std::optional<State> stall_image;         // its supercritical partner
    std::optional<State> stall_incoming;      // incoming state feeding the stalled trace
};
RsSpecialPoints special_points(const ScenarioRS& sc);

RsCaseLabel classify_rs_case(const ScenarioRS& sc);

/// The large-time wave configuration connecting U_minus to U_plus.
WaveFan rs_large_time(const ScenarioRS& sc);

/// Compression probe: image of the incoming state at depth h0 together
/// with the state where its forward characteristic lands on the curve
/// through U_plus. The first velocity exceeding the second is the
/// mechanism that focuses the backward characteristics.
std::pair<double, double> rs_compression_pair(const ScenarioRS& sc, double h0);

/// Arrival window of the incident fan at the step: times when its head and
/// tail reach x2.
std::pair<double, double> rs_arrival_window(const ScenarioRS& sc);

}  // namespace swe

#endif  // SWE_INTERACTION_RS_HPP
