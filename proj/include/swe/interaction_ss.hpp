#ifndef SWE_INTERACTION_SS_HPP
#define SWE_INTERACTION_SS_HPP

#include <string>
#include <vector>

#include "swe/step_riemann.hpp"
#include "swe/wave_fan.hpp"

namespace swe {

/// Three-state initial data for a forward shock overtaking the stationary
/// wave: U_mid on the forward shock curve of U_minus, U_plus its contact
/// image across the step at x2.
struct ScenarioSS {
    State u_minus;
    State u_mid;
    State u_plus;
    double x1 = 0.0;
    double x2 = 1.0;
    Gravity grav;

    double a0() const { return u_mid.a; }
    double a1() const { return u_plus.a; }
};

/// Builds the scenario from the left state, the depth of the mid state
/// (below U_minus on the shock branch) and the downstream bottom level.
ScenarioSS make_scenario_ss(const State& u_minus, double h_mid, double a1, double x1, double x2,
                            Gravity grav);

std::vector<std::string> scenario_ss_violations(const ScenarioSS& sc);

enum class SsCaseLabel { Case1_1, Case1_2, Case2_1, Case2_2, Case2_3, Case3_1, Case3_2 };
const char* to_string(SsCaseLabel label);

/// When and where the incident shock reaches the step.
struct OvertakeEvent {
    double t = 0.0;
    double x = 0.0;
};
OvertakeEvent overtake_time(const ScenarioSS& sc);

SsCaseLabel classify_ss_case(const ScenarioSS& sc);

WaveFan ss_large_time(const ScenarioSS& sc);

/// Polylines of every wave in the x-t plane, before and after the
/// overtake, for plotting.
struct TimingDiagram {
    struct Segment {
        std::string label;
        std::vector<std::pair<double, double>> points;  // (t, x)
    };
    std::vector<Segment> segments;
};
TimingDiagram ss_timing(const ScenarioSS& sc, double t_end);

}  // namespace swe

#endif  // SWE_INTERACTION_SS_HPP
