#ifndef SWE_FV_ORACLE_HPP
#define SWE_FV_ORACLE_HPP

#include <limits>
#include <vector>

#include "swe/interaction_rs.hpp"
#include "swe/interaction_ss.hpp"
#include "swe/wave_fan.hpp"

namespace swe {

struct FvConfig {
    int cells = 1000;
    double x_lo = -20.0;
    double x_hi = 20.0;
    double cfl = 0.45;
    double end_time = 1.0;
    Gravity grav;
    // Half-width of the linear ramp replacing the sharp bottom step. Zero
    // keeps the step on one interface; a resolved ramp is required for the
    // scheme to converge to the energy-conserving contact across choked
    // transitions.
    double step_ramp = 0.0;
};

/// Cell averages of depth and discharge plus the frozen bottom profile.
struct FvField {
    std::vector<double> h;
    std::vector<double> hu;
    std::vector<double> a;
    double dx = 0.0;
    double x_lo = 0.0;
    double t = 0.0;

    double x_center(int i) const { return x_lo + (i + 0.5) * dx; }
    int cells() const { return static_cast<int>(h.size()); }
};

/// Piecewise-constant three-state initial data with jumps at x1 and x2 and
/// the bottom step aligned with the cell interface nearest x2.
struct ThreeStateData {
    State left;
    State mid;
    State right;
    double x1 = 0.0;
    double x2 = 1.0;
};

FvField fv_init(const ThreeStateData& data, const FvConfig& config);

/// One conservative update with an HLL flux and hydrostatic reconstruction
/// of the bottom source. Returns the time increment taken (CFL-limited and
/// never above dt_cap). Preserves the lake-at-rest steady state to
/// rounding. Throws on a positivity failure.
double fv_step(FvField& field, const FvConfig& config,
               double dt_cap = std::numeric_limits<double>::infinity());

/// Evolves the three-state data of the scenario to config.end_time with
/// transmissive boundaries.
FvField fv_run(const ScenarioRS& sc, const FvConfig& config);
FvField fv_run(const ScenarioSS& sc, const FvConfig& config);
FvField fv_run(const ThreeStateData& data, const FvConfig& config);

struct FanCompareReport {
    double l1_h = 0.0;
    double l1_hu = 0.0;
    double relative = 0.0;
};

/// L1 distance between the field and the analytic profile the fan induces
/// at time t, with the waves centered at (x_center, t_center) and the
/// contact pinned at x_center.
FanCompareReport fan_compare(const WaveFan& fan, const FvField& field, double t, double x_center,
                             double t_center, Gravity grav);

}  // namespace swe

#endif  // SWE_FV_ORACLE_HPP
