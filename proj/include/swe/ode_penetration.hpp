#ifndef SWE_ODE_PENETRATION_HPP
#define SWE_ODE_PENETRATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "swe/interaction_rs.hpp"
#include "swe/state.hpp"

namespace swe {

/// Which refraction problem is being solved: the backward shock crossing a
/// backward fan, its forward mirror, or the backward shock inside the
/// transmitted forward fan (the latter is handled by
/// solve_transmitted_shock, not by the reduced depth equation).
enum class FreeBoundarySide { BackwardS1inR1, ForwardS2inR2, S1inTransmittedR2 };

/// A shock entering a centered simple wave: the shock starts at
/// (x_start, t_start) on the fan edge carrying fan_head and runs toward
/// the fan_tail edge; behind it sits the constant state `behind`.
/// All fan characteristics emanate from (x_fan, t_fan), t_fan < t_start.
struct FreeBoundarySetup {
    FreeBoundarySide side = FreeBoundarySide::BackwardS1inR1;
    double x_start = 0.0;
    double t_start = 1.0;
    State behind;
    State fan_head;
    State fan_tail;
    double x_fan = 0.0;
    double t_fan = 0.0;
    Gravity grav;
};

struct TrajectorySample {
    double t = 0.0;
    double x = 0.0;
    double h = 0.0;  // fan-side depth at the shock
    double u = 0.0;  // fan-side velocity at the shock
};

struct PenetrationVerdict {
    enum class Kind { Crossed, Asymptote };
    Kind kind = Kind::Asymptote;
    double value = 0.0;  // crossing time, or the asymptote slope
};

struct OdeTrajectory {
    std::vector<TrajectorySample> samples;
    PenetrationVerdict verdict;
};

void validate_setup(const FreeBoundarySetup& setup);

/// The reduced evolution of the fan-side depth at the shock,
/// dh/dt = -2/(3 (t - t_fan)) (h - sqrt((h + hb) hb / 2)) with hb the
/// behind depth. Fixed point exactly at h = hb.
std::function<double(double, double)> reduce_to_h_ode(const FreeBoundarySetup& setup);

/// Closed-quadrature crossing time, or the asymptote when the behind
/// depth does not dominate the fan tail.
PenetrationVerdict penetration_time(const FreeBoundarySetup& setup);

/// Integrates the reduced depth equation with an embedded adaptive
/// Runge-Kutta pair and reconstructs the path from the fan geometry.
OdeTrajectory integrate_free_boundary(const FreeBoundarySetup& setup,
                                      double abs_tol = 1e-10, double rel_tol = 1e-8);

struct EnvelopePoint {
    double x_e = 0.0;
    double t_e = 0.0;
};

/// Earliest crossing of the backward characteristics emitted during the
/// interaction; absent when the emitted field is not compressive.
std::optional<EnvelopePoint> find_envelope(const ScenarioRS& sc, int n_chars = 400);

/// Path of the backward shock through the transmitted forward fan, from
/// its formation point to the terminal constant-speed regime.
OdeTrajectory solve_transmitted_shock(const ScenarioRS& sc, int n_chars = 400);

/// The two refraction problems of a stalled transmitted shock that has
/// returned to the step: the backward shock entering the reflected
/// backward fan, and the forward shock entering the transmitted remnant.
/// t_touch anchors the shock start; verdicts do not depend on it.
struct RsPenetrationSetups {
    FreeBoundarySetup backward;
    FreeBoundarySetup forward;
};
RsPenetrationSetups rs_penetration_setups(const ScenarioRS& sc, double t_touch);

}  // namespace swe

#endif  // SWE_ODE_PENETRATION_HPP
