#ifndef SWE_WAVE_CURVES_HPP
#define SWE_WAVE_CURVES_HPP

#include <optional>
#include <vector>

#include "swe/state.hpp"

namespace swe {

/// Elementary wave families. S0 is the zero-speed contact carried by the
/// bottom step; it is the only family allowed to change a.
enum class WaveFamily { R1, R2, S1, S2, S0 };

const char* to_string(WaveFamily f);

/// Outcome of intersecting the stationary-contact relations with a target
/// bottom level. The supercritical root has |u| > c, the subcritical |u| < c.
struct StationaryRoots {
    enum class Verdict { NoSolution, DoubleRoot, TwoRoots };
    Verdict verdict = Verdict::NoSolution;
    std::optional<State> supercritical;
    std::optional<State> subcritical;
    double critical_depth = 0.0;  // depth separating the two root brackets
};

/// Rarefaction curve velocity at depth h from anchor state U0.
/// Family 1: u0 - 2 sqrt(g)(sqrt h - sqrt h0); family 2 flips the sign.
/// Evaluates for any h >= 0 so callers can extend curves to the axes.
double rarefaction_u(int family, const State& u0, double h, Gravity grav);

/// Where the forward-rarefaction curve through U0 meets a coordinate axis:
/// left of u = 2c it reaches the h-axis, right of it the u-axis, and on
/// u = 2c both intercepts collapse to the origin.
struct AxisIntercept {
    enum class Axis { UAxis, HAxis, Origin };
    Axis axis = Axis::Origin;
    double value = 0.0;  // abscissa u on the u-axis, depth h on the h-axis
};
AxisIntercept rarefaction_axis_intercept(const State& u0, Gravity grav);

/// Shock-curve velocity at depth h from left-hand anchor U0 (both families
/// share the minus-sign Hugoniot branch formula; family 1 lives on h > h0,
/// family 2 on h < h0). Throws on a branch violation.
double shock_u(int family, const State& u0, double h, Gravity grav);

/// Velocity of the left-hand states U that connect to right-hand anchor Ur
/// by a shock of the given family (orientation reversed from shock_u).
double shock_u_from_right(int family, const State& ur, double h, Gravity grav);

/// Shock speed u0 -+ sqrt(g/2 (h + h0) h / h0) for the jump from left state
/// U0 to a right state of depth h on the family branch. At h = h0 this is
/// the characteristic speed limit.
double shock_speed(int family, const State& u0, double h, Gravity grav);
double shock_speed(int family, const State& u0, const State& u, Gravity grav);

/// Depth at which the shock speed vanishes along the family branch from U0.
/// Exists only for family 1 with U0 supercritical-right (D3) and family 2
/// with U0 supercritical-left (D1); otherwise the speed has a fixed sign.
std::optional<double> zero_speed_depth(int family, const State& u0, Gravity grav);

/// The full right-hand state of the zero-speed shock, when one exists.
std::optional<State> zero_speed_state(int family, const State& u0, Gravity grav);

bool lax_admissible(int family, const State& u0, const State& u, Gravity grav, double tol = 1e-9);

/// Largest bottom elevation reachable from U0 by a stationary contact.
double a_max(const State& u0, Gravity grav);

/// All stationary-contact partners of U0 at bottom level a1.
StationaryRoots stationary_roots(const State& u0, double a1, Gravity grav,
                                 double double_root_tol = 1e-11);

/// The admissible partner: supercritical root for supercritical U0,
/// subcritical root for subcritical U0 (each jump stays in the closure of
/// one domain). Sonic U0 with a1 < a0 continues on the supercritical
/// branch, which is the choked-flow continuation used by the interaction
/// analysis. Throws UnsupportedConfiguration when no root exists.
State stationary_select(const State& u0, double a1, Gravity grav);

/// Tangent data of the stationary curve at U: (dh/du, da/dh, da/du).
struct StationaryDerivatives {
    double dh_du = 0.0;
    double da_dh = 0.0;
    double da_du = 0.0;
};
StationaryDerivatives stationary_curve_derivatives(const State& u, Gravity grav);

/// Composite wave curves: W1 is rarefaction below h0 and shock above,
/// W2 the mirror image. Both give the velocity of the right-hand state of
/// a wave whose left-hand state is U0.
enum class WaveCurveKind { W1, W2 };
double wave_curve(WaveCurveKind kind, const State& u0, double h, Gravity grav);

/// Velocity of left-hand states connectable to right-hand anchor Ur by a
/// forward (family 2) wave: rarefaction below h_r, shock above.
double w2_from_right(const State& ur, double h, Gravity grav);

/// Velocity of left-hand states connectable to right-hand anchor Ur by a
/// backward (family 1) wave: shock below h_r, rarefaction above.
double w1_from_right(const State& ur, double h, Gravity grav);

/// Sonic point reached from left state L along a backward rarefaction:
/// u = c on the curve u + 2 sqrt(gh) = uL + 2 sqrt(g hL).
State sonic_on_r1(const State& left, Gravity grav);

/// One sampled point of a phase-plane curve, for serialization.
struct CurveSample {
    double param = 0.0;
    double u = 0.0;
    double h = 0.0;
    double a = 0.0;
    const char* branch = "";
};

std::vector<CurveSample> sample_wave_curve(WaveCurveKind kind, const State& u0, Gravity grav,
                                           int n_per_branch = 200);
std::vector<CurveSample> sample_stationary_curve(const State& u0, Gravity grav, int n = 200);

}  // namespace swe

#endif  // SWE_WAVE_CURVES_HPP
