#ifndef SWE_STEP_RIEMANN_HPP
#define SWE_STEP_RIEMANN_HPP

#include "swe/wave_fan.hpp"

namespace swe {

/// Middle state of the flat-bottom two-wave Riemann problem.
struct FlatRiemannSolution {
    State middle;
    WaveFan fan;
};

/// Exact solver for the flat-bottom problem (left and right share a).
/// The middle state is the intersection of the backward wave curve of the
/// left state with the forward wave curve anchored at the right state.
FlatRiemannSolution solve_flat_riemann(const State& left, const State& right, Gravity grav);

/// Wave structures the step Riemann problem can take when the bottom drops
/// from left to right and the data sit in the first quadrant.
enum class StepStructure {
    SupercriticalTransparent,  // contact first, all other waves downstream
    Subcritical,               // backward wave, contact, forward wave
    Choked,                    // backward rarefaction to sonic, contact, downstream waves
    ResonantAttached,          // choked contact with a standing jump inside it
};

struct StepRiemannSolution {
    StepStructure structure;
    WaveFan fan;
};

/// Exact large-time solution of the Riemann problem with a bottom step
/// a_left >= a_right, first-quadrant data. Tries the supercritical,
/// subcritical and choked structures in turn and returns the first
/// self-consistent one.
StepRiemannSolution solve_step_riemann(const State& left, const State& right, Gravity grav);

/// Individual structure builders. Each returns the fan when the structure
/// is self-consistent for the data, otherwise nullopt. The interaction
/// classifiers call the builder their case prescribes.
std::optional<WaveFan> step_fan_supercritical(const State& left, const State& right, Gravity grav);
std::optional<WaveFan> step_fan_subcritical(const State& left, const State& right, Gravity grav);
std::optional<WaveFan> step_fan_choked(const State& left, const State& right, Gravity grav);

/// Resonant completion: the choked contact carries a zero-speed jump at an
/// intermediate bottom level, so the standing structure is contact piece,
/// standing jump, contact piece. Needed when the downstream level is too
/// high for any subcritical throughflow but the choked outflow overshoots.
std::optional<WaveFan> step_fan_resonant_attached(const State& left, const State& right, Gravity grav);

/// Settled middle state of the choked transient: the intersection of the
/// backward shock curve from the choked image with the forward curve into
/// `right`, together with the shock speed there. Used to locate the state
/// the transmitted backward shock rides on before it reaches the step.
struct ChokedTransient {
    State sonic;       // choked trace at the upstream level
    State image;       // its supercritical partner at the downstream level
    State settled;     // backward-wave intersection with the forward curve
    double sigma1 = 0.0;  // speed of the settled backward shock
};
std::optional<ChokedTransient> choked_transient(const State& left, const State& right, Gravity grav);

}  // namespace swe

#endif  // SWE_STEP_RIEMANN_HPP
