#ifndef SWE_WAVE_FAN_HPP
#define SWE_WAVE_FAN_HPP

#include <string>
#include <vector>

#include "swe/wave_curves.hpp"

namespace swe {

/// One elementary wave. Rarefactions carry the fan edge speeds, shocks and
/// the stationary contact carry a single speed in both slots.
struct Wave {
    WaveFamily family = WaveFamily::S0;
    State left;
    State right;
    double speed_lo = 0.0;
    double speed_hi = 0.0;

    bool is_rarefaction() const { return family == WaveFamily::R1 || family == WaveFamily::R2; }
};

/// An ordered left-to-right sequence of elementary waves.
struct WaveFan {
    std::vector<Wave> waves;

    const State& left_state() const { return waves.front().left; }
    const State& right_state() const { return waves.back().right; }
    bool empty() const { return waves.empty(); }
};

Wave make_rarefaction(int family, const State& left, const State& right, Gravity grav);
Wave make_shock(int family, const State& left, const State& right, Gravity grav);
Wave make_stationary(const State& left, const State& right);

/// Checks adjacency of states, weakly increasing speeds, Lax conditions on
/// shocks, and conservation of the contact invariants across S0 jumps.
/// Returns an empty string when the fan is admissible, else a diagnosis.
std::string validate_fan(const WaveFan& fan, Gravity grav, double tol = 1e-9);

/// State of the fan's self-similar profile at slope xi = (x - xc)/(t - tc),
/// with the stationary contact pinned at xi = 0.
State sample_fan(const WaveFan& fan, double xi, Gravity grav);

/// Drops zero-strength waves (including an identity S0) so degenerate
/// configurations reduce to their flat-bottom form.
WaveFan prune_fan(const WaveFan& fan, double strength_tol = 0.0);

}  // namespace swe

#endif  // SWE_WAVE_FAN_HPP
