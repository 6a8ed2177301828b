#ifndef SWE_STATE_HPP
#define SWE_STATE_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace swe {

/// Gravitational acceleration. Strictly positive.
struct Gravity {
    double g = 9.81;
};

/// A point of the phase space: velocity u, depth h, bottom elevation a.
/// Depth must be strictly positive; dry states are rejected everywhere.
struct State {
    double u = 0.0;
    double h = 0.0;
    double a = 0.0;
};

/// Flow regime relative to the sonic curves u = +-c.
enum class DomainLabel {
    D1,          // u < -c, supercritical leftward
    D2minus,     // -c < u < 0, subcritical leftward
    D2plus,      // 0 <= u < c, subcritical rightward
    D3,          // u > c, supercritical rightward
    GammaPlus,   // u = c
    GammaMinus,  // u = -c
};

/// First-quadrant partition by the curves u = c and u = 2c.
enum class QuadrantLabel {
    RegionI,    // u > 2c
    RegionII,   // c < u < 2c
    RegionIII,  // 0 <= u < c
    GammaPlus,  // u = c
    Gamma1,     // u = 2c
};

/// Wave speeds and characteristic directions at a state.
/// Direction vectors are (dh, du, da) increments.
struct Eigenstructure {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;  // always zero
    std::array<double, 3> r1{};
    std::array<double, 3> r2{};
    std::array<double, 3> r3{};
};

inline constexpr double kBoundaryTol = 1e-10;

/// Gravity wave speed sqrt(g h). Throws on h <= 0.
double celerity(double h, Gravity grav);
inline double celerity(const State& s, Gravity grav) { return celerity(s.h, grav); }

void validate_state(const State& s);

Eigenstructure eigenstructure(const State& s, Gravity grav);

DomainLabel classify_domain(const State& s, Gravity grav, double tol = kBoundaryTol);

/// Requires u >= 0; the first-quadrant case analysis does not cover u < 0.
QuadrantLabel classify_quadrant(const State& s, Gravity grav, double tol = kBoundaryTol);

/// The two Riemann invariants of the given characteristic family.
/// family 1: (a, u + 2 sqrt(gh)); family 2: (a, u - 2 sqrt(gh));
/// family 3: (h u, u^2/2 + g (h + a)).
std::pair<double, double> riemann_invariants(int family, const State& s, Gravity grav);

const char* to_string(DomainLabel label);
const char* to_string(QuadrantLabel label);

}  // namespace swe

#endif  // SWE_STATE_HPP
