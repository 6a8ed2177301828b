#include "swe/wave_fan.hpp"

#include <cmath>
#include <sstream>

namespace swe {

Wave make_rarefaction(int family, const State& left, const State& right, Gravity grav) {
    Wave w;
    w.family = family == 1 ? WaveFamily::R1 : WaveFamily::R2;
    w.left = left;
    w.right = right;
    const Eigenstructure el = eigenstructure(left, grav);
    const Eigenstructure er = eigenstructure(right, grav);
    w.speed_lo = family == 1 ? el.lambda1 : el.lambda2;
    w.speed_hi = family == 1 ? er.lambda1 : er.lambda2;
    return w;
}

Wave make_shock(int family, const State& left, const State& right, Gravity grav) {
    Wave w;
    w.family = family == 1 ? WaveFamily::S1 : WaveFamily::S2;
    w.left = left;
    w.right = right;
    w.speed_lo = w.speed_hi = shock_speed(family, left, right.h, grav);
    return w;
}

Wave make_stationary(const State& left, const State& right) {
    Wave w;
    w.family = WaveFamily::S0;
    w.left = left;
    w.right = right;
    w.speed_lo = w.speed_hi = 0.0;
    return w;
}

static double state_gap(const State& a, const State& b) {
    return std::abs(a.u - b.u) + std::abs(a.h - b.h) + std::abs(a.a - b.a);
}

std::string validate_fan(const WaveFan& fan, Gravity grav, double tol) {
    std::ostringstream oss;
    if (fan.empty()) return "fan is empty";
    double prev_speed = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < fan.waves.size(); ++i) {
        const Wave& w = fan.waves[i];
        const double scale = std::max({1.0, std::abs(w.left.u), std::abs(w.left.h)});
        if (i > 0 && state_gap(fan.waves[i - 1].right, w.left) > tol * scale) {
            oss << "wave " << i << ": left state does not match predecessor";
            return oss.str();
        }
        if (w.speed_lo > w.speed_hi + tol) {
            oss << "wave " << i << ": decreasing internal speeds";
            return oss.str();
        }
        if (w.speed_lo < prev_speed - tol) {
            oss << "wave " << i << " (" << to_string(w.family) << "): speed " << w.speed_lo
                << " behind predecessor speed " << prev_speed;
            return oss.str();
        }
        prev_speed = w.speed_hi;
        switch (w.family) {
            case WaveFamily::S1:
            case WaveFamily::S2: {
                const int fam = w.family == WaveFamily::S1 ? 1 : 2;
                // Hugoniot membership
                const double u_pred = shock_u(fam, w.left, w.right.h, grav);
                if (std::abs(u_pred - w.right.u) > tol * scale) {
                    oss << "wave " << i << ": right state off the Hugoniot branch by "
                        << std::abs(u_pred - w.right.u);
                    return oss.str();
                }
                if (!lax_admissible(fam, w.left, w.right, grav, tol)) {
                    oss << "wave " << i << ": violates the Lax conditions";
                    return oss.str();
                }
                break;
            }
            case WaveFamily::R1:
            case WaveFamily::R2: {
                const int fam = w.family == WaveFamily::R1 ? 1 : 2;
                const double u_pred = rarefaction_u(fam, w.left, w.right.h, grav);
                if (std::abs(u_pred - w.right.u) > tol * scale) {
                    oss << "wave " << i << ": right state off the rarefaction curve";
                    return oss.str();
                }
                const bool ok_branch = fam == 1 ? w.right.h <= w.left.h + tol
                                                : w.right.h >= w.left.h - tol;
                if (!ok_branch) {
                    oss << "wave " << i << ": rarefaction on the compressive branch";
                    return oss.str();
                }
                break;
            }
            case WaveFamily::S0: {
                const auto inv_l = riemann_invariants(3, w.left, grav);
                const auto inv_r = riemann_invariants(3, w.right, grav);
                const double s1 = std::max(1.0, std::abs(inv_l.first));
                const double s2 = std::max(1.0, std::abs(inv_l.second));
                if (std::abs(inv_l.first - inv_r.first) > 1e-11 * s1 ||
                    std::abs(inv_l.second - inv_r.second) > 1e-11 * s2) {
                    oss << "wave " << i << ": stationary jump does not conserve the contact invariants";
                    return oss.str();
                }
                break;
            }
        }
    }
    return "";
}

State sample_fan(const WaveFan& fan, double xi, Gravity grav) {
    if (fan.empty()) throw std::invalid_argument("sample_fan: empty fan");
    State current = fan.left_state();
    for (const Wave& w : fan.waves) {
        if (xi < w.speed_lo) return current;
        if (xi <= w.speed_hi && w.is_rarefaction()) {
            // self-similar state inside the fan from the invariant + ray slope
            const int fam = w.family == WaveFamily::R1 ? 1 : 2;
            double c, u;
            if (fam == 1) {
                const double k = w.left.u + 2.0 * celerity(w.left, grav);
                c = (k - xi) / 3.0;
                u = xi + c;
            } else {
                const double k = w.left.u - 2.0 * celerity(w.left, grav);
                c = (xi - k) / 3.0;
                u = xi - c;
            }
            return State{u, c * c / grav.g, w.left.a};
        }
        current = w.right;
    }
    return current;
}

WaveFan prune_fan(const WaveFan& fan, double strength_tol) {
    WaveFan out;
    for (const Wave& w : fan.waves) {
        const double scale = std::max({1.0, std::abs(w.left.h), std::abs(w.left.u)});
        if (state_gap(w.left, w.right) <= strength_tol * scale) continue;
        out.waves.push_back(w);
    }
    if (out.waves.empty() && !fan.waves.empty()) out.waves.push_back(fan.waves.front());
    return out;
}

}  // namespace swe
