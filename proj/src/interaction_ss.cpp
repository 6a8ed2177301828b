#include "swe/interaction_ss.hpp"

#include <algorithm>
#include <cmath>

#include "swe/errors.hpp"

namespace swe {

const char* to_string(SsCaseLabel label) {
    switch (label) {
        case SsCaseLabel::Case1_1: return "Case1.1";
        case SsCaseLabel::Case1_2: return "Case1.2";
        case SsCaseLabel::Case2_1: return "Case2.1";
        case SsCaseLabel::Case2_2: return "Case2.2";
        case SsCaseLabel::Case2_3: return "Case2.3";
        case SsCaseLabel::Case3_1: return "Case3.1";
        case SsCaseLabel::Case3_2: return "Case3.2";
    }
    return "?";
}

ScenarioSS make_scenario_ss(const State& u_minus, double h_mid, double a1, double x1, double x2,
                            Gravity grav) {
    validate_state(u_minus);
    if (!(h_mid < u_minus.h))
        throw UnsupportedConfiguration("scenario ss: mid state must sit below U_minus on the shock branch");
    ScenarioSS sc;
    sc.u_minus = u_minus;
    sc.u_mid = State{shock_u(2, u_minus, h_mid, grav), h_mid, u_minus.a};
    sc.u_plus = stationary_select(sc.u_mid, a1, grav);
    sc.x1 = x1;
    sc.x2 = x2;
    sc.grav = grav;
    return sc;
}

std::vector<std::string> scenario_ss_violations(const ScenarioSS& sc) {
    std::vector<std::string> out;
    const Gravity g = sc.grav;
    try {
        validate_state(sc.u_minus);
        validate_state(sc.u_mid);
        validate_state(sc.u_plus);
    } catch (const std::exception& e) {
        out.emplace_back(e.what());
        return out;
    }
    if (!(sc.x1 < sc.x2)) out.emplace_back("positions: x1 must lie left of x2");
    if (sc.u_minus.a != sc.u_mid.a) out.emplace_back("bottom: U_minus and U_mid must share a0");
    if (sc.a0() < sc.a1()) out.emplace_back("bottom: a rising step is out of scope (reflect the data)");
    // the case analysis needs the incident shock moving right and the data
    // right of the leftward sonic boundary; velocities may be negative
    if (sc.u_minus.u < -celerity(sc.u_minus, g) || sc.u_mid.u < -celerity(sc.u_mid, g))
        out.emplace_back("states: data left of the backward sonic boundary are out of scope");
    if (!(sc.u_mid.h < sc.u_minus.h)) out.emplace_back("incident shock: U_mid must sit below U_minus");

    const double u_pred = shock_u(2, sc.u_minus, std::min(sc.u_mid.h, sc.u_minus.h), g);
    if (std::abs(u_pred - sc.u_mid.u) > 1e-10 * std::max(1.0, std::abs(sc.u_mid.u)))
        out.emplace_back("incident shock: U_mid off the forward shock curve of U_minus, residual " +
                         std::to_string(std::abs(u_pred - sc.u_mid.u)));
    else if (!lax_admissible(2, sc.u_minus, sc.u_mid, g))
        out.emplace_back("incident shock: violates the Lax conditions");

    if (shock_speed(2, sc.u_minus, sc.u_mid.h, g) <= 0.0)
        out.emplace_back("incident shock: nonpositive speed, it never reaches the step");

    if (sc.a1() > a_max(sc.u_mid, g)) {
        out.emplace_back("no stationary contact: a1 exceeds the reachable bottom level from U_mid");
    } else {
        try {
            const State sel = stationary_select(sc.u_mid, sc.a1(), g);
            const double scale = std::max(1.0, std::abs(sel.u) + sel.h);
            if (std::abs(sel.u - sc.u_plus.u) + std::abs(sel.h - sc.u_plus.h) > 1e-9 * scale)
                out.emplace_back("contact: U_plus is not the selected stationary partner of U_mid");
        } catch (const std::exception& e) {
            out.emplace_back(std::string("contact: ") + e.what());
        }
    }
    return out;
}

OvertakeEvent overtake_time(const ScenarioSS& sc) {
    const double sigma = shock_speed(2, sc.u_minus, sc.u_mid.h, sc.grav);
    if (sigma <= 0.0)
        throw UnsupportedConfiguration("overtake_time: incident shock does not move toward the step");
    return OvertakeEvent{(sc.x2 - sc.x1) / sigma, sc.x2};
}

namespace {

// Sign of (point - forward curve through U_plus) at matched depth:
// positive means right of (equivalently below) the curve.
double side_of_forward_curve(const State& point, const State& u_plus, Gravity g) {
    return point.u - w2_from_right(u_plus, point.h, g);
}

}  // namespace

SsCaseLabel classify_ss_case(const ScenarioSS& sc) {
    auto violations = scenario_ss_violations(sc);
    if (!violations.empty())
        throw UnsupportedConfiguration("scenario ss: " + violations.front());

    const Gravity g = sc.grav;
    const double c_minus = celerity(sc.u_minus, g);
    const double c_mid = celerity(sc.u_mid, g);
    const double c_plus = celerity(sc.u_plus, g);
    const bool minus_super = sc.u_minus.u >= c_minus;
    const bool mid_super = sc.u_mid.u >= c_mid;
    const bool plus_super = sc.u_plus.u >= c_plus;
    const bool minus_sub = std::abs(sc.u_minus.u) < c_minus;
    const bool mid_sub = std::abs(sc.u_mid.u) < c_mid;
    const bool plus_sub = std::abs(sc.u_plus.u) < c_plus;

    if (mid_super && plus_super) {
        if (!minus_super)
            throw UnsupportedConfiguration("scenario ss: subcritical U_minus behind a supercritical chain");
        if (sc.a1() > a_max(sc.u_minus, g))
            throw UnsupportedConfiguration("scenario ss: no contact partner for U_minus");
        const StationaryRoots roots = stationary_roots(sc.u_minus, sc.a1(), g);
        if (!roots.supercritical)
            throw UnsupportedConfiguration("scenario ss: no supercritical partner for U_minus");
        const double side = side_of_forward_curve(*roots.supercritical, sc.u_plus, g);
        return side <= 0.0 ? SsCaseLabel::Case1_1 : SsCaseLabel::Case1_2;
    }

    if (mid_sub && plus_sub && minus_sub) {
        if (sc.a1() > a_max(sc.u_minus, g))
            throw UnsupportedConfiguration("scenario ss: no contact partner for U_minus");
        const StationaryRoots roots = stationary_roots(sc.u_minus, sc.a1(), g);
        if (!roots.subcritical)
            throw UnsupportedConfiguration("scenario ss: no subcritical partner for U_minus");
        const double side = side_of_forward_curve(*roots.subcritical, sc.u_plus, g);
        if (side >= 0.0) return SsCaseLabel::Case2_1;
        // reflected backward rarefaction; the choked trace decides how far it opens
        const State sonic = sonic_on_r1(sc.u_minus, g);
        const StationaryRoots sonic_roots = stationary_roots(sonic, sc.a1(), g);
        if (!sonic_roots.subcritical)
            throw UnsupportedConfiguration("scenario ss: no contact partner for the choked trace");
        const double side_c = side_of_forward_curve(*sonic_roots.subcritical, sc.u_plus, g);
        return side_c >= 0.0 ? SsCaseLabel::Case2_2 : SsCaseLabel::Case2_3;
    }

    if (minus_super && mid_sub && plus_sub) {
        // zero-speed backward shock from U_minus, then its subcritical image
        const auto h_tilde = zero_speed_depth(1, sc.u_minus, g);
        if (h_tilde) {
            const State companion{shock_u(1, sc.u_minus, *h_tilde, g), *h_tilde, sc.a0()};
            if (sc.a1() <= a_max(companion, g)) {
                const StationaryRoots roots = stationary_roots(companion, sc.a1(), g);
                if (roots.subcritical &&
                    side_of_forward_curve(*roots.subcritical, sc.u_plus, g) >= 0.0)
                    return SsCaseLabel::Case3_1;
            }
        }
        // transmitted backward shock from the supercritical image of U_minus
        if (sc.a1() <= a_max(sc.u_minus, g)) {
            const StationaryRoots roots = stationary_roots(sc.u_minus, sc.a1(), g);
            if (roots.supercritical) {
                const auto h_zero = zero_speed_depth(1, *roots.supercritical, g);
                if (h_zero) {
                    const State comp{shock_u(1, *roots.supercritical, *h_zero, g), *h_zero, sc.a1()};
                    if (side_of_forward_curve(comp, sc.u_plus, g) <= 0.0) return SsCaseLabel::Case3_2;
                }
            }
        }
        throw UnsupportedConfiguration("scenario ss: configuration between the analyzed subcases");
    }

    throw UnsupportedConfiguration("scenario ss: unsupported sign configuration");
}

WaveFan ss_large_time(const ScenarioSS& sc) {
    const SsCaseLabel label = classify_ss_case(sc);
    const Gravity g = sc.grav;
    std::optional<WaveFan> fan;
    switch (label) {
        case SsCaseLabel::Case1_1:
        case SsCaseLabel::Case1_2:
        case SsCaseLabel::Case3_2:
            fan = step_fan_supercritical(sc.u_minus, sc.u_plus, g);
            break;
        case SsCaseLabel::Case2_1:
        case SsCaseLabel::Case2_2:
        case SsCaseLabel::Case3_1:
            fan = step_fan_subcritical(sc.u_minus, sc.u_plus, g);
            break;
        case SsCaseLabel::Case2_3:
            fan = step_fan_choked(sc.u_minus, sc.u_plus, g);
            // when the choked outflow still overshoots the forward curve,
            // the standing structure carries an attached zero-speed jump
            if (!fan) fan = step_fan_resonant_attached(sc.u_minus, sc.u_plus, g);
            break;
    }
    if (!fan)
        throw NumericalFailure(std::string("ss_large_time: structure for ") + to_string(label) +
                               " is not self-consistent");
    if (sc.a0() == sc.a1()) return prune_fan(*fan, 1e-12);
    return *fan;
}

TimingDiagram ss_timing(const ScenarioSS& sc, double t_end) {
    TimingDiagram out;
    const OvertakeEvent ev = overtake_time(sc);
    if (t_end <= ev.t) t_end = 2.0 * ev.t;

    TimingDiagram::Segment incident;
    incident.label = "incident S2";
    incident.points = {{0.0, sc.x1}, {ev.t, sc.x2}};
    out.segments.push_back(incident);

    TimingDiagram::Segment contact;
    contact.label = "S0";
    contact.points = {{0.0, sc.x2}, {t_end, sc.x2}};
    out.segments.push_back(contact);

    const WaveFan fan = ss_large_time(sc);
    int idx = 0;
    for (const Wave& w : fan.waves) {
        ++idx;
        if (w.family == WaveFamily::S0) continue;
        if (w.is_rarefaction()) {
            TimingDiagram::Segment head, tail;
            head.label = std::string(to_string(w.family)) + " tail #" + std::to_string(idx);
            tail.label = std::string(to_string(w.family)) + " head #" + std::to_string(idx);
            head.points = {{ev.t, ev.x}, {t_end, ev.x + w.speed_lo * (t_end - ev.t)}};
            tail.points = {{ev.t, ev.x}, {t_end, ev.x + w.speed_hi * (t_end - ev.t)}};
            out.segments.push_back(head);
            out.segments.push_back(tail);
        } else {
            TimingDiagram::Segment s;
            s.label = std::string(to_string(w.family)) + " #" + std::to_string(idx);
            s.points = {{ev.t, ev.x}, {t_end, ev.x + w.speed_lo * (t_end - ev.t)}};
            out.segments.push_back(s);
        }
    }
    return out;
}

}  // namespace swe
