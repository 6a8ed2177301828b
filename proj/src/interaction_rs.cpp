#include "swe/interaction_rs.hpp"

#include <algorithm>
#include <cmath>

#include "swe/errors.hpp"
#include "swe/rootfind.hpp"

namespace swe {

const char* to_string(RsCaseLabel label) {
    switch (label) {
        case RsCaseLabel::Case1: return "Case1";
        case RsCaseLabel::Case2_1: return "Case2.1";
        case RsCaseLabel::Case2_2: return "Case2.2";
        case RsCaseLabel::Case3_1: return "Case3.1";
        case RsCaseLabel::Case3_2: return "Case3.2";
        case RsCaseLabel::Case3_3: return "Case3.3";
        case RsCaseLabel::Case3_4: return "Case3.4";
        case RsCaseLabel::Case4: return "Case4";
    }
    return "?";
}

ScenarioRS make_scenario_rs(const State& u_minus, double h_mid, double a1, double x1, double x2,
                            Gravity grav) {
    validate_state(u_minus);
    if (!(h_mid > u_minus.h))
        throw UnsupportedConfiguration("scenario rs: mid state must sit above U_minus on the forward curve");
    ScenarioRS sc;
    sc.u_minus = u_minus;
    sc.u_mid = State{rarefaction_u(2, u_minus, h_mid, grav), h_mid, u_minus.a};
    sc.u_plus = stationary_select(sc.u_mid, a1, grav);
    sc.x1 = x1;
    sc.x2 = x2;
    sc.grav = grav;
    return sc;
}

State rs_incoming_state(const ScenarioRS& sc, double h0) {
    if (!(h0 > 0.0) || h0 > sc.u_mid.h * (1.0 + 1e-12))
        throw std::domain_error("rs_incoming_state: depth outside the incoming curve");
    return State{rarefaction_u(2, sc.u_mid, h0, sc.grav), h0, sc.a0()};
}

std::vector<std::string> scenario_rs_violations(const ScenarioRS& sc) {
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
    if (sc.u_minus.u < 0.0 || sc.u_mid.u < 0.0 || sc.u_plus.u < 0.0)
        out.emplace_back("states: all data must lie in the first quadrant");
    if (!(sc.u_mid.h > sc.u_minus.h)) out.emplace_back("incoming wave: U_mid must sit above U_minus");

    const double u_pred = rarefaction_u(2, sc.u_minus, sc.u_mid.h, g);
    if (std::abs(u_pred - sc.u_mid.u) > 1e-10 * std::max(1.0, std::abs(sc.u_mid.u)))
        out.emplace_back("incoming wave: U_mid off the forward rarefaction curve of U_minus, residual " +
                         std::to_string(std::abs(u_pred - sc.u_mid.u)));

    // the contact must exist for every state the fan brings to the step
    for (int i = 0; i <= 32; ++i) {
        const double h0 = sc.u_minus.h + (sc.u_mid.h - sc.u_minus.h) * i / 32.0;
        const State u0 = rs_incoming_state(sc, h0);
        if (sc.a1() > a_max(u0, g)) {
            out.emplace_back("no stationary contact: a1 exceeds the reachable bottom level along the incoming wave");
            break;
        }
    }

    try {
        const State sel = stationary_select(sc.u_mid, sc.a1(), g);
        const double scale = std::max(1.0, std::abs(sel.u) + sel.h);
        if (std::abs(sel.u - sc.u_plus.u) + std::abs(sel.h - sc.u_plus.h) > 1e-9 * scale)
            out.emplace_back("contact: U_plus is not the selected stationary partner of U_mid");
    } catch (const std::exception& e) {
        out.emplace_back(std::string("contact: ") + e.what());
    }
    return out;
}

State s0_image_point(const State& u0, double a1, Gravity grav) {
    return stationary_select(u0, a1, grav);
}

ImageCurveSlope image_curve_slope(const State& u1, const State& u0, Gravity grav) {
    validate_state(u0);
    validate_state(u1);
    const double g = grav.g;
    const double sg = std::sqrt(g);
    const double sh0 = std::sqrt(u0.h);
    const double num = sg * u1.u - g * sh0;
    const double den = sh0 * u1.u - sg * u1.h;
    const double scale = std::max(1.0, std::abs(sg * u1.u));
    if (std::abs(den) < 1e-14 * scale)
        throw NumericalFailure("image_curve_slope: sonic denominator vanishes");
    if (std::abs(num) < 1e-14 * scale)
        throw NumericalFailure("image_curve_slope: reciprocal form undefined where the numerator vanishes");
    ImageCurveSlope s;
    s.du1_dh1 = num / den;
    s.dh1_du1 = den / num;
    return s;
}

namespace {

// Supercritical contact partner regardless of which side of the sonic
// curve u0 sits on; the choked continuation of the image curve needs it.
State image_super(const State& u0, double a1, Gravity grav) {
    const StationaryRoots roots = stationary_roots(u0, a1, grav);
    if (!roots.supercritical)
        throw UnsupportedConfiguration("image curve: supercritical partner does not exist");
    return *roots.supercritical;
}

State image_sub(const State& u0, double a1, Gravity grav) {
    const StationaryRoots roots = stationary_roots(u0, a1, grav);
    if (!roots.subcritical)
        throw UnsupportedConfiguration("image curve: subcritical partner does not exist");
    return *roots.subcritical;
}

// Depth of the incoming curve's sonic crossing, if it lies on the segment
// (0, h_mid].
std::optional<double> incoming_sonic_depth(const ScenarioRS& sc) {
    const double k = sc.u_mid.u - 2.0 * celerity(sc.u_mid, sc.grav);  // forward-curve invariant
    if (k >= 0.0) return std::nullopt;  // curve stays supercritical down to the axis
    const double h = k * k / sc.grav.g;
    if (h > sc.u_mid.h) return std::nullopt;  // mid state already subcritical
    return h;
}

// Image of the curve point at depth h0, choked continuation included:
// supercritical partners above the sonic crossing, partners of the sonic
// trace below it.
State composite_image(const ScenarioRS& sc, double h0_or_hs, bool choked_branch) {
    if (choked_branch) {
        const double c = std::sqrt(sc.grav.g * h0_or_hs);
        const State sonic{c, h0_or_hs, sc.a0()};
        return image_super(sonic, sc.a1(), sc.grav);
    }
    const State u0 = rs_incoming_state(sc, h0_or_hs);
    const double c0 = celerity(u0, sc.grav);
    // tolerance keeps the branch choice continuous at the sonic junction
    if (u0.u >= c0 * (1.0 - 1e-12)) return image_super(u0, sc.a1(), sc.grav);
    return image_sub(u0, sc.a1(), sc.grav);
}

struct CompositeParam {
    double value = 0.0;    // h0 on the incoming curve or hs on the sonic trace
    bool choked = false;
};

// Finds the composite-curve parameter whose image has the requested
// coordinate (depth when by_depth, else velocity). The image coordinate is
// monotone along each branch.
CompositeParam locate_on_composite(const ScenarioRS& sc, double target, bool by_depth) {
    const auto coord = [&](const State& s) { return by_depth ? s.h : s.u; };
    const auto sonic_h = incoming_sonic_depth(sc);

    auto solve_branch = [&](double lo, double hi, bool choked) -> std::optional<double> {
        auto f = [&](double p) { return coord(composite_image(sc, p, choked)) - target; };
        const double flo = f(lo);
        const double fhi = f(hi);
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
        return solve_bracketed(f, lo, hi, 1e-14);
    };

    const double tiny = 1e-9 * sc.u_mid.h;
    if (!sonic_h) {
        // single branch; it ends where the incoming curve leaves the first quadrant
        const double k = sc.u_mid.u - 2.0 * celerity(sc.u_mid, sc.grav);
        const double lo = k < 0.0 ? 0.25 * k * k / sc.grav.g : tiny;
        if (auto p = solve_branch(std::max(lo, tiny), sc.u_mid.h, false)) return {*p, false};
    } else {
        if (auto p = solve_branch(*sonic_h, sc.u_mid.h, false)) return {*p, false};
        if (auto p = solve_branch(tiny * *sonic_h / sc.u_mid.h, *sonic_h, true)) return {*p, true};
    }
    throw std::domain_error("image curve: requested parameter outside the composite curve");
}

}  // namespace

double rs_image_curve_u(const ScenarioRS& sc, double h1) {
    if (h1 < 0.0) throw std::domain_error("image curve: negative depth");
    if (h1 == 0.0) {
        // analytic axis limit
        const auto sonic_h = incoming_sonic_depth(sc);
        const double da = sc.a0() - sc.a1();
        if (!sonic_h) {
            const double ubar = sc.u_mid.u - 2.0 * celerity(sc.u_mid, sc.grav);
            if (ubar < 0.0)
                throw std::domain_error("image curve: ends on the depth axis, no velocity-axis point");
            return std::sqrt(ubar * ubar + 2.0 * sc.grav.g * da);
        }
        return std::sqrt(2.0 * sc.grav.g * da);
    }
    const CompositeParam p = locate_on_composite(sc, h1, true);
    return composite_image(sc, p.value, p.choked).u;
}

double rs_image_curve_h(const ScenarioRS& sc, double u1) {
    if (u1 < 0.0) throw std::domain_error("image curve: negative velocity");
    const CompositeParam p = locate_on_composite(sc, u1, false);
    return composite_image(sc, p.value, p.choked).h;
}

double gap_f(double h1, const ScenarioRS& sc) {
    if (h1 < 0.0 || h1 > sc.u_plus.h * (1.0 + 1e-12))
        throw std::domain_error("gap_f: depth outside [0, h_plus]");
    const double u_image = rs_image_curve_u(sc, h1);
    const double u_curve = rarefaction_u(2, sc.u_plus, h1, sc.grav);
    return u_image - u_curve;
}

double gap_q(double u1, const ScenarioRS& sc) {
    if (u1 < 0.0 || u1 > sc.u_plus.u * (1.0 + 1e-12))
        throw std::domain_error("gap_q: velocity outside [0, u_plus]");
    const double h_image = rs_image_curve_h(sc, u1);
    const double g = sc.grav.g;
    const double r = u1 - sc.u_plus.u + 2.0 * std::sqrt(g * sc.u_plus.h);
    const double h_curve = r * r / (4.0 * g);
    return h_image - h_curve;
}

namespace {

// Locates the choked trace whose transmitted backward shock stalls exactly
// on the forward curve through U_plus.
std::optional<State> find_stall_sonic(const ScenarioRS& sc, double hs_hi) {
    const Gravity g = sc.grav;
    auto residual = [&](double hs) -> double {
        const double c = std::sqrt(g.g * hs);
        const State sonic{c, hs, sc.a0()};
        const StationaryRoots roots = stationary_roots(sonic, sc.a1(), g);
        if (!roots.supercritical) return std::nan("");
        const State img = *roots.supercritical;
        const auto h_zero = zero_speed_depth(1, img, g);
        if (!h_zero) return std::nan("");
        const double u_comp = shock_u(1, img, *h_zero, g);
        return u_comp - rarefaction_u(2, sc.u_plus, *h_zero, g);
    };
    const double lo = 1e-6 * hs_hi;
    double x_prev = lo;
    double f_prev = residual(lo);
    const int n = 200;
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hs_hi - lo) * i / n;
        const double fx = residual(x);
        if (std::isfinite(f_prev) && std::isfinite(fx) && (fx > 0.0) != (f_prev > 0.0)) {
            const double hs = solve_bracketed([&](double h) { return residual(h); }, x_prev, x, 1e-14);
            const double c = std::sqrt(g.g * hs);
            return State{c, hs, sc.a0()};
        }
        x_prev = x;
        f_prev = fx;
    }
    return std::nullopt;
}

}  // namespace

RsSpecialPoints special_points(const ScenarioRS& sc) {
    RsSpecialPoints out;
    const Gravity g = sc.grav;

    const AxisIntercept mid_icpt = rarefaction_axis_intercept(sc.u_mid, g);
    if (mid_icpt.axis == AxisIntercept::Axis::UAxis) out.mid_u_intercept = mid_icpt.value;
    else if (mid_icpt.axis == AxisIntercept::Axis::HAxis) out.mid_h_intercept = mid_icpt.value;
    else { out.mid_u_intercept = 0.0; out.mid_h_intercept = 0.0; }

    const AxisIntercept plus_icpt = rarefaction_axis_intercept(sc.u_plus, g);
    if (plus_icpt.axis == AxisIntercept::Axis::UAxis) out.plus_u_intercept = plus_icpt.value;
    else if (plus_icpt.axis == AxisIntercept::Axis::HAxis) out.plus_h_intercept = plus_icpt.value;
    else { out.plus_u_intercept = 0.0; out.plus_h_intercept = 0.0; }

    const auto sonic_h = incoming_sonic_depth(sc);
    const double da = sc.a0() - sc.a1();
    const double ubar_m = sc.u_mid.u - 2.0 * celerity(sc.u_mid, g);
    // where the composite image curve meets an axis: it follows the
    // incoming curve's axis when the whole curve stays on one side of the
    // sonic line, and the choked arc otherwise
    if (ubar_m >= 0.0) {
        out.image_u_intercept = std::sqrt(ubar_m * ubar_m + 2.0 * g.g * da);
    } else {
        out.image_h_intercept = 0.25 * ubar_m * ubar_m / g.g + da;
    }
    if (sonic_h) {
        const double c = std::sqrt(g.g * *sonic_h);
        const State sonic{c, *sonic_h, sc.a0()};
        out.sonic_on_incoming = sonic;
        const StationaryRoots roots = stationary_roots(sonic, sc.a1(), g);
        out.sonic_image_super = roots.supercritical;
        out.sonic_image_sub = roots.subcritical;
        out.image_u_intercept = std::sqrt(2.0 * g.g * da);

        if (auto stall = find_stall_sonic(sc, *sonic_h)) {
            out.stall_sonic = stall;
            out.stall_image = image_super(*stall, sc.a1(), g);
            // incoming state whose backward curve reaches the stalled trace
            const double sq = (3.0 * stall->u - ubar_m) / (4.0 * std::sqrt(g.g));
            if (sq > 0.0) {
                const double hp = sq * sq;
                if (hp <= sc.u_mid.h) out.stall_incoming = rs_incoming_state(sc, hp);
            }
        }
    }
    return out;
}

namespace {

QuadrantLabel effective_quadrant(const State& s, Gravity g) {
    const QuadrantLabel q = classify_quadrant(s, g);
    if (q == QuadrantLabel::Gamma1) return QuadrantLabel::RegionII;
    if (q == QuadrantLabel::GammaPlus) return QuadrantLabel::RegionII;
    return q;
}

}  // namespace

RsCaseLabel classify_rs_case(const ScenarioRS& sc) {
    auto violations = scenario_rs_violations(sc);
    if (!violations.empty())
        throw UnsupportedConfiguration("scenario rs: " + violations.front());

    const Gravity g = sc.grav;
    const QuadrantLabel lm = effective_quadrant(sc.u_mid, g);
    const QuadrantLabel lp = effective_quadrant(sc.u_plus, g);
    const double c_minus = celerity(sc.u_minus, g);
    const bool minus_super = sc.u_minus.u >= c_minus;

    if (lm == QuadrantLabel::RegionI && lp == QuadrantLabel::RegionI) {
        if (!minus_super)
            throw UnsupportedConfiguration("scenario rs: subcritical U_minus under a fully supercritical chain");
        return RsCaseLabel::Case1;
    }
    if (lm == QuadrantLabel::RegionII && lp == QuadrantLabel::RegionI)
        return minus_super ? RsCaseLabel::Case2_1 : RsCaseLabel::Case2_2;
    if (lm == QuadrantLabel::RegionII && lp == QuadrantLabel::RegionII) {
        if (minus_super) return RsCaseLabel::Case3_1;
        // transmitted backward shock keeps a nonnegative terminal speed in 3.2
        const auto transient = choked_transient(sc.u_minus, sc.u_plus, g);
        if (transient && transient->sigma1 >= 0.0) return RsCaseLabel::Case3_2;
        if (!transient)
            throw UnsupportedConfiguration("scenario rs: choked transient unavailable");
        // stalled shock returns to the step; coincidence with the settled
        // state removes the reflected forward shock. Exactly on the stall
        // boundary the subcritical structure degenerates into the choked
        // one, which is the coincidence subcase. When the subcritical
        // structure is obstructed away from the boundary, the settled
        // configuration carries a standing jump attached to the contact,
        // which is outside the analyzed cases.
        const auto fan = step_fan_subcritical(sc.u_minus, sc.u_plus, g);
        if (!fan) {
            if (step_fan_choked(sc.u_minus, sc.u_plus, g)) return RsCaseLabel::Case3_4;
            throw UnsupportedConfiguration(
                "scenario rs: settled flow attaches a standing jump to the contact, "
                "beyond the analyzed cases");
        }
        State image_5;
        bool found = false;
        for (const Wave& w : fan->waves) {
            if (w.family == WaveFamily::S0) {
                image_5 = w.right;
                found = true;
            }
        }
        if (!found) throw NumericalFailure("scenario rs: settled configuration lost the contact");
        const double scale = std::max({1.0, std::abs(image_5.u), image_5.h});
        const double dist = std::abs(image_5.u - transient->settled.u) +
                            std::abs(image_5.h - transient->settled.h);
        return dist < 1e-9 * scale ? RsCaseLabel::Case3_4 : RsCaseLabel::Case3_3;
    }
    if (lm == QuadrantLabel::RegionIII && lp == QuadrantLabel::RegionIII)
        return RsCaseLabel::Case4;
    throw UnsupportedConfiguration(std::string("scenario rs: unsupported region pair (mid ") +
                                   to_string(lm) + ", plus " + to_string(lp) + ")");
}

WaveFan rs_large_time(const ScenarioRS& sc) {
    const RsCaseLabel label = classify_rs_case(sc);
    const Gravity g = sc.grav;
    std::optional<WaveFan> fan;
    switch (label) {
        case RsCaseLabel::Case1:
        case RsCaseLabel::Case2_1:
        case RsCaseLabel::Case3_1:
            fan = step_fan_supercritical(sc.u_minus, sc.u_plus, g);
            break;
        case RsCaseLabel::Case2_2:
        case RsCaseLabel::Case3_2:
            fan = step_fan_choked(sc.u_minus, sc.u_plus, g);
            break;
        case RsCaseLabel::Case3_3:
        case RsCaseLabel::Case4:
            fan = step_fan_subcritical(sc.u_minus, sc.u_plus, g);
            break;
        case RsCaseLabel::Case3_4:
            // on the stall boundary the subcritical and choked structures
            // coincide; take whichever closes
            fan = step_fan_subcritical(sc.u_minus, sc.u_plus, g);
            if (!fan) fan = step_fan_choked(sc.u_minus, sc.u_plus, g);
            break;
    }
    if (!fan)
        throw NumericalFailure(std::string("rs_large_time: structure for ") + to_string(label) +
                               " is not self-consistent");
    if (sc.a0() == sc.a1()) return prune_fan(*fan, 1e-12);
    return *fan;
}

std::pair<double, double> rs_compression_pair(const ScenarioRS& sc, double h0) {
    const State u0 = rs_incoming_state(sc, h0);
    const State img = s0_image_point(u0, sc.a1(), sc.grav);
    const Gravity g = sc.grav;
    // forward characteristic from the image lands on the curve through
    // U_plus where the backward invariants agree
    const double k = img.u + 2.0 * celerity(img, g);
    const double base = sc.u_plus.u - 2.0 * celerity(sc.u_plus, g);
    const double sqrt_gh = (k - base) / 4.0;
    if (sqrt_gh <= 0.0) throw NumericalFailure("rs_compression_pair: characteristic misses the curve");
    const double h_b = sqrt_gh * sqrt_gh / g.g;
    const double u_b = rarefaction_u(2, sc.u_plus, h_b, g);
    return {img.u, u_b};
}

std::pair<double, double> rs_arrival_window(const ScenarioRS& sc) {
    const double dist = sc.x2 - sc.x1;
    const double head = eigenstructure(sc.u_mid, sc.grav).lambda2;
    const double tail = eigenstructure(sc.u_minus, sc.grav).lambda2;
    if (head <= 0.0 || tail <= 0.0)
        throw UnsupportedConfiguration("rs_arrival_window: incident wave does not reach the step");
    return {dist / head, dist / tail};
}

}  // namespace swe
