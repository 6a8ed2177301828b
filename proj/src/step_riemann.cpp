#include "swe/step_riemann.hpp"

#include <cmath>

#include "swe/errors.hpp"
#include "swe/rootfind.hpp"

namespace swe {

namespace {

// Depth of the intersection of the backward curve from `left` with the
// forward curve anchored at `right`. Both curves are strictly monotone in
// opposite senses, so the root is unique when it exists.
double intersect_w1_w2rev(const State& left, const State& right, Gravity grav) {
    auto f = [&](double h) {
        return wave_curve(WaveCurveKind::W1, left, h, grav) - w2_from_right(right, h, grav);
    };
    const double h_eps = 1e-12 * std::min(left.h, right.h);
    if (f(h_eps) <= 0.0)
        throw UnsupportedConfiguration("riemann: states separate into a dry bed (out of scope)");
    double hi = 2.0 * std::max(left.h, right.h);
    int guard = 0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw NumericalFailure("riemann: no wave-curve intersection", h_eps, hi);
    }
    return solve_bracketed(f, h_eps, hi);
}

void append_w1_wave(WaveFan& fan, const State& left, double h_mid, Gravity grav) {
    const double scale = std::max(1.0, left.h);
    if (std::abs(h_mid - left.h) <= 1e-13 * scale) return;  // zero strength
    const State mid{wave_curve(WaveCurveKind::W1, left, h_mid, grav), h_mid, left.a};
    if (h_mid < left.h)
        fan.waves.push_back(make_rarefaction(1, left, mid, grav));
    else
        fan.waves.push_back(make_shock(1, left, mid, grav));
}

void append_w2_wave(WaveFan& fan, const State& mid_in, const State& right, Gravity grav) {
    const double scale = std::max(1.0, right.h);
    State mid = mid_in;
    mid.a = right.a;
    if (std::abs(mid.h - right.h) <= 1e-13 * scale &&
        std::abs(mid.u - right.u) <= 1e-13 * std::max(1.0, std::abs(right.u)))
        return;
    if (mid.h < right.h)
        fan.waves.push_back(make_rarefaction(2, mid, right, grav));
    else
        fan.waves.push_back(make_shock(2, mid, right, grav));
}

State state_on_w1(const State& left, double h, Gravity grav) {
    return State{wave_curve(WaveCurveKind::W1, left, h, grav), h, left.a};
}

}  // namespace

FlatRiemannSolution solve_flat_riemann(const State& left, const State& right, Gravity grav) {
    validate_state(left);
    validate_state(right);
    const double h_mid = intersect_w1_w2rev(left, right, grav);
    FlatRiemannSolution sol;
    sol.middle = State{wave_curve(WaveCurveKind::W1, left, h_mid, grav), h_mid, left.a};
    append_w1_wave(sol.fan, left, h_mid, grav);
    append_w2_wave(sol.fan, sol.middle, right, grav);
    if (sol.fan.waves.empty()) {
        // identical states: represent the trivial solution by a zero-strength wave
        sol.fan.waves.push_back(make_rarefaction(2, sol.middle, right, grav));
    }
    return sol;
}

namespace {

struct Attempt {
    bool valid = false;
    WaveFan fan;
};

// All waves strictly downstream of the contact: requires a supercritical
// left state whose image keeps the backward wave moving right.
Attempt try_supercritical(const State& left, const State& right, Gravity grav) {
    Attempt out;
    const double c_l = celerity(left, grav);
    if (!(left.u >= c_l)) return out;
    if (right.a > a_max(left, grav)) return out;
    const StationaryRoots roots = stationary_roots(left, right.a, grav);
    if (roots.verdict == StationaryRoots::Verdict::NoSolution || !roots.supercritical) return out;
    const State image = left.a == right.a ? left : *roots.supercritical;
    const double h_mid = intersect_w1_w2rev(image, right, grav);
    if (h_mid > image.h) {  // backward wave is a shock; it must not re-cross the step
        if (shock_speed(1, image, h_mid, grav) < 0.0) return out;
    }
    out.valid = true;
    out.fan.waves.push_back(make_stationary(left, image));
    append_w1_wave(out.fan, image, h_mid, grav);
    append_w2_wave(out.fan, state_on_w1(image, h_mid, grav), right, grav);
    out.fan = prune_fan(out.fan, 1e-14);
    return out;
}

// Backward wave left of the step, forward wave right of it, subcritical
// trace at the step.
Attempt try_subcritical(const State& left, const State& right, Gravity grav) {
    Attempt out;
    auto subcritical_image = [&](double h_l) -> std::optional<State> {
        const State trace = state_on_w1(left, h_l, grav);
        if (right.a > a_max(trace, grav)) return std::nullopt;
        const StationaryRoots roots = stationary_roots(trace, right.a, grav);
        if (!roots.subcritical) return std::nullopt;
        return left.a == right.a ? trace : *roots.subcritical;
    };
    auto residual = [&](double h_l) -> double {
        const auto image = subcritical_image(h_l);
        if (!image) return std::nan("");
        return image->u - w2_from_right(right, image->h, grav);
    };

    auto accept_root = [&](double h_l) -> bool {
        const State trace = state_on_w1(left, h_l, grav);
        const double c_t = celerity(trace, grav);
        if (!(std::abs(trace.u) < c_t)) return false;
        const State image = *subcritical_image(h_l);
        // the backward wave must not spill over the contact
        const double head_speed =
            h_l < left.h ? eigenstructure(trace, grav).lambda1 : shock_speed(1, left, h_l, grav);
        if (head_speed > 1e-10) return false;
        out.valid = true;
        append_w1_wave(out.fan, left, h_l, grav);
        out.fan.waves.push_back(make_stationary(trace, image));
        append_w2_wave(out.fan, image, right, grav);
        out.fan = prune_fan(out.fan, 1e-14);
        return true;
    };

    // scan for sign changes; the residual can be undefined where the
    // contact ceases to exist
    const double lo = 1e-6 * std::min(left.h, right.h);
    const double hi = 64.0 * std::max(left.h, right.h);
    const int n = 600;
    double x_prev = lo;
    double f_prev = residual(lo);
    double best_x = std::nan("");
    double best_f = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n; ++i) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(i) / n);
        const double fx = residual(x);
        if (std::isfinite(fx) && fx > best_f) {
            best_f = fx;
            best_x = x;
        }
        if (std::isfinite(f_prev) && std::isfinite(fx) && (fx > 0.0) != (f_prev > 0.0)) {
            const double h_l = solve_bracketed([&](double h) { return residual(h); }, x_prev, x);
            if (accept_root(h_l)) return out;
        }
        x_prev = x;
        f_prev = fx;
    }

    // near-tangent window: the residual can peak just above zero between
    // scan points; chase the maximum and bracket around it
    if (std::isfinite(best_x) && best_f <= 0.0) {
        auto neg_nan = [&](double h) {
            const double r = residual(h);
            return std::isfinite(r) ? r : -std::numeric_limits<double>::infinity();
        };
        const double step = std::pow(hi / lo, 1.0 / n);
        const double peak = golden_max(neg_nan, best_x / step, best_x * step, 1e-14);
        if (neg_nan(peak) > 0.0) {
            for (const auto& bracket : {std::pair{best_x / step, peak}, std::pair{peak, best_x * step}}) {
                const double fa = residual(bracket.first);
                const double fb = residual(bracket.second);
                if (!std::isfinite(fa) || !std::isfinite(fb) || (fa > 0.0) == (fb > 0.0)) continue;
                const double h_l =
                    solve_bracketed([&](double h) { return residual(h); }, bracket.first, bracket.second);
                if (accept_root(h_l)) return out;
            }
        }
    }
    return out;
}

// Backward rarefaction down to exactly sonic, contact onto the
// supercritical branch, remaining waves downstream.
Attempt try_choked(const State& left, const State& right, Gravity grav) {
    Attempt out;
    const double c_l = celerity(left, grav);
    if (!(left.u < c_l)) return out;
    const State sonic = sonic_on_r1(left, grav);
    const StationaryRoots roots = stationary_roots(sonic, right.a, grav);
    if (roots.verdict == StationaryRoots::Verdict::NoSolution || !roots.supercritical) return out;
    const State image = *roots.supercritical;
    const double h_mid = intersect_w1_w2rev(image, right, grav);
    if (h_mid > image.h) {
        // a marginally negative speed only occurs on the stall boundary,
        // where this structure and the subcritical one coincide
        if (shock_speed(1, image, h_mid, grav) < -1e-8) return out;
    }
    out.valid = true;
    append_w1_wave(out.fan, left, sonic.h, grav);
    out.fan.waves.push_back(make_stationary(sonic, image));
    append_w1_wave(out.fan, image, h_mid, grav);
    append_w2_wave(out.fan, state_on_w1(image, h_mid, grav), right, grav);
    out.fan = prune_fan(out.fan, 1e-14);
    return out;
}

// Choked contact interrupted by a standing jump at an intermediate level:
// backward rarefaction to sonic, contact down to level a_mid on the
// supercritical branch, zero-speed jump, contact from a_mid to the
// downstream level on the subcritical branch, forward wave. The jump level
// is the unknown; the outflow must land on the forward curve into `right`.
Attempt try_resonant_attached(const State& left, const State& right, Gravity grav) {
    Attempt out;
    const double c_l = celerity(left, grav);
    if (!(left.u < c_l)) return out;
    State sonic;
    try {
        sonic = sonic_on_r1(left, grav);
    } catch (const UnsupportedConfiguration&) {
        return out;
    }

    struct Pieces {
        State upper;      // supercritical branch state at the jump level
        State companion;  // zero-speed jump partner
        State outflow;    // subcritical branch state at the downstream level
    };
    auto build = [&](double a_mid) -> std::optional<Pieces> {
        const StationaryRoots up = stationary_roots(sonic, a_mid, grav);
        if (!up.supercritical) return std::nullopt;
        Pieces p;
        p.upper = *up.supercritical;
        const auto h_comp = zero_speed_depth(1, p.upper, grav);
        if (!h_comp) return std::nullopt;
        p.companion = State{shock_u(1, p.upper, *h_comp, grav), *h_comp, a_mid};
        if (right.a > a_max(p.companion, grav)) return std::nullopt;
        const StationaryRoots down = stationary_roots(p.companion, right.a, grav);
        if (!down.subcritical) return std::nullopt;
        p.outflow = a_mid == right.a ? p.companion : *down.subcritical;
        return p;
    };
    auto residual = [&](double a_mid) -> double {
        const auto p = build(a_mid);
        if (!p) return std::nan("");
        return p->outflow.u - w2_from_right(right, p->outflow.h, grav);
    };

    const double a_lo = right.a;
    const double a_hi = left.a;
    const int n = 200;
    double x_prev = a_lo;
    double f_prev = residual(a_lo);
    double a_root = std::nan("");
    for (int i = 1; i <= n; ++i) {
        const double x = a_lo + (a_hi - a_lo) * i / n;
        const double fx = residual(x);
        if (std::isfinite(f_prev) && std::isfinite(fx) && (fx > 0.0) != (f_prev > 0.0)) {
            a_root = solve_bracketed([&](double a) { return residual(a); }, x_prev, x, 1e-14);
            break;
        }
        x_prev = x;
        f_prev = fx;
    }
    if (!std::isfinite(a_root)) return out;
    const auto p = build(a_root);
    if (!p) return out;

    out.valid = true;
    append_w1_wave(out.fan, left, sonic.h, grav);
    out.fan.waves.push_back(make_stationary(sonic, p->upper));
    out.fan.waves.push_back(make_shock(1, p->upper, p->companion, grav));
    out.fan.waves.push_back(make_stationary(p->companion, p->outflow));
    append_w2_wave(out.fan, p->outflow, right, grav);
    out.fan = prune_fan(out.fan, 1e-14);
    return out;
}

}  // namespace

std::optional<WaveFan> step_fan_supercritical(const State& left, const State& right, Gravity grav) {
    Attempt a = try_supercritical(left, right, grav);
    if (!a.valid) return std::nullopt;
    return a.fan;
}

std::optional<WaveFan> step_fan_subcritical(const State& left, const State& right, Gravity grav) {
    Attempt a = try_subcritical(left, right, grav);
    if (!a.valid) return std::nullopt;
    return a.fan;
}

std::optional<WaveFan> step_fan_choked(const State& left, const State& right, Gravity grav) {
    Attempt a = try_choked(left, right, grav);
    if (!a.valid) return std::nullopt;
    return a.fan;
}

std::optional<WaveFan> step_fan_resonant_attached(const State& left, const State& right, Gravity grav) {
    Attempt a = try_resonant_attached(left, right, grav);
    if (!a.valid) return std::nullopt;
    return a.fan;
}

std::optional<ChokedTransient> choked_transient(const State& left, const State& right, Gravity grav) {
    const double c_l = celerity(left, grav);
    if (!(left.u < c_l)) return std::nullopt;
    ChokedTransient out;
    out.sonic = sonic_on_r1(left, grav);
    const StationaryRoots roots = stationary_roots(out.sonic, right.a, grav);
    if (roots.verdict == StationaryRoots::Verdict::NoSolution || !roots.supercritical)
        return std::nullopt;
    out.image = *roots.supercritical;
    const double h_mid = intersect_w1_w2rev(out.image, right, grav);
    out.settled = state_on_w1(out.image, h_mid, grav);
    out.settled.a = right.a;
    out.sigma1 = h_mid > out.image.h ? shock_speed(1, out.image, h_mid, grav)
                                     : eigenstructure(out.settled, grav).lambda1;
    return out;
}

StepRiemannSolution solve_step_riemann(const State& left, const State& right, Gravity grav) {
    validate_state(left);
    validate_state(right);
    if (left.a < right.a)
        throw UnsupportedConfiguration("step riemann: requires a non-increasing bottom (reflect the data)");
    if (left.u < 0.0 || right.u < 0.0)
        throw UnsupportedConfiguration("step riemann: requires first-quadrant data");

    if (left.a == right.a) {
        FlatRiemannSolution flat = solve_flat_riemann(left, right, grav);
        const double c_m = celerity(flat.middle, grav);
        StepRiemannSolution sol;
        sol.structure = flat.middle.u > c_m ? StepStructure::SupercriticalTransparent
                                            : StepStructure::Subcritical;
        sol.fan = flat.fan;
        return sol;
    }

    Attempt a = try_supercritical(left, right, grav);
    if (a.valid) return {StepStructure::SupercriticalTransparent, a.fan};
    Attempt b = try_subcritical(left, right, grav);
    if (b.valid) return {StepStructure::Subcritical, b.fan};
    Attempt c = try_choked(left, right, grav);
    if (c.valid) return {StepStructure::Choked, c.fan};
    Attempt d = try_resonant_attached(left, right, grav);
    if (d.valid) return {StepStructure::ResonantAttached, d.fan};
    throw NumericalFailure("step riemann: no admissible wave structure found");
}

}  // namespace swe
