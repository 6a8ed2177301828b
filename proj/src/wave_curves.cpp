#include "swe/wave_curves.hpp"

#include <algorithm>
#include <cmath>

#include "swe/errors.hpp"
#include "swe/rootfind.hpp"

namespace swe {

const char* to_string(WaveFamily f) {
    switch (f) {
        case WaveFamily::R1: return "R1";
        case WaveFamily::R2: return "R2";
        case WaveFamily::S1: return "S1";
        case WaveFamily::S2: return "S2";
        case WaveFamily::S0: return "S0";
    }
    return "?";
}

static void check_family12(int family) {
    if (family != 1 && family != 2)
        throw std::invalid_argument("wave family must be 1 or 2");
}

double rarefaction_u(int family, const State& u0, double h, Gravity grav) {
    check_family12(family);
    validate_state(u0);
    if (h < 0.0) throw std::domain_error("rarefaction_u: negative depth");
    const double sg = std::sqrt(grav.g);
    const double d = 2.0 * sg * (std::sqrt(h) - std::sqrt(u0.h));
    return family == 1 ? u0.u - d : u0.u + d;
}

AxisIntercept rarefaction_axis_intercept(const State& u0, Gravity grav) {
    validate_state(u0);
    if (u0.u < 0.0) throw std::domain_error("rarefaction_axis_intercept: requires u0 >= 0");
    const double c0 = celerity(u0, grav);
    AxisIntercept out;
    if (u0.u == 2.0 * c0) {
        out.axis = AxisIntercept::Axis::Origin;
        out.value = 0.0;
    } else if (u0.u < 2.0 * c0) {
        out.axis = AxisIntercept::Axis::HAxis;
        const double r = std::sqrt(u0.h) - 0.5 * u0.u / std::sqrt(grav.g);
        out.value = r * r;
    } else {
        out.axis = AxisIntercept::Axis::UAxis;
        out.value = u0.u - 2.0 * c0;
    }
    return out;
}

static double hugoniot_jump(double h, double h0, double g) {
    const double dh = h - h0;
    return std::sqrt(0.5 * g * dh * dh * (1.0 / h + 1.0 / h0));
}

double shock_u(int family, const State& u0, double h, Gravity grav) {
    check_family12(family);
    validate_state(u0);
    if (!(h > 0.0)) throw std::domain_error("shock_u: depth must be positive");
    if (family == 1 && h < u0.h)
        throw std::domain_error("shock_u: family-1 branch requires h >= h0");
    if (family == 2 && h > u0.h)
        throw std::domain_error("shock_u: family-2 branch requires h <= h0");
    return u0.u - hugoniot_jump(h, u0.h, grav.g);
}

double shock_u_from_right(int family, const State& ur, double h, Gravity grav) {
    check_family12(family);
    validate_state(ur);
    if (!(h > 0.0)) throw std::domain_error("shock_u_from_right: depth must be positive");
    if (family == 1 && h > ur.h)
        throw std::domain_error("shock_u_from_right: family-1 branch requires h <= hr");
    if (family == 2 && h < ur.h)
        throw std::domain_error("shock_u_from_right: family-2 branch requires h >= hr");
    return ur.u + hugoniot_jump(h, ur.h, grav.g);
}

double shock_speed(int family, const State& u0, double h, Gravity grav) {
    check_family12(family);
    validate_state(u0);
    if (!(h > 0.0)) throw std::domain_error("shock_speed: depth must be positive");
    const double s = std::sqrt(0.5 * grav.g * (h + u0.h) * h / u0.h);
    return family == 1 ? u0.u - s : u0.u + s;
}

double shock_speed(int family, const State& u0, const State& u, Gravity grav) {
    return shock_speed(family, u0, u.h, grav);
}

std::optional<double> zero_speed_depth(int family, const State& u0, Gravity grav) {
    check_family12(family);
    validate_state(u0);
    const double c0 = celerity(u0, grav);
    if (family == 1) {
        if (!(u0.u > c0)) return std::nullopt;  // speed stays negative outside D3
        // speed decreases from u0 - c0 > 0 toward -inf as h grows
        auto f = [&](double h) { return shock_speed(1, u0, h, grav); };
        double hi = 2.0 * u0.h;
        while (f(hi) > 0.0) hi *= 2.0;
        return solve_bracketed(f, u0.h, hi);
    }
    if (!(u0.u < -c0)) return std::nullopt;
    auto f = [&](double h) { return shock_speed(2, u0, h, grav); };
    double hi = 2.0 * u0.h;
    while (f(hi) < 0.0) hi *= 2.0;
    return solve_bracketed(f, u0.h, hi);
}

std::optional<State> zero_speed_state(int family, const State& u0, Gravity grav) {
    const auto h = zero_speed_depth(family, u0, grav);
    if (!h) return std::nullopt;
    return State{shock_u(family, u0, *h, grav), *h, u0.a};
}

bool lax_admissible(int family, const State& u0, const State& u, Gravity grav, double tol) {
    check_family12(family);
    const double sigma = shock_speed(family, u0, u.h, grav);
    const double lam_l = family == 1 ? eigenstructure(u0, grav).lambda1 : eigenstructure(u0, grav).lambda2;
    const double lam_r = family == 1 ? eigenstructure(u, grav).lambda1 : eigenstructure(u, grav).lambda2;
    const double band = tol * std::max(1.0, std::abs(sigma));
    return lam_r < sigma + band && sigma < lam_l + band;
}

double a_max(const State& u0, Gravity grav) {
    validate_state(u0);
    const double g = grav.g;
    const double q = u0.h * u0.u;
    return u0.a + u0.h + 0.5 * u0.u * u0.u / g - 1.5 * std::cbrt(q * q / g);
}

/// Residual of the stationary-contact energy relation at trial depth h:
/// zero exactly on the contact curve through U0 at level a1.
static double stationary_residual(double h, double q, double head, double a1, double g) {
    return 0.5 * q * q / (g * h * h) + h + a1 - head;
}

StationaryRoots stationary_roots(const State& u0, double a1, Gravity grav, double double_root_tol) {
    validate_state(u0);
    const double g = grav.g;
    const double q = u0.h * u0.u;
    const double head = 0.5 * u0.u * u0.u / g + u0.h + u0.a;  // total head, bounds h

    StationaryRoots out;

    if (q == 0.0) {
        // the contact relations degenerate to a single root at rest
        const double h = head - a1;
        out.critical_depth = 0.0;
        if (h <= 0.0) {
            out.verdict = StationaryRoots::Verdict::NoSolution;
            return out;
        }
        out.verdict = StationaryRoots::Verdict::TwoRoots;
        out.subcritical = State{0.0, h, a1};
        return out;
    }

    const double h_c = std::cbrt(q * q / g);
    out.critical_depth = h_c;
    const double amax = head - 1.5 * h_c;
    const double tol = double_root_tol * std::max(1.0, std::abs(amax));
    if (a1 > amax + tol) {
        out.verdict = StationaryRoots::Verdict::NoSolution;
        return out;
    }
    if (std::abs(a1 - amax) <= tol) {
        out.verdict = StationaryRoots::Verdict::DoubleRoot;
        const State root{q / h_c, h_c, a1};
        out.supercritical = root;
        out.subcritical = root;
        return out;
    }

    auto res = [&](double h) { return stationary_residual(h, q, head, a1, g); };

    // supercritical root in (0, h_c): residual runs from +inf down to a
    // negative minimum at h_c
    double lo = h_c;
    do { lo *= 0.5; } while (res(lo) < 0.0);
    const double h_super = solve_bracketed(res, lo, h_c);

    // subcritical root in (h_c, head - a1]; pad the head bound so rounding
    // cannot put the endpoint residual below zero
    double hi = std::max((head - a1) * (1.0 + 1e-12), h_c * (1.0 + 1e-12));
    for (int guard = 0; res(hi) < 0.0 && guard < 60; ++guard) hi *= 1.0 + 1e-10;
    const double h_sub = solve_bracketed(res, h_c, hi);

    out.verdict = StationaryRoots::Verdict::TwoRoots;
    out.supercritical = State{q / h_super, h_super, a1};
    out.subcritical = State{q / h_sub, h_sub, a1};
    return out;
}

State stationary_select(const State& u0, double a1, Gravity grav) {
    if (a1 == u0.a) return u0;  // identity jump, kept bit-exact
    const StationaryRoots roots = stationary_roots(u0, a1, grav);
    if (roots.verdict == StationaryRoots::Verdict::NoSolution)
        throw UnsupportedConfiguration("stationary_select: no stationary contact (resonance breakdown)");
    if (roots.verdict == StationaryRoots::Verdict::DoubleRoot) return *roots.supercritical;
    const DomainLabel dom = classify_domain(u0, grav);
    switch (dom) {
        case DomainLabel::D1:
        case DomainLabel::D3:
            return *roots.supercritical;
        case DomainLabel::D2plus:
        case DomainLabel::D2minus:
            return *roots.subcritical;
        case DomainLabel::GammaPlus:
        case DomainLabel::GammaMinus:
            // choked flow continues on the supercritical branch when the
            // bottom drops, and is the identity when it does not
            if (a1 < u0.a && roots.supercritical) return *roots.supercritical;
            return roots.subcritical ? *roots.subcritical : *roots.supercritical;
    }
    throw std::logic_error("stationary_select: unreachable");
}

StationaryDerivatives stationary_curve_derivatives(const State& u, Gravity grav) {
    validate_state(u);
    if (u.u == 0.0)
        throw std::domain_error("stationary_curve_derivatives: u-parameterized forms undefined at u = 0");
    StationaryDerivatives d;
    const double g = grav.g;
    d.dh_du = -u.h / u.u;
    d.da_dh = (u.u * u.u - g * u.h) / (g * u.h);
    d.da_du = -(u.u * u.u - g * u.h) / (g * u.u);
    return d;
}

double wave_curve(WaveCurveKind kind, const State& u0, double h, Gravity grav) {
    validate_state(u0);
    if (!(h > 0.0)) throw std::domain_error("wave_curve: depth must be positive");
    if (kind == WaveCurveKind::W1)
        return h < u0.h ? rarefaction_u(1, u0, h, grav) : shock_u(1, u0, h, grav);
    return h > u0.h ? rarefaction_u(2, u0, h, grav) : shock_u(2, u0, h, grav);
}

double w2_from_right(const State& ur, double h, Gravity grav) {
    validate_state(ur);
    if (!(h > 0.0)) throw std::domain_error("w2_from_right: depth must be positive");
    if (h <= ur.h) return rarefaction_u(2, ur, h, grav);  // same invariant either way round
    return shock_u_from_right(2, ur, h, grav);
}

double w1_from_right(const State& ur, double h, Gravity grav) {
    validate_state(ur);
    if (!(h > 0.0)) throw std::domain_error("w1_from_right: depth must be positive");
    if (h >= ur.h) return rarefaction_u(1, ur, h, grav);
    return shock_u_from_right(1, ur, h, grav);
}

State sonic_on_r1(const State& left, Gravity grav) {
    validate_state(left);
    const double invariant = left.u + 2.0 * celerity(left, grav);
    if (invariant <= 0.0)
        throw UnsupportedConfiguration("sonic_on_r1: backward invariant not positive, no sonic point");
    const double c = invariant / 3.0;
    return State{c, c * c / grav.g, left.a};
}

std::vector<CurveSample> sample_wave_curve(WaveCurveKind kind, const State& u0, Gravity grav,
                                           int n_per_branch) {
    std::vector<CurveSample> out;
    out.reserve(2 * n_per_branch);
    for (int i = 1; i <= 2 * n_per_branch; ++i) {
        // proportional grid: the lower branch lands on exact fractions of
        // the anchor depth
        double h;
        if (i <= n_per_branch)
            h = u0.h * static_cast<double>(i) / n_per_branch;
        else
            h = u0.h * (1.0 + 7.0 * static_cast<double>(i - n_per_branch) / n_per_branch);
        CurveSample s;
        s.param = h;
        s.h = h;
        s.a = u0.a;
        s.u = wave_curve(kind, u0, h, grav);
        const bool lower = h < u0.h;
        if (kind == WaveCurveKind::W1)
            s.branch = lower ? "R1" : "S1";
        else
            s.branch = lower ? "S2" : "R2";
        out.push_back(s);
    }
    return out;
}

std::vector<CurveSample> sample_stationary_curve(const State& u0, Gravity grav, int n) {
    std::vector<CurveSample> out;
    out.reserve(n + 1);
    const double top = a_max(u0, grav);
    const double lo = u0.a - (top - u0.a) - 1.0;  // symmetric span below the anchor level
    for (int i = 0; i <= n; ++i) {
        const double a1 = lo + (top - lo) * static_cast<double>(i) / n;
        StationaryRoots roots = stationary_roots(u0, a1, grav);
        if (roots.verdict == StationaryRoots::Verdict::NoSolution) continue;
        const State sel = stationary_select(u0, a1, grav);
        CurveSample s;
        s.param = a1;
        s.u = sel.u;
        s.h = sel.h;
        s.a = a1;
        s.branch = "S0";
        out.push_back(s);
    }
    return out;
}

}  // namespace swe
