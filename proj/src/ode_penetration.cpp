#include "swe/ode_penetration.hpp"

#include <algorithm>
#include <cmath>

#include "swe/errors.hpp"
#include "swe/rootfind.hpp"

namespace swe {

namespace {

double fan_invariant(const FreeBoundarySetup& s, const State& st) {
    const double c = celerity(st, s.grav);
    return s.side == FreeBoundarySide::BackwardS1inR1 ? st.u + 2.0 * c : st.u - 2.0 * c;
}

// Fan-side velocity and ray slope at depth h, from the fan invariant.
double fan_u(const FreeBoundarySetup& s, double h) {
    const double c = std::sqrt(s.grav.g * h);
    const double k = fan_invariant(s, s.fan_head);
    return s.side == FreeBoundarySide::BackwardS1inR1 ? k - 2.0 * c : k + 2.0 * c;
}

double fan_ray_slope(const FreeBoundarySetup& s, double h) {
    const double c = std::sqrt(s.grav.g * h);
    const double u = fan_u(s, h);
    return s.side == FreeBoundarySide::BackwardS1inR1 ? u - c : u + c;
}

// Adaptive Simpson on a smooth integrand.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

void validate_setup(const FreeBoundarySetup& s) {
    if (s.side == FreeBoundarySide::S1inTransmittedR2)
        throw std::invalid_argument(
            "free boundary: the transmitted-fan problem mixes families; use solve_transmitted_shock");
    validate_state(s.behind);
    validate_state(s.fan_head);
    validate_state(s.fan_tail);
    if (!(s.t_fan < s.t_start))
        throw std::invalid_argument("free boundary: fan center must predate the shock start");
    if (!(s.t_start > 0.0)) throw std::invalid_argument("free boundary: anchor time must be positive");
    if (s.fan_head.h > s.fan_tail.h * (1.0 + 1e-12))
        throw std::invalid_argument("free boundary: fan head must be the shallow edge");
    if (!(s.behind.h > s.fan_head.h))
        throw std::invalid_argument("free boundary: behind depth must exceed the fan head depth");
    const double k_head = fan_invariant(s, s.fan_head);
    const double k_tail = fan_invariant(s, s.fan_tail);
    if (std::abs(k_head - k_tail) > 1e-12 * std::max(1.0, std::abs(k_head)))
        throw std::invalid_argument("free boundary: fan edges do not share the rarefaction invariant");
    const double x_pred = s.x_fan + fan_ray_slope(s, s.fan_head.h) * (s.t_start - s.t_fan);
    if (std::abs(x_pred - s.x_start) > 1e-6 * std::max(1.0, std::abs(s.x_start)))
        throw std::invalid_argument("free boundary: shock start is not on the fan head characteristic");
}

std::function<double(double, double)> reduce_to_h_ode(const FreeBoundarySetup& s) {
    validate_setup(s);
    const double hb = s.behind.h;
    const double t_fan = s.t_fan;
    return [hb, t_fan](double t, double h) {
        if (t <= t_fan) throw std::domain_error("reduced depth equation: t must exceed the fan time");
        return -2.0 / (3.0 * (t - t_fan)) * (h - std::sqrt(0.5 * (h + hb) * hb));
    };
}

PenetrationVerdict penetration_time(const FreeBoundarySetup& s) {
    validate_setup(s);
    const double hb = s.behind.h;
    const double h_end = s.fan_tail.h;
    const double g = s.grav.g;

    PenetrationVerdict out;
    const double tie = 1e-11 * std::max(1.0, hb);
    if (hb <= h_end + tie) {
        out.kind = PenetrationVerdict::Kind::Asymptote;
        const double c5 = std::sqrt(g * hb);
        out.value = s.side == FreeBoundarySide::BackwardS1inR1 ? s.behind.u - c5 : s.behind.u + c5;
        return out;
    }

    // integrand 3 / (sqrt(2 hb (h + hb)) - 2h) has a simple pole at h = hb
    // with residue 2; split it off and integrate the smooth remainder
    auto smooth_part = [hb](double h) {
        const double G = 3.0 * (std::sqrt(2.0 * hb * (h + hb)) + 2.0 * h) / (2.0 * (2.0 * h + hb));
        const double d = hb - h;
        if (std::abs(d) < 1e-9 * hb) {
            // removable limit of (G(h) - 2)/(hb - h): expand G about hb
            // G'(hb) = d/dh [3(sqrt(2hb(h+hb)) + 2h) / (2(2h+hb))]
            const double sq = 2.0 * hb;  // sqrt(2hb(h+hb)) at h = hb
            const double num_p = 3.0 * (hb / sq + 2.0);
            const double den = 2.0 * 3.0 * hb;
            const double g_p = (num_p * den - 3.0 * (sq + 2.0 * hb) * 4.0) / (den * den);
            return -g_p;
        }
        return (G - 2.0) / d;
    };
    const double integral = integrate_smooth(smooth_part, s.fan_head.h, h_end, 1e-13) +
                            2.0 * std::log((hb - s.fan_head.h) / (hb - h_end));
    out.kind = PenetrationVerdict::Kind::Crossed;
    out.value = s.t_fan + (s.t_start - s.t_fan) * std::exp(integral);
    return out;
}

OdeTrajectory integrate_free_boundary(const FreeBoundarySetup& s, double abs_tol, double rel_tol) {
    validate_setup(s);
    OdeTrajectory out;
    const double hb = s.behind.h;
    const double h_end = s.fan_tail.h;

    // integrate in the log-time variable: the depth equation becomes
    // autonomous, dh/ds = -(2/3)(h - sqrt((h + hb) hb / 2))
    auto rhs = [hb](double h) { return -(2.0 / 3.0) * (h - std::sqrt(0.5 * (h + hb) * hb)); };

    auto record = [&](double sv, double h) {
        const double t = s.t_fan + std::exp(sv);
        TrajectorySample smp;
        smp.t = t;
        smp.h = h;
        smp.u = fan_u(s, h);
        smp.x = s.x_fan + fan_ray_slope(s, h) * (t - s.t_fan);
        out.samples.push_back(smp);
    };

    double sv = std::log(s.t_start - s.t_fan);
    double h = s.fan_head.h;
    record(sv, h);

    const double tie = 1e-11 * std::max(1.0, hb);
    const bool can_cross = hb > h_end + tie;
    double ds = 1e-3;
    const double s_cap = sv + 80.0;  // ~e^80 fold of the elapsed time: treat as never
    // Cash-Karp 4(5) embedded pair
    static const double b5[6] = {37.0 / 378.0, 0.0, 250.0 / 621.0, 125.0 / 594.0, 0.0, 512.0 / 1771.0};
    static const double b4[6] = {2825.0 / 27648.0, 0.0,         18575.0 / 48384.0,
                                 13525.0 / 55296.0, 277.0 / 14336.0, 0.25};
    static const double a21 = 0.2;
    static const double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static const double a41 = 0.3, a42 = -0.9, a43 = 1.2;
    static const double a51 = -11.0 / 54.0, a52 = 2.5, a53 = -70.0 / 27.0, a54 = 35.0 / 27.0;
    static const double a61 = 1631.0 / 55296.0, a62 = 175.0 / 512.0, a63 = 575.0 / 13824.0,
                        a64 = 44275.0 / 110592.0, a65 = 253.0 / 4096.0;

    while (sv < s_cap) {
        const double k1 = rhs(h);
        const double k2 = rhs(h + ds * a21 * k1);
        const double k3 = rhs(h + ds * (a31 * k1 + a32 * k2));
        const double k4 = rhs(h + ds * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = rhs(h + ds * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = rhs(h + ds * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double h5 = h + ds * (b5[0] * k1 + b5[2] * k3 + b5[3] * k4 + b5[5] * k6);
        const double h4 = h + ds * (b4[0] * k1 + b4[2] * k3 + b4[3] * k4 + b4[4] * k5 + b4[5] * k6);
        const double err = std::abs(h5 - h4);
        const double tol = abs_tol + rel_tol * std::abs(h5);
        if (err > tol) {
            ds *= std::max(0.2, 0.9 * std::pow(tol / err, 0.25));
            continue;
        }
        if (can_cross && h5 >= h_end) {
            // locate the crossing inside the step by bisection on ds
            double lo = 0.0, hi = ds;
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (lo + hi);
                const double km1 = rhs(h);
                const double km2 = rhs(h + mid * a21 * km1);
                const double km3 = rhs(h + mid * (a31 * km1 + a32 * km2));
                const double km4 = rhs(h + mid * (a41 * km1 + a42 * km2 + a43 * km3));
                const double km5 = rhs(h + mid * (a51 * km1 + a52 * km2 + a53 * km3 + a54 * km4));
                const double km6 =
                    rhs(h + mid * (a61 * km1 + a62 * km2 + a63 * km3 + a64 * km4 + a65 * km5));
                const double hm =
                    h + mid * (b5[0] * km1 + b5[2] * km3 + b5[3] * km4 + b5[5] * km6);
                if (hm >= h_end) hi = mid;
                else lo = mid;
            }
            sv += hi;
            record(sv, h_end);
            out.verdict.kind = PenetrationVerdict::Kind::Crossed;
            out.verdict.value = s.t_fan + std::exp(sv);
            return out;
        }
        sv += ds;
        h = h5;
        record(sv, h);
        if (err > 0.0) ds *= std::min(5.0, 0.9 * std::pow(tol / err, 0.2));
        if (std::abs(h - hb) < 1e-12 * std::max(1.0, hb)) break;  // stalled at the fixed point
    }
    out.verdict.kind = PenetrationVerdict::Kind::Asymptote;
    const double c5 = std::sqrt(s.grav.g * hb);
    out.verdict.value =
        s.side == FreeBoundarySide::BackwardS1inR1 ? s.behind.u - c5 : s.behind.u + c5;
    return out;
}

// ---------------------------------------------------------------------------
// Transmitted-fan machinery: emission field and characteristic tracing.
// ---------------------------------------------------------------------------

namespace {

// Field right of the step during the interaction, modeled as straight
// forward characteristics carrying the contact images of the arriving
// states. tau parameterizes the arrival time at the step. Images are
// tabulated once so field queries stay cheap inside the tracing loops.
class EmissionField {
  public:
    explicit EmissionField(const ScenarioRS& sc, int table_size = 1024) : sc_(sc), g_(sc.grav) {
        const auto window = rs_arrival_window(sc);
        tau_head_ = window.first;
        tau_tail_ = window.second;
        taus_.reserve(table_size + 1);
        images_.reserve(table_size + 1);
        lam2_.reserve(table_size + 1);
        for (int i = 0; i <= table_size; ++i) {
            const double tau = tau_head_ + (tau_tail_ - tau_head_) * i / table_size;
            const State img = image_of(tau);
            taus_.push_back(tau);
            images_.push_back(img);
            lam2_.push_back(img.u + celerity(img, g_));
        }
    }

    double tau_head() const { return tau_head_; }
    double tau_tail() const { return tau_tail_; }
    const State& terminal_image() const { return images_.back(); }

    // Contact image of the state arriving at the step at time tau. Once
    // the arriving state is subcritical the trace chokes: the image is the
    // supercritical partner of the sonic state on its backward curve.
    State image_of(double tau) const {
        const double xi = (sc_.x2 - sc_.x1) / tau;
        const double k = sc_.u_mid.u - 2.0 * celerity(sc_.u_mid, g_);
        const double c0 = (xi - k) / 3.0;
        if (c0 <= 0.0) throw NumericalFailure("emission field: characteristic misses the incident fan");
        State u0{xi - c0, c0 * c0 / g_.g, sc_.a0()};
        if (u0.u < c0) u0 = sonic_on_r1(u0, g_);
        const StationaryRoots roots = stationary_roots(u0, sc_.a1(), g_);
        if (!roots.supercritical)
            throw NumericalFailure("emission field: no supercritical partner along the incident fan");
        return *roots.supercritical;
    }

    // State at (x, t): constant ahead of the first forward ray, terminal
    // behind the last, otherwise the tabulated image whose ray passes
    // through the point.
    State at(double x, double t) const {
        auto ray_gap = [&](size_t i) { return sc_.x2 + lam2_[i] * (t - taus_[i]) - x; };
        if (t <= tau_head_ || ray_gap(0) <= 0.0) return sc_.u_plus;
        size_t hi = taus_.size() - 1;
        if (t <= tau_tail_) {
            // only rays already emitted count
            hi = static_cast<size_t>((t - tau_head_) / (tau_tail_ - tau_head_) * (taus_.size() - 1));
            hi = std::min(hi, taus_.size() - 1);
        }
        if (hi == 0 || ray_gap(hi) >= 0.0) return images_[hi];
        size_t lo = 0;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            (ray_gap(mid) > 0.0 ? lo : hi) = mid;
        }
        const double glo = ray_gap(lo);
        const double ghi = ray_gap(hi);
        const double w = glo - ghi == 0.0 ? 0.5 : glo / (glo - ghi);
        State out;
        out.u = images_[lo].u + w * (images_[hi].u - images_[lo].u);
        out.h = images_[lo].h + w * (images_[hi].h - images_[lo].h);
        out.a = sc_.a1();
        return out;
    }

  private:
    ScenarioRS sc_;
    Gravity g_;
    double tau_head_ = 0.0;
    double tau_tail_ = 0.0;
    std::vector<double> taus_;
    std::vector<State> images_;
    std::vector<double> lam2_;
};

// Backward characteristic from (x2, tau) sampled on a shared time grid;
// NaN before the emission time. The characteristic carries its own
// backward invariant from emission, while the forward invariant comes
// from the emission field it crosses; dropping either transport removes
// the compression that focuses these characteristics.
std::vector<double> trace_backward_char(const EmissionField& field, const ScenarioRS& sc,
                                        double tau, const std::vector<double>& grid) {
    std::vector<double> xs(grid.size(), std::nan(""));
    const Gravity g = sc.grav;
    const State emitted = tau >= field.tau_head() ? field.image_of(tau) : sc.u_plus;
    const double v_own = emitted.u - 2.0 * celerity(emitted, g);
    auto slope = [&](double xx, double tt) {
        const State s = field.at(xx, tt);
        const double w_field = s.u + 2.0 * celerity(s, g);
        // u - c written from the pair of invariants
        return 0.25 * w_field + 0.75 * v_own;
    };
    double x = sc.x2;
    double t = tau;
    auto rk4_to = [&](double t_next) {
        const double dt = t_next - t;
        if (dt <= 0.0) return;
        const double k1 = slope(x, t);
        const double k2 = slope(x + 0.5 * dt * k1, t + 0.5 * dt);
        const double k3 = slope(x + 0.5 * dt * k2, t + 0.5 * dt);
        const double k4 = slope(x + dt * k3, t + dt);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t_next;
    };
    for (size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < tau) continue;
        rk4_to(grid[i]);
        xs[i] = x;
    }
    return xs;
}

// First grid time at which the later-emitted path overtakes the earlier
// one; nan when it never does.
double first_crossing(const std::vector<double>& grid, const std::vector<double>& early,
                      const std::vector<double>& late) {
    for (size_t i = 1; i < grid.size(); ++i) {
        if (!std::isfinite(early[i]) || !std::isfinite(late[i])) continue;
        const double gap = early[i] - late[i];
        if (gap <= 0.0) {
            if (i > 0 && std::isfinite(early[i - 1]) && std::isfinite(late[i - 1])) {
                const double gap_prev = early[i - 1] - late[i - 1];
                if (gap_prev > 0.0) {
                    const double w = gap_prev / (gap_prev - gap);
                    return grid[i - 1] + w * (grid[i] - grid[i - 1]);
                }
            }
            return grid[i];
        }
    }
    return std::nan("");
}

}  // namespace

std::optional<EnvelopePoint> find_envelope(const ScenarioRS& sc, int n_chars) {
    const EmissionField field(sc);
    const double tau_head = field.tau_head();
    const double tau_tail = field.tau_tail();
    // adjacent characteristics close at a rate set by the spread of the
    // backward invariant, which can be slow; give the tracer a long leash
    const double horizon = tau_tail + 100.0 * (tau_tail - tau_head) + 100.0 * tau_tail;
    const int steps = 2000;

    std::vector<double> grid(steps + 1);
    const double lo = 0.25 * tau_head;
    for (int i = 0; i <= steps; ++i)
        grid[i] = lo + (horizon - lo) * static_cast<double>(i) / steps;

    // sample emission parameters, including a stretch of the undisturbed
    // region ahead of the interaction
    std::vector<double> taus;
    taus.reserve(n_chars);
    for (int i = 0; i < n_chars; ++i)
        taus.push_back(lo + (tau_tail - lo) * static_cast<double>(i) / (n_chars - 1));

    std::vector<std::vector<double>> paths;
    paths.reserve(taus.size());
    for (double tau : taus) paths.push_back(trace_backward_char(field, sc, tau, grid));

    double best_t = std::numeric_limits<double>::infinity();
    size_t best_i = 0;
    for (size_t i = 0; i + 1 < paths.size(); ++i) {
        const double t = first_crossing(grid, paths[i], paths[i + 1]);
        if (std::isfinite(t) && t < best_t) {
            best_t = t;
            best_i = i;
        }
    }
    if (!std::isfinite(best_t)) return std::nullopt;

    // refine by subdividing the emission parameter around the earliest pair
    double tau_lo = taus[best_i];
    double tau_hi = taus[best_i + 1];
    auto path_lo = paths[best_i];
    auto path_hi = paths[best_i + 1];
    for (int it = 0; it < 60; ++it) {
        const double tau_mid = 0.5 * (tau_lo + tau_hi);
        auto path_mid = trace_backward_char(field, sc, tau_mid, grid);
        const double t_left = first_crossing(grid, path_lo, path_mid);
        const double t_right = first_crossing(grid, path_mid, path_hi);
        double t_new;
        if (std::isfinite(t_left) && (!std::isfinite(t_right) || t_left <= t_right)) {
            tau_hi = tau_mid;
            path_hi = std::move(path_mid);
            t_new = t_left;
        } else if (std::isfinite(t_right)) {
            tau_lo = tau_mid;
            path_lo = std::move(path_mid);
            t_new = t_right;
        } else {
            break;
        }
        const bool converged = std::abs(t_new - best_t) < 1e-8 * std::max(1.0, best_t);
        best_t = std::min(best_t, t_new);
        if (converged) break;
    }

    // envelope position from the refined path at the crossing time
    EnvelopePoint e;
    e.t_e = best_t;
    double x_e = std::nan("");
    for (size_t j = 1; j < grid.size(); ++j) {
        if (grid[j] >= best_t && std::isfinite(path_lo[j]) && std::isfinite(path_lo[j - 1])) {
            const double w = (best_t - grid[j - 1]) / (grid[j] - grid[j - 1]);
            x_e = path_lo[j - 1] + w * (path_lo[j] - path_lo[j - 1]);
            break;
        }
    }
    if (!std::isfinite(x_e)) return std::nullopt;
    e.x_e = x_e;
    return e;
}

OdeTrajectory solve_transmitted_shock(const ScenarioRS& sc, int n_chars) {
    const RsCaseLabel label = classify_rs_case(sc);
    switch (label) {
        case RsCaseLabel::Case1:
        case RsCaseLabel::Case2_1:
        case RsCaseLabel::Case2_2:
        case RsCaseLabel::Case3_1:
        case RsCaseLabel::Case3_2:
            break;
        default:
            throw UnsupportedConfiguration(
                "solve_transmitted_shock: the backward wave reflects left of the step in this case");
    }
    const Gravity g = sc.grav;
    const EmissionField field(sc);

    // terminal backward shock of the large-time configuration
    const WaveFan fan = rs_large_time(sc);
    double sigma_term = 0.0;
    bool have_term = false;
    for (const Wave& w : fan.waves) {
        if (w.family == WaveFamily::S1) {
            sigma_term = w.speed_lo;
            have_term = true;
        }
    }
    if (!have_term)
        throw NumericalFailure("solve_transmitted_shock: large-time fan carries no backward shock");

    const auto envelope = find_envelope(sc, n_chars);
    OdeTrajectory out;

    double x, t;
    if (envelope) {
        x = envelope->x_e;
        t = envelope->t_e;
    } else {
        // compression too weak to focus inside the window: the shock forms
        // in the settled region and runs at its terminal speed
        x = sc.x2;
        t = field.tau_tail();
    }

    const double t_end = t + 6.0 * std::max(field.tau_tail() - field.tau_head(), field.tau_tail());
    const int steps = 1200;
    const double dt = (t_end - t) / steps;

    auto right_state = [&](const State& left) -> State {
        // shock partner on the forward curve through U_plus
        auto f = [&](double h) {
            return shock_u(1, left, h, g) - rarefaction_u(2, sc.u_plus, h, g);
        };
        double lo = left.h;
        if (f(lo) <= 0.0) return left;  // zero-strength at birth
        double hi = std::max(2.0 * left.h, 2.0 * sc.u_plus.h);
        int guard = 0;
        while (f(hi) > 0.0 && guard++ < 100) hi *= 2.0;
        const double h = solve_bracketed(f, lo, hi, 1e-14);
        return State{rarefaction_u(2, sc.u_plus, h, g), h, sc.a1()};
    };

    auto speed = [&](double xx, double tt) -> std::pair<double, State> {
        const State left = field.at(xx, tt);
        const State right = right_state(left);
        const double sig = right.h > left.h * (1.0 + 1e-13)
                               ? shock_speed(1, left, right.h, g)
                               : eigenstructure(left, g).lambda1;
        return {sig, right};
    };

    for (int i = 0; i <= steps; ++i) {
        const auto [sig, right] = speed(x, t);
        TrajectorySample smp;
        smp.t = t;
        smp.x = x;
        smp.h = right.h;
        smp.u = right.u;
        out.samples.push_back(smp);
        if (i == steps) break;
        const double k1 = sig;
        const double k2 = speed(x + 0.5 * dt * k1, t + 0.5 * dt).first;
        const double k3 = speed(x + 0.5 * dt * k2, t + 0.5 * dt).first;
        const double k4 = speed(x + dt * k3, t + dt).first;
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
    }

    out.verdict.kind = PenetrationVerdict::Kind::Asymptote;
    out.verdict.value = sigma_term;
    return out;
}

RsPenetrationSetups rs_penetration_setups(const ScenarioRS& sc, double t_touch) {
    const RsCaseLabel label = classify_rs_case(sc);
    if (label != RsCaseLabel::Case3_3 && label != RsCaseLabel::Case3_4)
        throw UnsupportedConfiguration(
            "rs_penetration_setups: only a stalled transmitted shock returns to the step");
    const Gravity g = sc.grav;
    const auto fan = step_fan_subcritical(sc.u_minus, sc.u_plus, g);
    const auto transient = choked_transient(sc.u_minus, sc.u_plus, g);
    if (!fan || !transient)
        throw NumericalFailure("rs_penetration_setups: settled configuration unavailable");
    State behind_left, behind_right;
    for (const Wave& w : fan->waves) {
        if (w.family == WaveFamily::S0) {
            behind_left = w.left;
            behind_right = w.right;
        }
    }

    const auto window = rs_arrival_window(sc);
    const double t_fan = 0.5 * (window.first + window.second);
    if (!(t_touch > t_fan))
        throw std::invalid_argument("rs_penetration_setups: touch time precedes the fan center");

    RsPenetrationSetups out;
    out.backward.side = FreeBoundarySide::BackwardS1inR1;
    out.backward.grav = g;
    out.backward.fan_head = sonic_on_r1(sc.u_minus, g);
    out.backward.fan_tail = sc.u_minus;
    out.backward.behind = behind_left;
    out.backward.x_fan = sc.x2;
    out.backward.t_fan = t_fan;
    out.backward.t_start = t_touch;
    {
        const double c = celerity(out.backward.fan_head, g);
        out.backward.x_start = sc.x2 + (out.backward.fan_head.u - c) * (t_touch - t_fan);
    }

    out.forward.side = FreeBoundarySide::ForwardS2inR2;
    out.forward.grav = g;
    out.forward.fan_head = transient->settled;
    out.forward.fan_tail = sc.u_plus;
    out.forward.behind = behind_right;
    out.forward.x_fan = sc.x2;
    out.forward.t_fan = t_fan;
    out.forward.t_start = t_touch;
    {
        const double c = celerity(out.forward.fan_head, g);
        out.forward.x_start = sc.x2 + (out.forward.fan_head.u + c) * (t_touch - t_fan);
    }
    return out;
}

}  // namespace swe
