#include "swe/fv_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "swe/errors.hpp"

namespace swe {

namespace {

struct Flux {
    double mass = 0.0;
    double momentum = 0.0;
};

Flux physical_flux(double h, double hu, double g) {
    if (h <= 0.0) return {0.0, 0.0};
    const double u = hu / h;
    return {hu, hu * u + 0.5 * g * h * h};
}

// HLL flux on the hydrostatically reconstructed interface states.
Flux hll_flux(double h_l, double hu_l, double h_r, double hu_r, double g) {
    const double u_l = h_l > 0.0 ? hu_l / h_l : 0.0;
    const double u_r = h_r > 0.0 ? hu_r / h_r : 0.0;
    const double c_l = h_l > 0.0 ? std::sqrt(g * h_l) : 0.0;
    const double c_r = h_r > 0.0 ? std::sqrt(g * h_r) : 0.0;
    const double s_l = std::min(u_l - c_l, u_r - c_r);
    const double s_r = std::max(u_l + c_l, u_r + c_r);
    const Flux f_l = physical_flux(h_l, hu_l, g);
    const Flux f_r = physical_flux(h_r, hu_r, g);
    if (s_l >= 0.0) return f_l;
    if (s_r <= 0.0) return f_r;
    const double inv = 1.0 / (s_r - s_l);
    Flux f;
    f.mass = (s_r * f_l.mass - s_l * f_r.mass + s_l * s_r * (h_r - h_l)) * inv;
    f.momentum = (s_r * f_l.momentum - s_l * f_r.momentum + s_l * s_r * (hu_r - hu_l)) * inv;
    return f;
}

}  // namespace

FvField fv_init(const ThreeStateData& data, const FvConfig& config) {
    if (config.cells < 100) throw std::invalid_argument("fv: needs at least 100 cells");
    if (!(config.cfl > 0.0 && config.cfl < 1.0)) throw std::invalid_argument("fv: cfl must be in (0,1)");
    if (!(config.x_lo < data.x1 && data.x1 < data.x2 && data.x2 < config.x_hi))
        throw std::invalid_argument("fv: domain must contain x1 < x2");
    FvField f;
    f.dx = (config.x_hi - config.x_lo) / config.cells;
    f.x_lo = config.x_lo;
    f.t = 0.0;
    f.h.resize(config.cells);
    f.hu.resize(config.cells);
    f.a.resize(config.cells);
    // snap the bottom step to the interface nearest x2
    const double x2_snapped =
        config.x_lo + std::round((data.x2 - config.x_lo) / f.dx) * f.dx;
    const double w = config.step_ramp;
    for (int i = 0; i < config.cells; ++i) {
        const double x = f.x_center(i);
        const State& s = x < data.x1 ? data.left : (x < x2_snapped ? data.mid : data.right);
        f.h[i] = s.h;
        f.hu[i] = s.h * s.u;
        f.a[i] = s.a;
        if (w > 0.0 && x >= data.x1 && std::abs(x - x2_snapped) < w) {
            // resolved ramp carrying the steady contact profile of the data
            const double r = std::clamp((x - x2_snapped) / (2.0 * w) + 0.5, 0.0, 1.0);
            const double a_cell = data.mid.a + (data.right.a - data.mid.a) * r;
            const State steady = stationary_select(data.mid, a_cell, config.grav);
            f.h[i] = steady.h;
            f.hu[i] = steady.h * steady.u;
            f.a[i] = a_cell;
        }
    }
    return f;
}

double fv_step(FvField& field, const FvConfig& config, double dt_cap) {
    const double g = config.grav.g;
    const int n = field.cells();
    const double dx = field.dx;

    double max_speed = 0.0;
    for (int i = 0; i < n; ++i) {
        if (field.h[i] <= 0.0) continue;
        const double u = field.hu[i] / field.h[i];
        max_speed = std::max(max_speed, std::abs(u) + std::sqrt(g * field.h[i]));
    }
    if (max_speed <= 0.0) max_speed = 1.0;
    const double dt = std::min(config.cfl * dx / max_speed, dt_cap);

    auto cell = [&](int i) -> std::array<double, 3> {
        const int j = std::clamp(i, 0, n - 1);  // transmissive ghosts
        return {field.h[j], field.hu[j], field.a[j]};
    };

    std::vector<double> dh(n, 0.0), dhu(n, 0.0);
    for (int i = -1; i < n; ++i) {
        const auto L = cell(i);
        const auto R = cell(i + 1);
        const double a_face = std::max(L[2], R[2]);
        const double h_l = std::max(0.0, L[0] + L[2] - a_face);
        const double h_r = std::max(0.0, R[0] + R[2] - a_face);
        const double u_l = L[0] > 0.0 ? L[1] / L[0] : 0.0;
        const double u_r = R[0] > 0.0 ? R[1] / R[0] : 0.0;
        const Flux f = hll_flux(h_l, h_l * u_l, h_r, h_r * u_r, g);
        if (i >= 0) {
            // left cell sees the flux plus its hydrostatic correction
            dh[i] -= dt / dx * f.mass;
            dhu[i] -= dt / dx * (f.momentum + 0.5 * g * (L[0] * L[0] - h_l * h_l));
        }
        if (i + 1 < n) {
            dh[i + 1] += dt / dx * f.mass;
            dhu[i + 1] += dt / dx * (f.momentum + 0.5 * g * (R[0] * R[0] - h_r * h_r));
        }
    }
    for (int i = 0; i < n; ++i) {
        field.h[i] += dh[i];
        field.hu[i] += dhu[i];
        if (field.h[i] < 0.0)
            throw NumericalFailure("fv_step: negative depth in cell " + std::to_string(i));
    }
    field.t += dt;
    return dt;
}

FvField fv_run(const ThreeStateData& data, const FvConfig& config) {
    FvField f = fv_init(data, config);
    while (f.t < config.end_time) {
        fv_step(f, config, config.end_time - f.t);
    }
    return f;
}

FvField fv_run(const ScenarioRS& sc, const FvConfig& config) {
    FvConfig cfg = config;
    cfg.grav = sc.grav;
    return fv_run(ThreeStateData{sc.u_minus, sc.u_mid, sc.u_plus, sc.x1, sc.x2}, cfg);
}

FvField fv_run(const ScenarioSS& sc, const FvConfig& config) {
    FvConfig cfg = config;
    cfg.grav = sc.grav;
    return fv_run(ThreeStateData{sc.u_minus, sc.u_mid, sc.u_plus, sc.x1, sc.x2}, cfg);
}

FanCompareReport fan_compare(const WaveFan& fan, const FvField& field, double t, double x_center,
                             double t_center, Gravity grav) {
    FanCompareReport rep;
    if (t <= t_center) throw std::invalid_argument("fan_compare: t must exceed the fan center time");
    double norm_h = 0.0, norm_hu = 0.0;
    for (int i = 0; i < field.cells(); ++i) {
        const double xi = (field.x_center(i) - x_center) / (t - t_center);
        const State s = sample_fan(fan, xi, grav);
        rep.l1_h += std::abs(field.h[i] - s.h) * field.dx;
        rep.l1_hu += std::abs(field.hu[i] - s.h * s.u) * field.dx;
        norm_h += std::abs(s.h) * field.dx;
        norm_hu += std::abs(s.h * s.u) * field.dx;
    }
    rep.relative = (rep.l1_h + rep.l1_hu) / std::max(1e-300, norm_h + norm_hu);
    return rep;
}

}  // namespace swe
