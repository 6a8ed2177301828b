// Command-line front end: reads a scenario configuration, runs the exact
// solvers and the finite-volume cross-check, and writes CSV/JSON artifacts.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "swe/errors.hpp"
#include "swe/fv_oracle.hpp"
#include "swe/interaction_rs.hpp"
#include "swe/interaction_ss.hpp"
#include "swe/ode_penetration.hpp"
#include "swe/step_riemann.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;
using namespace swe;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

State parse_state(const json& j, const std::string& key) {
    if (!j.contains(key)) throw std::runtime_error("config: missing state '" + key + "'");
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 3)
        throw std::runtime_error("config: state '" + key + "' must be a [u, h, a] triple");
    return State{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
}

double resolve_gravity(const json& j) {
    if (j.contains("g")) return j.at("g").get<double>();
    if (const char* env = std::getenv("SWE_GRAVITY")) {
        const double g = std::atof(env);
        if (!(g > 0.0)) throw std::runtime_error("SWE_GRAVITY must be a positive number");
        return g;
    }
    return 9.81;
}

json state_json(const State& s) { return json{{"u", s.u}, {"h", s.h}, {"a", s.a}}; }

json fan_json(const WaveFan& fan) {
    json waves = json::array();
    for (const Wave& w : fan.waves) {
        waves.push_back(json{{"family", to_string(w.family)},
                             {"left", state_json(w.left)},
                             {"right", state_json(w.right)},
                             {"speed_lo", w.speed_lo},
                             {"speed_hi", w.speed_hi}});
    }
    return waves;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void write_fan_csv(const fs::path& path, const WaveFan& fan) {
    std::string csv = "index,family,uL,hL,uR,hR,speed_lo,speed_hi\n";
    int idx = 0;
    for (const Wave& w : fan.waves) {
        csv += std::to_string(idx++) + "," + to_string(w.family) + "," + fmt(w.left.u) + "," +
               fmt(w.left.h) + "," + fmt(w.right.u) + "," + fmt(w.right.h) + "," +
               fmt(w.speed_lo) + "," + fmt(w.speed_hi) + "\n";
    }
    write_file(path, csv);
}

void write_trajectory_csv(const fs::path& path, const OdeTrajectory& traj) {
    std::string csv = "t,x,h,u\n";
    for (const auto& s : traj.samples)
        csv += fmt(s.t) + "," + fmt(s.x) + "," + fmt(s.h) + "," + fmt(s.u) + "\n";
    write_file(path, csv);
}

void write_field_csv(const fs::path& path, const FvField& field, const std::string& name) {
    std::string csv = "# scenario=" + name + " t=" + fmt(field.t) + "\n";
    csv += "x,h,u,a\n";
    for (int i = 0; i < field.cells(); ++i) {
        const double u = field.h[i] > 0.0 ? field.hu[i] / field.h[i] : 0.0;
        csv += fmt(field.x_center(i)) + "," + fmt(field.h[i]) + "," + fmt(u) + "," +
               fmt(field.a[i]) + "\n";
    }
    write_file(path, csv);
}

ScenarioRS scenario_rs_from(const json& cfg, Gravity g) {
    ScenarioRS sc;
    sc.u_minus = parse_state(cfg, "U_minus");
    sc.u_mid = parse_state(cfg, "U_mid");
    sc.u_plus = parse_state(cfg, "U_plus");
    sc.x1 = cfg.value("x1", 0.0);
    sc.x2 = cfg.value("x2", 1.0);
    sc.grav = g;
    return sc;
}

ScenarioSS scenario_ss_from(const json& cfg, Gravity g) {
    ScenarioSS sc;
    sc.u_minus = parse_state(cfg, "U_minus");
    sc.u_mid = parse_state(cfg, "U_mid");
    sc.u_plus = parse_state(cfg, "U_plus");
    sc.x1 = cfg.value("x1", 0.0);
    sc.x2 = cfg.value("x2", 1.0);
    sc.grav = g;
    return sc;
}

FvConfig fv_config_from(const json& cfg, Gravity g) {
    FvConfig fv;
    fv.grav = g;
    if (cfg.contains("fv")) {
        const json& j = cfg.at("fv");
        fv.cells = j.value("cells", fv.cells);
        fv.cfl = j.value("cfl", fv.cfl);
        fv.end_time = j.value("end_time", fv.end_time);
        fv.step_ramp = j.value("step_ramp", fv.step_ramp);
        if (j.contains("domain")) {
            fv.x_lo = j.at("domain").at(0).get<double>();
            fv.x_hi = j.at("domain").at(1).get<double>();
        }
    }
    return fv;
}

int run_curves(const json& cfg, Gravity g, const fs::path& out_dir) {
    const State u0 = cfg.contains("U0") ? parse_state(cfg, "U0") : parse_state(cfg, "U_minus");
    std::string csv = "param,u,h,a,branch\n";
    auto append = [&](const std::vector<CurveSample>& samples) {
        for (const auto& s : samples)
            csv += fmt(s.param) + "," + fmt(s.u) + "," + fmt(s.h) + "," + fmt(s.a) + "," +
                   s.branch + "\n";
    };
    append(sample_wave_curve(WaveCurveKind::W1, u0, g));
    append(sample_wave_curve(WaveCurveKind::W2, u0, g));
    append(sample_stationary_curve(u0, g));
    write_file(out_dir / "curves.csv", csv);
    return 0;
}

int run_riemann(const json& cfg, Gravity g, const fs::path& out_dir, const std::string& name) {
    const State left = parse_state(cfg, "U_minus");
    const State right = parse_state(cfg, "U_plus");
    const StepRiemannSolution sol = solve_step_riemann(left, right, g);
    json out;
    out["scenario"] = name;
    out["structure"] = sol.structure == StepStructure::SupercriticalTransparent ? "supercritical"
                       : sol.structure == StepStructure::Subcritical            ? "subcritical"
                                                                                : "choked";
    out["waves"] = fan_json(sol.fan);
    write_file(out_dir / "fan.json", out.dump(2) + "\n");
    write_fan_csv(out_dir / "fan.csv", sol.fan);
    return 0;
}

int run_interact_rs(const json& cfg, Gravity g, const fs::path& out_dir, const std::string& name) {
    const ScenarioRS sc = scenario_rs_from(cfg, g);
    const RsCaseLabel label = classify_rs_case(sc);
    const WaveFan fan = rs_large_time(sc);
    json out;
    out["scenario"] = name;
    out["case"] = to_string(label);
    out["waves"] = fan_json(fan);
    const RsSpecialPoints pts = special_points(sc);
    json jp;
    auto put_state = [&](const char* key, const std::optional<State>& s) {
        if (s) jp[key] = state_json(*s);
    };
    auto put_value = [&](const char* key, const std::optional<double>& v) {
        if (v) jp[key] = *v;
    };
    put_state("sonic_on_incoming", pts.sonic_on_incoming);
    put_state("sonic_image_super", pts.sonic_image_super);
    put_state("sonic_image_sub", pts.sonic_image_sub);
    put_state("stall_incoming", pts.stall_incoming);
    put_state("stall_sonic", pts.stall_sonic);
    put_state("stall_image", pts.stall_image);
    put_value("image_u_intercept", pts.image_u_intercept);
    put_value("image_h_intercept", pts.image_h_intercept);
    put_value("mid_u_intercept", pts.mid_u_intercept);
    put_value("mid_h_intercept", pts.mid_h_intercept);
    put_value("plus_u_intercept", pts.plus_u_intercept);
    put_value("plus_h_intercept", pts.plus_h_intercept);
    out["special_points"] = jp;
    if (label == RsCaseLabel::Case3_3 || label == RsCaseLabel::Case3_4) {
        // refraction verdicts for the stalled shock on both sides of the step
        const auto window = rs_arrival_window(sc);
        const RsPenetrationSetups setups =
            rs_penetration_setups(sc, cfg.value("t_touch", 2.0 * window.second));
        auto verdict_json = [](const PenetrationVerdict& v) {
            json j;
            j["kind"] = v.kind == PenetrationVerdict::Kind::Crossed ? "crossed" : "asymptote";
            j[v.kind == PenetrationVerdict::Kind::Crossed ? "crossing_time" : "asymptote_slope"] =
                v.value;
            return j;
        };
        out["penetration"] = json{{"backward", verdict_json(penetration_time(setups.backward))},
                                  {"forward", verdict_json(penetration_time(setups.forward))}};
    }
    write_file(out_dir / "fan.json", out.dump(2) + "\n");
    write_fan_csv(out_dir / "fan.csv", fan);
    try {
        const OdeTrajectory traj = solve_transmitted_shock(sc);
        write_trajectory_csv(out_dir / "trajectory.csv", traj);
    } catch (const UnsupportedConfiguration&) {
        // reflected-side cases carry no transmitted backward shock
    }
    return 0;
}

int run_interact_ss(const json& cfg, Gravity g, const fs::path& out_dir, const std::string& name) {
    const ScenarioSS sc = scenario_ss_from(cfg, g);
    const SsCaseLabel label = classify_ss_case(sc);
    const WaveFan fan = ss_large_time(sc);
    const OvertakeEvent ev = overtake_time(sc);
    json out;
    out["scenario"] = name;
    out["case"] = to_string(label);
    out["overtake"] = json{{"t", ev.t}, {"x", ev.x}};
    out["waves"] = fan_json(fan);
    write_file(out_dir / "fan.json", out.dump(2) + "\n");
    write_fan_csv(out_dir / "fan.csv", fan);

    const double t_end = cfg.value("t_end", 2.0 * ev.t);
    const TimingDiagram diagram = ss_timing(sc, t_end);
    json jt = json::array();
    for (const auto& seg : diagram.segments) {
        json pts = json::array();
        for (const auto& [t, x] : seg.points) pts.push_back(json::array({t, x}));
        jt.push_back(json{{"label", seg.label}, {"points", pts}});
    }
    json timing;
    timing["scenario"] = name;
    timing["segments"] = jt;
    write_file(out_dir / "timing.json", timing.dump(2) + "\n");
    return 0;
}

int run_ode_trace(const json& cfg, Gravity g, const fs::path& out_dir, const std::string& name) {
    const json& j = cfg.at("ode");
    FreeBoundarySetup setup;
    const std::string side = j.value("side", "backward");
    setup.side = side == "forward" ? FreeBoundarySide::ForwardS2inR2
                                   : FreeBoundarySide::BackwardS1inR1;
    setup.behind = parse_state(j, "behind");
    setup.fan_head = parse_state(j, "fan_head");
    setup.fan_tail = parse_state(j, "fan_tail");
    setup.t_start = j.at("t_start").get<double>();
    setup.x_start = j.at("x_start").get<double>();
    setup.t_fan = j.value("t_fan", 0.0);
    setup.x_fan = j.value("x_fan", 0.0);
    setup.grav = g;
    const PenetrationVerdict quad = penetration_time(setup);
    const OdeTrajectory traj = integrate_free_boundary(setup);
    write_trajectory_csv(out_dir / "trajectory.csv", traj);
    json out;
    out["scenario"] = name;
    out["verdict"] = traj.verdict.kind == PenetrationVerdict::Kind::Crossed ? "crossed" : "asymptote";
    out[traj.verdict.kind == PenetrationVerdict::Kind::Crossed ? "crossing_time"
                                                               : "asymptote_slope"] =
        traj.verdict.value;
    if (quad.kind == PenetrationVerdict::Kind::Crossed) out["crossing_time_quadrature"] = quad.value;
    write_file(out_dir / "trajectory.json", out.dump(2) + "\n");
    return 0;
}

int run_fv_check(const json& cfg, Gravity g, const fs::path& out_dir, const std::string& name) {
    const std::string kind = cfg.value("kind", "rs");
    const FvConfig fv = fv_config_from(cfg, g);
    WaveFan fan;
    FvField field;
    double x_center, t_center;
    if (kind == "ss") {
        const ScenarioSS sc = scenario_ss_from(cfg, g);
        fan = ss_large_time(sc);
        field = fv_run(sc, fv);
        x_center = sc.x2;
        t_center = overtake_time(sc).t;
    } else {
        const ScenarioRS sc = scenario_rs_from(cfg, g);
        fan = rs_large_time(sc);
        field = fv_run(sc, fv);
        const auto win = rs_arrival_window(sc);
        x_center = sc.x2;
        t_center = 0.5 * (win.first + win.second);
    }
    if (cfg.contains("compare_center_time")) t_center = cfg.at("compare_center_time").get<double>();
    const FanCompareReport rep = fan_compare(fan, field, fv.end_time, x_center, t_center, g);
    json out;
    out["scenario"] = name;
    out["l1_h"] = rep.l1_h;
    out["l1_hu"] = rep.l1_hu;
    out["relative"] = rep.relative;
    out["cells"] = fv.cells;
    out["end_time"] = fv.end_time;
    write_file(out_dir / "report.json", out.dump(2) + "\n");
    write_field_csv(out_dir / "field.csv", field, name);
    return 0;
}

int run_config(const fs::path& config_path, std::optional<fs::path> out_override) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 1;
    }
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        std::cerr << "error: malformed config " << config_path << ": " << e.what() << "\n";
        return 1;
    }
    try {
        const Gravity g{resolve_gravity(cfg)};
        const std::string mode = cfg.value("mode", "");
        const std::string name = cfg.value("name", config_path.stem().string());
        fs::path out_dir = out_override.value_or(fs::path(cfg.value("output_dir", ".")));
        fs::create_directories(out_dir);
        if (mode == "curves") return run_curves(cfg, g, out_dir);
        if (mode == "riemann") return run_riemann(cfg, g, out_dir, name);
        if (mode == "interact_rs") return run_interact_rs(cfg, g, out_dir, name);
        if (mode == "interact_ss") return run_interact_ss(cfg, g, out_dir, name);
        if (mode == "ode_trace") return run_ode_trace(cfg, g, out_dir, name);
        if (mode == "fv_check") return run_fv_check(cfg, g, out_dir, name);
        std::cerr << "error: unknown mode '" << mode << "'\n";
        return 1;
    } catch (const UnsupportedConfiguration& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int validate_config(const fs::path& config_path) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 1;
    }
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        std::cerr << "error: malformed config: " << e.what() << "\n";
        return 1;
    }
    try {
        const Gravity g{resolve_gravity(cfg)};
        const std::string mode = cfg.value("mode", "");
        std::vector<std::string> violations;
        if (mode == "interact_rs" || (mode == "fv_check" && cfg.value("kind", "rs") == "rs"))
            violations = scenario_rs_violations(scenario_rs_from(cfg, g));
        else if (mode == "interact_ss" || (mode == "fv_check" && cfg.value("kind", "rs") == "ss"))
            violations = scenario_ss_violations(scenario_ss_from(cfg, g));
        else {
            std::cout << "nothing to validate for mode '" << mode << "'\n";
            return 0;
        }
        if (violations.empty()) {
            std::cout << "valid\n";
            return 0;
        }
        for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wave solver and interaction classifier for shallow water flow over a bottom step"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir;
    CLI::App* run = app.add_subcommand("run", "run solvers on a scenario configuration");
    run->add_option("config", config, "JSON configuration file")->required();
    run->add_option("--out", out_dir, "output directory for artifacts");

    std::string vconfig;
    CLI::App* validate = app.add_subcommand("validate", "check scenario invariants without solving");
    validate->add_option("config", vconfig, "JSON configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        std::optional<fs::path> out;
        if (!out_dir.empty()) out = fs::path(out_dir);
        return run_config(config, out);
    }
    return validate_config(vconfig);
}
