#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/field_tensor.hpp"
#include "lorentz/scenario.hpp"
#include "lorentz/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIntegrator = 3;

lorentz::Vec3 parse_triple(const std::string& flag, const std::string& value) {
    lorentz::Vec3 out{};
    std::stringstream ss(value);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw lorentz::ParseError("flag " + flag + ": expected three components");
        out[static_cast<std::size_t>(i++)] = std::stod(item);
    }
    if (i != 3) throw lorentz::ParseError("flag " + flag + ": expected three components");
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_simulate(const std::string& path, const std::string& output, long stride) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open scenario file '" << path << "'\n";
        return kExitConfig;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const lorentz::Scenario s = lorentz::parse_scenario(buf.str());

    const std::string out_path = output.empty() ? s.name + ".csv" : output;
    std::ofstream csv(out_path);
    if (!csv) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitConfig;
    }
    const lorentz::SimulationSummary sum = lorentz::run_simulation(s, csv, stride);

    std::cout << "scenario: " << s.name << "\n";
    std::cout << "trajectory written to " << out_path << "\n";
    std::cout << "final state: tau=" << fmt(sum.final_state.tau) << " x=("
              << fmt(sum.final_state.x[0]) << ", " << fmt(sum.final_state.x[1]) << ", "
              << fmt(sum.final_state.x[2]) << ", " << fmt(sum.final_state.x[3]) << ") u=("
              << fmt(sum.final_state.u[0]) << ", " << fmt(sum.final_state.u[1]) << ", "
              << fmt(sum.final_state.u[2]) << ", " << fmt(sum.final_state.u[3]) << ")\n";
    std::cout << "max mass-shell defect: " << fmt(sum.max_shell_defect) << "\n";
    std::cout << "wall time: " << fmt(sum.wall_seconds) << " s ("
              << fmt(sum.steps_per_second) << " steps/s)\n";
    return kExitOk;
}

int cmd_transform(const std::string& e_str, const std::string& b_str, double k, int boost_axis,
                  double rapidity, int rotation_axis, double angle) {
    const lorentz::FieldTensor f{parse_triple("--E", e_str), parse_triple("--B", b_str)};
    lorentz::LorentzMatrix L = lorentz::LorentzMatrix::identity();
    if (boost_axis != 0) L = L * lorentz::boost_matrix(boost_axis, rapidity);
    if (rotation_axis != 0) L = L * lorentz::rotation_matrix(rotation_axis, angle);

    const lorentz::FieldTensor ft = lorentz::frame_transform(f, lorentz::Coupling{k}, L);
    const auto [eb0, e2b20] = lorentz::field_invariants(f);
    const auto [eb1, e2b21] = lorentz::field_invariants(ft);

    std::cout << "E  = (" << fmt(f.E[0]) << ", " << fmt(f.E[1]) << ", " << fmt(f.E[2]) << ")\n";
    std::cout << "B  = (" << fmt(f.B[0]) << ", " << fmt(f.B[1]) << ", " << fmt(f.B[2]) << ")\n";
    std::cout << "E' = (" << fmt(ft.E[0]) << ", " << fmt(ft.E[1]) << ", " << fmt(ft.E[2])
              << ")\n";
    std::cout << "B' = (" << fmt(ft.B[0]) << ", " << fmt(ft.B[1]) << ", " << fmt(ft.B[2])
              << ")\n";
    std::cout << "invariant E.B      : before " << fmt(eb0) << "  after " << fmt(eb1) << "\n";
    std::cout << "invariant E^2 - B^2: before " << fmt(e2b20) << "  after " << fmt(e2b21)
              << "\n";
    const bool ok = std::fabs(eb1 - eb0) <= 1e-10 && std::fabs(e2b21 - e2b20) <= 1e-10;
    std::cout << "invariants preserved: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_verify(std::uint64_t seed, int trials) {
    const lorentz::VerifyReport report = lorentz::run_verify(seed, trials);
    std::cout << report.text;
    return report.passed ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz-group field-tensor dynamics toolkit"};
    app.require_subcommand(1);

    std::string scenario_path, output;
    long stride = 0;
    auto* sim = app.add_subcommand("simulate", "integrate a scenario file and write a CSV");
    sim->add_option("file", scenario_path, "scenario file")->required();
    sim->add_option("--output", output, "output CSV path (default <name>.csv)");
    sim->add_option("--stride", stride, "override the scenario's output stride");

    std::string e_str = "0,0,0", b_str = "0,0,0";
    double k = 1.0, rapidity = 0.0, angle = 0.0;
    int boost_axis = 0, rotation_axis = 0;
    auto* tra = app.add_subcommand("transform", "transform fields between frames");
    tra->add_option("--E", e_str, "electric field, comma triple");
    tra->add_option("--B", b_str, "magnetic field, comma triple");
    tra->add_option("--k", k, "coupling q/m");
    tra->add_option("--boost-axis", boost_axis, "boost axis 1..3 (0 = none)");
    tra->add_option("--rapidity", rapidity, "boost rapidity");
    tra->add_option("--rotation-axis", rotation_axis, "rotation axis 1..3 (0 = none)");
    tra->add_option("--angle", angle, "rotation angle, radians");

    std::uint64_t seed = 0;
    int trials = 100;
    auto* ver = app.add_subcommand("verify", "run the randomized property suite");
    ver->add_option("--seed", seed, "RNG seed")->required();
    ver->add_option("--trials", trials, "trials per property");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(scenario_path, output, stride);
        if (tra->parsed())
            return cmd_transform(e_str, b_str, k, boost_axis, rapidity, rotation_axis, angle);
        if (ver->parsed()) {
            if (trials < 1) {
                std::cerr << "error: --trials must be at least 1\n";
                return kExitConfig;
            }
            return cmd_verify(seed, trials);
        }
    } catch (const lorentz::IntegratorError& e) {
        std::cerr << "integrator abort: " << e.what() << "\n";
        return kExitIntegrator;
    } catch (const lorentz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lorentz::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
