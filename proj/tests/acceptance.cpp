// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/dynamics.hpp"
#include "lorentz/ensemble.hpp"
#include "lorentz/field_tensor.hpp"
#include "lorentz/generator.hpp"
#include "lorentz/lorentz_matrix.hpp"

using namespace lorentz;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, double measured, const char* note) {
    std::printf("[%s] %2d. %-52s measured=%-12.3e %s\n", ok ? "PASS" : "FAIL", index, name,
                measured, note);
    if (!ok) ++failures;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 rvec(std::mt19937_64& rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Finite-difference derivative of the six-factor family recovers the
//    generator entrywise within 1e-9; 100 seeded rate vectors; < 1 s.
void criterion_1() {
    std::mt19937_64 rng(1001);
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Generator g(rvec(rng, -1, 1), rvec(rng, -1, 1));
        const Matrix4 d = derivative_at_zero(parametrized_curve(g), kDerivativeStep);
        worst = std::max(worst, max_abs_diff(d, g.matrix()));
    }
    const double secs = seconds_since(t0);
    report(1, "generator reconstruction by differentiation", worst <= 1e-9 && secs < 1.0,
           worst, "limit 1e-9");
}

// 2. Exponential group law within 1e-12 entrywise, 100 random (g, t1, t2).
void criterion_2() {
    std::mt19937_64 rng(1002);
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Generator g(rvec(rng, -1, 1), rvec(rng, -1, 1));
        const double t1 = uniform(rng, -1, 1);
        const double t2 = uniform(rng, -1, 1);
        worst = std::max(
            worst, max_abs_diff((expm(g, t1) * expm(g, t2)).matrix(),
                                expm(g, t1 + t2).matrix()));
    }
    const double secs = seconds_since(t0);
    report(2, "exponential group law", worst <= 1e-12 && secs < 1.0, worst, "limit 1e-12");
}

// 3. expm of single-rate generators reproduces the printed rotation/boost
//    matrices within 1e-13 for angles in [-5, 5], 20 points per axis.
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int axis = 1; axis <= 3; ++axis) {
        Vec3 rate{};
        rate[static_cast<std::size_t>(axis - 1)] = 1.0;
        for (int i = 0; i < 20; ++i) {
            const double a = -5.0 + 10.0 * i / 19.0;
            worst = std::max(worst,
                             max_abs_diff(expm(Generator({0, 0, 0}, rate), a).matrix(),
                                          rotation_matrix(axis, a).matrix()));
            worst = std::max(worst,
                             max_abs_diff(expm(Generator(rate, {0, 0, 0}), a).matrix(),
                                          boost_matrix(axis, a).matrix()));
        }
    }
    const double secs = seconds_since(t0);
    report(3, "single-axis exponentials match closed forms", worst <= 1e-13 && secs < 1.0,
           worst, "limit 1e-13");
}

// 4. eta*Q + (eta*Q)^T = 0 exactly; <Qu, u> <= 1e-12 for 1000 random pairs.
void criterion_4() {
    std::mt19937_64 rng(1004);
    double worst_skew = 0.0;
    double worst_orth = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Generator g(rvec(rng, -1, 1), rvec(rng, -1, 1));
        const Matrix4 eq = Matrix4::eta() * g.matrix();
        worst_skew = std::max(worst_skew, (eq + eq.transposed()).max_abs());
        const FourVector u{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                           uniform(rng, -1, 1)};
        worst_orth = std::max(worst_orth, std::fabs(minkowski_inner(g.matrix() * u, u)));
    }
    report(4, "generator antisymmetry and force orthogonality",
           worst_skew == 0.0 && worst_orth <= 1e-12, std::max(worst_skew, worst_orth),
           "skew exact, <Qu,u> limit 1e-12");
}

// 5. Field invariants preserved under frame_transform within 1e-10 over 100
//    random field/boost/rotation combinations; adjoint composition too.
void criterion_5() {
    std::mt19937_64 rng(1005);
    const Coupling k{1.0};
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const FieldTensor f{rvec(rng, -1, 1), rvec(rng, -1, 1)};
        const LorentzMatrix L1 = boost_matrix(1 + static_cast<int>(rng() % 3),
                                              uniform(rng, -3, 3));
        const LorentzMatrix L2 = rotation_matrix(1 + static_cast<int>(rng() % 3),
                                                 uniform(rng, -3, 3));
        const LorentzMatrix L = L1 * L2;

        const auto [eb0, e2b20] = field_invariants(f);
        const FieldTensor ft = frame_transform(f, k, L);
        const auto [eb1, e2b21] = field_invariants(ft);
        worst = std::max(worst, std::fabs(eb1 - eb0));
        worst = std::max(worst, std::fabs(e2b21 - e2b20));

        const FieldTensor chained = frame_transform(frame_transform(f, k, L2), k, L1);
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, std::fabs(chained.E[i] - ft.E[i]));
            worst = std::max(worst, std::fabs(chained.B[i] - ft.B[i]));
        }
    }
    report(5, "field invariants and adjoint composition", worst <= 1e-10, worst,
           "limit 1e-10");
}

// 6. Exact stepper vs both closed-form oracles.
void criterion_6() {
    const Coupling k{1.0};
    const auto t0 = std::chrono::steady_clock::now();

    ParticleState s;
    const ExactPropagator hyp(FieldTensor{{1.0, 0, 0}, {0, 0, 0}}, k, 5.0 / 1000);
    for (int i = 0; i < 1000; ++i) s = hyp.step(s);
    const ParticleState hw = oracle_hyperbolic(1.0, k, 5.0);
    const double scale = hw.u[0];
    const double hyp_err =
        std::max(max_abs_diff(s.u, hw.u), max_abs_diff(s.x, hw.x)) / scale;

    const double up = 0.8;
    const double period = 2 * M_PI;
    ParticleState c;
    c.u = {std::sqrt(1 + up * up), up, 0, 0};
    const ExactPropagator cyc(FieldTensor{{0, 0, 0}, {0, 0, 1.0}}, k, period / 1000);
    for (int i = 0; i < 1000; ++i) c = cyc.step(c);
    const double radius = up;
    const double closure = std::hypot(c.x[1], c.x[2]) / radius;

    const double secs = seconds_since(t0);
    const bool ok = hyp_err <= 1e-10 && closure <= 1e-9 && secs < 2.0;
    report(6, "exact stepper vs hyperbolic/cyclotron oracles", ok,
           std::max(hyp_err, closure), "limits 1e-10 / 1e-9");
}

// 7. Mass shell over 1e6 exact steps in a mixed uniform field; throughput
//    reported, not gated.
void criterion_7() {
    const FieldMap map = FieldMap::uniform({0.3, 0.0, 0.0}, {0.0, 0.0, 1.0});
    Ensemble ens;
    ens.states.push_back({0.0, {}, {std::sqrt(2.0), 1.0, 0, 0}});
    const auto t0 = std::chrono::steady_clock::now();
    advance_serial(ens, map, Coupling{1.0}, 1e-3, 1000000, Stepper::Exact);
    const double secs = seconds_since(t0);
    const double defect = std::fabs(ens.states[0].shell_defect());
    char note[96];
    std::snprintf(note, sizeof note, "limit 1e-9; throughput %.2e steps/s", 1e6 / secs);
    report(7, "mass shell over 1e6 exact steps", defect <= 1e-9, defect, note);
}

// 8. RK4 global order 4.0 +/- 0.2 against both oracles over six dt halvings.
void criterion_8() {
    const Coupling k{1.0};

    auto slope_for = [&](const FieldMap& map, const FourVector& u0, double tau_total,
                         auto oracle) {
        std::vector<double> ldt, lerr;
        for (int p = 4; p <= 9; ++p) {
            const long n = 1L << p;
            const double dt = tau_total / static_cast<double>(n);
            const Trajectory t = integrate({}, u0, map, k, dt, n, Stepper::Rk4);
            const ParticleState want = oracle(tau_total);
            const double err = std::max(max_abs_diff(t.states.back().u, want.u),
                                        max_abs_diff(t.states.back().x, want.x));
            ldt.push_back(std::log(dt));
            lerr.push_back(std::log(err));
        }
        return fit_slope(ldt, lerr);
    };

    const double s_hyp =
        slope_for(FieldMap::uniform({1.0, 0, 0}, {0, 0, 0}), {1, 0, 0, 0}, 2.0,
                  [&](double tau) { return oracle_hyperbolic(1.0, k, tau); });
    const double up = 0.8;
    const double s_cyc =
        slope_for(FieldMap::uniform({0, 0, 0}, {0, 0, 1.0}),
                  {std::sqrt(1 + up * up), up, 0, 0}, 2 * M_PI,
                  [&](double tau) { return oracle_cyclotron(1.0, k, up, tau); });

    const bool ok = std::fabs(s_hyp - 4.0) <= 0.2 && std::fabs(s_cyc - 4.0) <= 0.2;
    char note[96];
    std::snprintf(note, sizeof note, "slopes %.3f / %.3f, required 4.0 +/- 0.2", s_hyp, s_cyc);
    report(8, "rk4 global convergence order on both oracles", ok,
           std::max(std::fabs(s_hyp - 4.0), std::fabs(s_cyc - 4.0)), note);
}

// 9. Six-factor product deviates from exp(tau Q) quadratically: log-log
//    slope >= 1.9 over tau in [1e-4, 1e-1] for non-commuting rates.
void criterion_9() {
    std::mt19937_64 rng(1009);
    double worst_slope = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
        const Generator g(rvec(rng, -1, 1), rvec(rng, -1, 1));
        const auto curve = parametrized_curve(g);
        std::vector<double> lt, ld;
        for (int i = 0; i <= 12; ++i) {
            const double tau = 1e-4 * std::pow(10.0, 3.0 * i / 12.0);
            const double defect = max_abs_diff(curve(tau).matrix(), expm(g, tau).matrix());
            lt.push_back(std::log(tau));
            ld.push_back(std::log(defect));
        }
        worst_slope = std::min(worst_slope, fit_slope(lt, ld));
    }
    char note[64];
    std::snprintf(note, sizeof note, "required >= 1.9");
    report(9, "product-vs-exponential quadratic defect", worst_slope >= 1.9, worst_slope,
           note);
}

// 10. CLI verify is deterministic: exit 0 and byte-identical reports.
void criterion_10() {
#ifndef LORENTZ_CLI_PATH
    report(10, "cli verify determinism", false, 0.0, "cli path not configured");
#else
    const std::string cmd = std::string(LORENTZ_CLI_PATH) + " verify --seed 42 --trials 100";
    auto capture = [&](const std::string& path) {
        const std::string full = cmd + " > " + path + " 2>&1";
        return std::system(full.c_str());
    };
    const int rc1 = capture("acceptance_verify_1.txt");
    const int rc2 = capture("acceptance_verify_2.txt");
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp("acceptance_verify_1.txt");
    const std::string b = slurp("acceptance_verify_2.txt");
    const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(10, "cli verify determinism", ok, static_cast<double>(rc1),
           ok ? "exit 0, byte-identical" : "mismatch or nonzero exit");
#endif
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
