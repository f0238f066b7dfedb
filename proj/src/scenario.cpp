#include "lorentz/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

std::vector<double> parse_numbers(const std::string& key, const std::string& value,
                                  std::size_t count) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ParseError("key '" + key + "': cannot parse number from '" + item + "'");
        }
    }
    if (out.size() != count) {
        std::ostringstream os;
        os << "key '" << key << "' expects " << count << " comma-separated numbers, got "
           << out.size();
        throw ParseError(os.str());
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    return parse_numbers(key, value, 1)[0];
}

long parse_long(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    const long n = std::lround(d);
    if (static_cast<double>(n) != d)
        throw ParseError("key '" + key + "' expects an integer, got '" + value + "'");
    return n;
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// 17 significant digits: lossless double round-trip.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

FourVector Scenario::initial_velocity() const {
    const double n2 = u0_spatial[0] * u0_spatial[0] + u0_spatial[1] * u0_spatial[1] +
                      u0_spatial[2] * u0_spatial[2];
    return {std::sqrt(1.0 + n2), u0_spatial[0], u0_spatial[1], u0_spatial[2]};
}

FourVector Scenario::initial_position() const { return {x0[0], x0[1], x0[2], x0[3]}; }

FieldMap Scenario::make_field_map() const {
    if (field_map == "uniform") return FieldMap::uniform(E, B);
    if (field_map == "linear_b3") {
        const Vec3 e = E;
        const Vec3 b = B;
        const double g = gradient;
        return FieldMap::varying([e, b, g](const FourVector& x) {
            return FieldTensor{e, {b[0], b[1], b[2] + g * x[1]}};
        });
    }
    throw ParseError("key 'field_map': unknown map '" + field_map +
                     "' (expected uniform or linear_b3)");
}

Scenario parse_scenario(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "line " << lineno << ": expected 'key = value'";
            throw ParseError(os.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream os;
            os << "line " << lineno << ": empty key";
            throw ParseError(os.str());
        }
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
        kv[key] = value;
    }

    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("missing required key '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto take_optional = [&](const std::string& key, const std::string& fallback) {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    Scenario s;
    s.name = take("name");
    s.k = parse_double("k", take("k"));
    const auto e = parse_numbers("E", take_optional("E", "0,0,0"), 3);
    const auto b = parse_numbers("B", take_optional("B", "0,0,0"), 3);
    s.E = {e[0], e[1], e[2]};
    s.B = {b[0], b[1], b[2]};
    s.field_map = take_optional("field_map", "uniform");
    s.gradient = parse_double("gradient", take_optional("gradient", "0"));
    const auto x = parse_numbers("x0", take_optional("x0", "0,0,0,0"), 4);
    s.x0 = {x[0], x[1], x[2], x[3]};
    const auto u = parse_numbers("u0_spatial", take_optional("u0_spatial", "0,0,0"), 3);
    s.u0_spatial = {u[0], u[1], u[2]};
    s.dt = parse_double("dt", take("dt"));
    s.n_steps = parse_long("n_steps", take("n_steps"));
    s.stepper = stepper_from_name(take("stepper"));
    s.output_stride = parse_long("output_stride", take_optional("output_stride", "1"));

    if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "'");

    if (!(s.dt > 0.0)) throw ParseError("dt must be positive");
    if (s.n_steps < 1) throw ParseError("n_steps must be at least 1");
    if (s.output_stride < 1) throw ParseError("output_stride must be at least 1");
    if (!std::isfinite(s.k)) throw ParseError("k must be finite");
    if (s.field_map != "uniform" && s.field_map != "linear_b3")
        throw ParseError("key 'field_map': unknown map '" + s.field_map + "'");
    if (s.stepper == Stepper::Exact && s.field_map != "uniform")
        throw ConfigError("exact stepper requires a uniform field map");
    return s;
}

std::string render_scenario(const Scenario& s) {
    std::ostringstream os;
    os << "name = " << s.name << "\n";
    os << "k = " << fmt17(s.k) << "\n";
    os << "E = " << fmt17(s.E[0]) << "," << fmt17(s.E[1]) << "," << fmt17(s.E[2]) << "\n";
    os << "B = " << fmt17(s.B[0]) << "," << fmt17(s.B[1]) << "," << fmt17(s.B[2]) << "\n";
    os << "field_map = " << s.field_map << "\n";
    os << "gradient = " << fmt17(s.gradient) << "\n";
    os << "x0 = " << fmt17(s.x0[0]) << "," << fmt17(s.x0[1]) << "," << fmt17(s.x0[2]) << ","
       << fmt17(s.x0[3]) << "\n";
    os << "u0_spatial = " << fmt17(s.u0_spatial[0]) << "," << fmt17(s.u0_spatial[1]) << ","
       << fmt17(s.u0_spatial[2]) << "\n";
    os << "dt = " << fmt17(s.dt) << "\n";
    os << "n_steps = " << s.n_steps << "\n";
    os << "stepper = " << stepper_name(s.stepper) << "\n";
    os << "output_stride = " << s.output_stride << "\n";
    return os.str();
}

SimulationSummary run_simulation(const Scenario& s, std::ostream& csv, long stride_override) {
    const FieldMap map = s.make_field_map();
    const long stride = stride_override > 0 ? stride_override : s.output_stride;

    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory traj = integrate(s.initial_position(), s.initial_velocity(), map,
                                      Coupling{s.k}, s.dt, s.n_steps, s.stepper);
    const auto t1 = std::chrono::steady_clock::now();

    csv << "tau,t,x,y,z,u0,u1,u2,u3,shell_defect\n";
    const long last = static_cast<long>(traj.states.size()) - 1;
    double max_defect = 0.0;
    for (long i = 0; i <= last; ++i) {
        const auto& st = traj.states[static_cast<std::size_t>(i)];
        const double defect = st.shell_defect();
        max_defect = std::max(max_defect, std::fabs(defect));
        if (i % stride != 0 && i != last) continue;
        csv << fmt17(st.tau) << "," << fmt17(st.x[0]) << "," << fmt17(st.x[1]) << ","
            << fmt17(st.x[2]) << "," << fmt17(st.x[3]) << "," << fmt17(st.u[0]) << ","
            << fmt17(st.u[1]) << "," << fmt17(st.u[2]) << "," << fmt17(st.u[3]) << ","
            << fmt17(defect) << "\n";
    }

    SimulationSummary sum;
    sum.final_state = traj.states.back();
    sum.max_shell_defect = max_defect;
    sum.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    sum.steps_per_second =
        sum.wall_seconds > 0.0 ? static_cast<double>(s.n_steps) / sum.wall_seconds : 0.0;
    return sum;
}

}  // namespace lorentz
