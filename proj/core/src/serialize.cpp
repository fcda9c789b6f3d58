#include "specproj/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace specproj::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_radial_profile_csv(const std::string& path, const na::RadialProfile& f, int n_samples) {
    if (n_samples < 2) throw ConfigError("write_radial_profile_csv: need >= 2 samples");
    std::ofstream out(path);
    if (!out) throw ConfigError("write_radial_profile_csv: cannot open " + path);
    out << "rho,value\n";
    for (int i = 0; i < n_samples; ++i) {
        double rho = f.R * i / (n_samples - 1);
        out << format_double(rho) << "," << format_double(f(rho)) << "\n";
    }
}

na::RadialProfile read_radial_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("read_radial_profile_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("rho,value", 0) != 0)
        throw ConfigError("read_radial_profile_csv: missing 'rho,value' header");
    std::vector<double> rho, val;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw ConfigError("read_radial_profile_csv: malformed row '" + line + "'");
        rho.push_back(std::stod(a));
        val.push_back(std::stod(b));
    }
    if (rho.size() < 2) throw ConfigError("read_radial_profile_csv: too few rows");
    for (std::size_t i = 1; i < rho.size(); ++i)
        if (!(rho[i] > rho[i - 1]))
            throw ConfigError("read_radial_profile_csv: rho column must increase");
    double R = rho.back();
    auto interp = num::pchip(std::move(rho), std::move(val));
    return na::RadialProfile{[interp, R](double r) { return (r >= R) ? 0.0 : interp(r); }, R};
}

std::string naparams_to_json(const na::NAParams& p) {
    json j;
    j["m"] = p.m;
    j["k"] = p.k;
    return j.dump();
}

na::NAParams naparams_from_json(const std::string& text) {
    json j = json::parse(text);
    return na::NAParams(j.at("m").get<int>(), j.at("k").get<int>());
}

void write_so2_json(const std::string& path, const disk::SO2FiniteFunction& f, int n_samples) {
    if (n_samples < 2) throw ConfigError("write_so2_json: need >= 2 samples");
    json j;
    j["R"] = f.R;
    j["z0"] = {f.z0.real(), f.z0.imag()};
    j["modes"] = json::array();
    for (const auto& [n, fn] : f.modes) {
        json m;
        m["n"] = n;
        m["samples"] = json::array();
        for (int i = 0; i < n_samples; ++i) {
            double r = f.R * i / (n_samples - 1);
            Complex v = fn(r);
            if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
                throw ConfigError("write_so2_json: profile is not real-valued");
            m["samples"].push_back({{"r", r}, {"value", v.real()}});
        }
        j["modes"].push_back(m);
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("write_so2_json: cannot open " + path);
    out << j.dump(2) << "\n";
}

disk::SO2FiniteFunction read_so2_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("read_so2_json: cannot open " + path);
    json j = json::parse(in);
    disk::SO2FiniteFunction f;
    f.R = j.at("R").get<double>();
    auto z0 = j.at("z0");
    f.z0 = Complex(z0.at(0).get<double>(), z0.at(1).get<double>());
    for (const auto& m : j.at("modes")) {
        int n = m.at("n").get<int>();
        std::vector<double> rs, vs;
        for (const auto& s : m.at("samples")) {
            rs.push_back(s.at("r").get<double>());
            vs.push_back(s.at("value").get<double>());
        }
        auto interp = num::pchip(std::move(rs), std::move(vs));
        double R = f.R;
        f.modes[n] = [interp, R](double r) -> Complex {
            return Complex((r >= R) ? 0.0 : interp(r), 0.0);
        };
    }
    return f;
}

void write_sweep_csv(const std::string& path, const std::string& schema,
                     const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_sweep_csv: cannot open " + path);
    out << "#schema=" << schema << "\n";
    out << "lambda_re,lambda_im,mode,value_re,value_im\n";
    for (const auto& r : rows) {
        out << format_double(r.lambda.real()) << "," << format_double(r.lambda.imag()) << ","
            << r.mode << "," << format_double(r.value.real()) << ","
            << format_double(r.value.imag()) << "\n";
    }
}

void write_metric_csv(const std::string& path, const std::string& schema,
                      const std::vector<std::pair<std::string, double>>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_metric_csv: cannot open " + path);
    out << "#schema=" << schema << "\n";
    out << "metric,value\n";
    for (const auto& [k, v] : rows) out << k << "," << format_double(v) << "\n";
}

}  // namespace specproj::io
