#include "torell/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace torell {

namespace {

using nlohmann::json;

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Complex read_complex(const json& j, const std::string& key, Complex fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2) {
        throw std::invalid_argument("field '" + key + "' must be [re, im]");
    }
    return Complex(v[0].get<double>(), v[1].get<double>());
}

} // namespace

Fan load_fan(const std::string& path)
{
    json j = read_json(path);
    Fan fan;
    try {
        fan.dim = j.at("dim").get<int>();
        for (const auto& r : j.at("rays")) {
            fan.rays.push_back(r.get<std::vector<long long>>());
        }
        for (const auto& c : j.at("max_cones")) {
            fan.max_cones.push_back(c.get<std::vector<int>>());
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad fan file " + path + ": " + e.what());
    }
    auto diag = validate(fan);
    if (!diag.empty()) {
        throw std::invalid_argument("invalid fan in " + path + ": " + diag.front());
    }
    return fan;
}

Scenario load_scenario(const std::string& path)
{
    json j = read_json(path);
    Scenario s;
    try {
        std::filesystem::path base = std::filesystem::path(path).parent_path();
        std::string fan_file = j.at("fan").get<std::string>();
        s.pair.fan = load_fan((base / fan_file).string());
        for (const auto& d : j.at("delta")) {
            s.pair.delta.push_back(parse_rational(d.get<std::string>()));
        }
        s.ctx.z = read_complex(j, "z", s.ctx.z);
        s.ctx.tau = read_complex(j, "tau", s.ctx.tau);
        if (j.contains("samples")) {
            s.samples = j.at("samples").get<int>();
        }
        if (j.contains("seed")) {
            s.seed = j.at("seed").get<unsigned long long>();
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad scenario file " + path + ": " + e.what());
    }
    if (s.pair.delta.size() != s.pair.fan.rays.size()) {
        throw std::invalid_argument("scenario " + path + ": one delta per ray required");
    }
    if (!pair_valid(s.pair)) {
        throw std::invalid_argument("scenario " + path + ": delta coefficients must differ from 1");
    }
    if (!s.ctx.valid()) {
        throw std::invalid_argument("scenario " + path + ": Im(tau) must be positive");
    }
    return s;
}

StringyDivisor load_divisor(const std::string& path)
{
    json j = read_json(path);
    StringyDivisor d;
    try {
        d.rays = j.at("rays").get<std::vector<int>>();
        for (const auto& c : j.at("coefficients")) {
            d.coefficients.push_back(parse_rational(c.get<std::string>()));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad divisor file " + path + ": " + e.what());
    }
    if (d.rays.size() != d.coefficients.size()) {
        throw std::invalid_argument("divisor " + path + ": rays and coefficients differ in length");
    }
    for (const auto& a : d.coefficients) {
        if (a <= Rational(-1)) {
            throw std::invalid_argument("divisor " + path + ": coefficients must exceed -1");
        }
    }
    return d;
}

} // namespace torell
