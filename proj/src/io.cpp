#include "rcag/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rcag/errors.hpp"

namespace rcag {

AngleUnit parse_angle_unit(std::string_view text) {
    if (text == "radians" || text == "rad") {
        return AngleUnit::Radians;
    }
    if (text == "degrees" || text == "deg") {
        return AngleUnit::Degrees;
    }
    throw InvalidInput("unknown angle unit '" + std::string(text) + "' (expected radians or degrees)");
}

Rescale parse_rescale(std::string_view text) {
    if (text == "none") {
        return Rescale::None;
    }
    if (text == "latitude" || text == "lat") {
        return Rescale::Latitude;
    }
    if (text == "longitude" || text == "lon") {
        return Rescale::Longitude;
    }
    throw InvalidInput("unknown rescale '" + std::string(text) + "' (expected none, latitude or longitude)");
}

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

double to_circle(double v, AngleUnit unit, Rescale rescale) {
    if (unit == AngleUnit::Degrees) {
        v = v * std::numbers::pi / 180.0;
    }
    switch (rescale) {
        case Rescale::None:
            return v;
        case Rescale::Latitude:
            return (v + std::numbers::pi / 2.0) * 2.0;
        case Rescale::Longitude:
            return v + std::numbers::pi;
    }
    return v;
}

}  // namespace

AngleSeries parse_angles(std::istream& in, AngleUnit unit, Rescale rescale) {
    AngleSeries out;
    std::string line;
    std::size_t line_no = 0;
    bool seen_payload = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (line_no == 1 && s.starts_with("\xEF\xBB\xBF")) {
            s = trim(s.substr(3));
        }
        if (s.empty() || s.front() == '#') {
            continue;
        }
        double v = 0.0;
        if (!parse_double(s, v)) {
            if (!seen_payload) {
                seen_payload = true;  // header
                continue;
            }
            throw ParseError("not a number: '" + std::string(s) + "'", line_no);
        }
        seen_payload = true;
        out.push_back(Angle::from_radians(to_circle(v, unit, rescale)));
    }
    if (out.empty()) {
        throw InvalidInput("no angle values found in input");
    }
    return out;
}

AngleSeries parse_angles(const std::filesystem::path& path, AngleUnit unit, Rescale rescale) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path.string() + "'");
    }
    return parse_angles(in, unit, rescale);
}

void write_angles(std::ostream& out, std::span<const Angle> series, AngleUnit unit) {
    char buf[64];
    for (const Angle a : series) {
        const double v = unit == AngleUnit::Degrees ? a.value() * 180.0 / std::numbers::pi : a.value();
        const int len = std::snprintf(buf, sizeof buf, "%.12g\n", v);
        out.write(buf, len);
    }
}

void write_angles(const std::filesystem::path& path, std::span<const Angle> series, AngleUnit unit) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    write_angles(out, series, unit);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

}  // namespace rcag
