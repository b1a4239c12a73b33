#include "rcag/process.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "rcag/errors.hpp"

namespace rcag {

double link(double x) noexcept { return 2.0 * std::atan(x); }

double link_inverse(double t) {
    if (!(std::abs(t) < std::numbers::pi)) {
        throw InvalidInput("link inverse needs |t| < pi");
    }
    return std::tan(t / 2.0);
}

double wrapped_offset(double a, double b) noexcept {
    double d = std::remainder(a - b, kTwoPi);
    if (d >= std::numbers::pi) {
        d = std::nextafter(std::numbers::pi, 0.0);
    } else if (d <= -std::numbers::pi) {
        d = std::nextafter(-std::numbers::pi, 0.0);
    }
    return d;
}

bool ar_is_stationary(std::span<const double> phi) {
    // Step-down recursion: stationary iff every reflection coefficient is
    // strictly inside (-1, 1).
    std::vector<double> a(phi.begin(), phi.end());
    for (std::size_t p = a.size(); p > 0; --p) {
        const double k = a[p - 1];
        if (!std::isfinite(k) || std::abs(k) >= 1.0) {
            return false;
        }
        std::vector<double> next(p - 1);
        const double denom = 1.0 - k * k;
        for (std::size_t i = 0; i + 1 < p; ++i) {
            next[i] = (a[i] + k * a[p - 2 - i]) / denom;
        }
        a = std::move(next);
    }
    return true;
}

namespace {

double parse_number(std::string_view text, std::string_view field) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw ParseError("process spec field '" + std::string(field) + "': bad number '" + std::string(text) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

// "a=1,b=2,3" -> {a: [1], b: [2, 3]}; bare tokens extend the previous key.
std::map<std::string, std::vector<double>, std::less<>> parse_fields(std::string_view body) {
    std::map<std::string, std::vector<double>, std::less<>> fields;
    std::string current;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto token = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (token.empty()) {
            throw ParseError("process spec: empty field");
        }
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) {
            if (current.empty()) {
                throw ParseError("process spec: value '" + std::string(token) + "' has no field name");
            }
            fields[current].push_back(parse_number(token, current));
            continue;
        }
        current = std::string(trim(token.substr(0, eq)));
        if (current.empty()) {
            throw ParseError("process spec: empty field name");
        }
        if (fields.contains(current)) {
            throw ParseError("process spec field '" + current + "': given twice");
        }
        fields[current].push_back(parse_number(trim(token.substr(eq + 1)), current));
    }
    return fields;
}

class FieldReader {
public:
    FieldReader(std::string kind, std::map<std::string, std::vector<double>, std::less<>> fields)
        : kind_(std::move(kind)), fields_(std::move(fields)) {}

    std::vector<double> list(std::string_view name, bool required) {
        const auto it = fields_.find(name);
        if (it == fields_.end()) {
            if (required) {
                throw ParseError(kind_ + ": missing field '" + std::string(name) + "'");
            }
            return {};
        }
        auto v = std::move(it->second);
        fields_.erase(it);
        return v;
    }

    double scalar(std::string_view name, std::optional<double> fallback) {
        auto v = list(name, !fallback.has_value());
        if (v.empty()) {
            return *fallback;
        }
        if (v.size() != 1) {
            throw ParseError(kind_ + ": field '" + std::string(name) + "' takes one value");
        }
        return v.front();
    }

    void finish() const {
        if (!fields_.empty()) {
            throw ParseError(kind_ + ": unknown field '" + fields_.begin()->first + "'");
        }
    }

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
    std::map<std::string, std::vector<double>, std::less<>> fields_;
};

std::size_t read_burn(FieldReader& r) {
    const double b = r.scalar("burn", 500.0);
    if (b < 0.0 || b != std::floor(b)) {
        throw ParseError(r.kind() + ": field 'burn' must be a non-negative integer");
    }
    return static_cast<std::size_t>(b);
}

void validate(const ProcessSpec& s) {
    switch (s.kind) {
        case ProcessKind::Larma:
            if (!ar_is_stationary(s.ar)) {
                throw InvalidInput("LARMA AR coefficients are not stationary");
            }
            if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) {
                throw InvalidInput("LARMA innovation sd must be positive");
            }
            for (double c : s.ma) {
                if (!std::isfinite(c)) {
                    throw InvalidInput("MA coefficients must be finite");
                }
            }
            break;
        case ProcessKind::Car:
            if (s.ar.empty()) {
                throw InvalidInput("CAR needs p >= 1");
            }
            if (!(s.kappa >= 0.0)) {
                throw InvalidInput("CAR concentration must be non-negative");
            }
            break;
        case ProcessKind::IidVonMises:
            if (!(s.kappa >= 0.0)) {
                throw InvalidInput("von Mises concentration must be non-negative");
            }
            break;
        case ProcessKind::IidWrappedCauchy:
            if (!(s.rho >= 0.0 && s.rho < 1.0)) {
                throw InvalidInput("wrapped Cauchy rho must lie in [0, 1)");
            }
            break;
        case ProcessKind::IidUniform:
            break;
    }
}

}  // namespace

ProcessSpec parse_process_spec(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    const std::string kind(trim(text.substr(0, colon)));
    const auto body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    FieldReader r(kind, parse_fields(body));

    ProcessSpec s;
    if (kind == "unif") {
        s.kind = ProcessKind::IidUniform;
    } else if (kind == "vm") {
        s.kind = ProcessKind::IidVonMises;
        s.mu = r.scalar("mu", 0.0);
        s.kappa = r.scalar("kappa", std::nullopt);
    } else if (kind == "wc") {
        s.kind = ProcessKind::IidWrappedCauchy;
        s.mu = r.scalar("mu", 0.0);
        s.rho = r.scalar("rho", std::nullopt);
    } else if (kind == "lar1" || kind == "lma1" || kind == "lar2") {
        s.kind = ProcessKind::Larma;
        s.mu = r.scalar("mu", 0.0);
        auto coef = r.list("rho", true);
        const std::size_t want = kind == "lar2" ? 2 : 1;
        if (coef.size() != want) {
            throw ParseError(kind + ": field 'rho' takes " + std::to_string(want) + " value(s)");
        }
        (kind == "lma1" ? s.ma : s.ar) = std::move(coef);
        s.sigma = r.scalar("sigma", 1.0);
        s.burn_in = read_burn(r);
    } else if (kind == "larma" || kind == "lar" || kind == "lma") {
        s.kind = ProcessKind::Larma;
        s.mu = r.scalar("mu", 0.0);
        s.ar = r.list("ar", kind == "lar");
        s.ma = r.list("ma", kind == "lma");
        s.sigma = r.scalar("sigma", 1.0);
        s.burn_in = read_burn(r);
    } else if (kind == "car") {
        s.kind = ProcessKind::Car;
        s.mu = r.scalar("mu", 0.0);
        s.kappa = r.scalar("kappa", std::nullopt);
        s.ar = r.list("alpha", true);
        const double p = r.scalar("p", static_cast<double>(s.ar.size()));
        if (p != static_cast<double>(s.ar.size())) {
            throw ParseError("car: field 'p' disagrees with the number of alpha coefficients");
        }
        s.burn_in = read_burn(r);
    } else {
        throw ParseError("unknown process kind '" + kind + "'");
    }
    r.finish();
    validate(s);
    return s;
}

namespace {

void append_list(std::ostringstream& os, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
}

}  // namespace

std::string to_string(const ProcessSpec& s) {
    std::ostringstream os;
    os.precision(17);
    switch (s.kind) {
        case ProcessKind::IidUniform:
            return "unif";
        case ProcessKind::IidVonMises:
            os << "vm:mu=" << s.mu << ",kappa=" << s.kappa;
            return os.str();
        case ProcessKind::IidWrappedCauchy:
            os << "wc:mu=" << s.mu << ",rho=" << s.rho;
            return os.str();
        case ProcessKind::Larma:
            os << "larma:mu=" << s.mu;
            if (!s.ar.empty()) {
                os << ",ar=";
                append_list(os, s.ar);
            }
            if (!s.ma.empty()) {
                os << ",ma=";
                append_list(os, s.ma);
            }
            if (s.sigma != 1.0) {
                os << ",sigma=" << s.sigma;
            }
            os << ",burn=" << s.burn_in;
            return os.str();
        case ProcessKind::Car:
            os << "car:p=" << s.ar.size() << ",mu=" << s.mu << ",kappa=" << s.kappa << ",burn=" << s.burn_in
               << ",alpha=";
            append_list(os, s.ar);
            return os.str();
    }
    return {};
}

AngleSeries gen_larma(const ProcessSpec& spec, std::size_t length, RngSeed seed) {
    if (spec.kind != ProcessKind::Larma) {
        throw InvalidInput("gen_larma needs a LARMA spec");
    }
    validate(spec);
    if (length == 0) {
        throw InvalidInput("series length must be positive");
    }
    const std::size_t p = spec.ar.size();
    const std::size_t q = spec.ma.size();
    const std::size_t total = spec.burn_in + length;
    // Burn-in and retained steps draw from separate streams, so changing the
    // burn-in length leaves the retained innovations untouched.
    Rng burn_rng(seed.child("burn-in"));
    Rng rng(seed.child("series"));
    // Histories are indexed with an offset so lags before t = 0 read zero.
    const std::size_t pad = std::max(p, q);
    std::vector<double> x(pad + total, 0.0);
    std::vector<double> e(pad + total, 0.0);
    AngleSeries out;
    out.reserve(length);
    for (std::size_t t = pad; t < pad + total; ++t) {
        const bool burning = t - pad < spec.burn_in;
        e[t] = spec.sigma * (burning ? burn_rng : rng).standard_normal();
        double v = e[t];
        for (std::size_t i = 0; i < p; ++i) {
            v += spec.ar[i] * x[t - 1 - i];
        }
        for (std::size_t j = 0; j < q; ++j) {
            v += spec.ma[j] * e[t - 1 - j];
        }
        x[t] = v;
        if (!burning) {
            out.push_back(Angle::from_radians(link(v) + spec.mu));
        }
    }
    return out;
}

AngleSeries gen_car(const ProcessSpec& spec, std::size_t length, RngSeed seed) {
    if (spec.kind != ProcessKind::Car) {
        throw InvalidInput("gen_car needs a CAR spec");
    }
    validate(spec);
    if (length == 0) {
        throw InvalidInput("series length must be positive");
    }
    const std::size_t p = spec.ar.size();
    Rng burn_rng(seed.child("burn-in"));
    Rng rng(seed.child("series"));
    std::vector<double> theta;
    theta.reserve(p + spec.burn_in + length);
    for (std::size_t i = 0; i < p; ++i) {
        theta.push_back(draw_von_mises(burn_rng, spec.mu, spec.kappa));
    }
    const std::size_t steps = spec.burn_in + length;
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t t = theta.size();
        double acc = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            acc += spec.ar[j] * link_inverse(wrapped_offset(theta[t - 1 - j], spec.mu));
        }
        const double mean = Angle::from_radians(spec.mu + link(acc)).value();
        theta.push_back(draw_von_mises(s < spec.burn_in ? burn_rng : rng, mean, spec.kappa));
    }
    AngleSeries out;
    out.reserve(length);
    for (std::size_t i = theta.size() - length; i < theta.size(); ++i) {
        out.push_back(Angle::from_radians(theta[i]));
    }
    return out;
}

AngleSeries generate(const ProcessSpec& spec, std::size_t length, RngSeed seed) {
    switch (spec.kind) {
        case ProcessKind::IidUniform:
            return sample_circular_uniform(seed, length);
        case ProcessKind::IidVonMises:
            return sample_von_mises(seed, Angle::from_radians(spec.mu), spec.kappa, length);
        case ProcessKind::IidWrappedCauchy:
            return sample_wrapped_cauchy(seed, Angle::from_radians(spec.mu), spec.rho, length);
        case ProcessKind::Larma:
            return gen_larma(spec, length, seed);
        case ProcessKind::Car:
            return gen_car(spec, length, seed);
    }
    throw InvalidInput("unknown process kind");
}

}  // namespace rcag
