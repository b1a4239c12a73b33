#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcag/circular.hpp"

namespace rcag {

/// Link g(x) = 2 atan(x), mapping the real line onto (-pi, pi).
[[nodiscard]] double link(double x) noexcept;

/// g^{-1}(t) = tan(t/2). Throws InvalidInput unless |t| < pi.
[[nodiscard]] double link_inverse(double t);

/// Signed offset a - b wrapped into (-pi, pi); exactly +-pi is pulled
/// one ulp toward zero so link_inverse stays finite.
[[nodiscard]] double wrapped_offset(double a, double b) noexcept;

enum class ProcessKind { IidUniform, IidVonMises, IidWrappedCauchy, Larma, Car };

/// Generator description with a textual form such as "lar1:rho=0.9",
/// "lma1:rho=0.9", "lar2:rho=0.5,0.4", "larma:ar=0.5,ma=0.3",
/// "car:p=2,mu=0,kappa=3,alpha=0.5,0.5", "unif", "vm:mu=0,kappa=2",
/// "wc:mu=0,rho=0.5". LARMA kinds accept sigma=<innovation sd>; every kind
/// except the i.i.d. ones accepts burn=<steps>.
struct ProcessSpec {
    ProcessKind kind = ProcessKind::IidUniform;
    double mu = 0.0;
    std::vector<double> ar;  ///< AR (LARMA) or CAR coefficients
    std::vector<double> ma;
    double kappa = 0.0;  ///< CAR / von Mises concentration
    double rho = 0.0;    ///< wrapped Cauchy resultant length
    double sigma = 1.0;  ///< LARMA innovation standard deviation
    std::size_t burn_in = 500;

    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

/// Throws ParseError naming the offending field.
[[nodiscard]] ProcessSpec parse_process_spec(std::string_view text);

/// Canonical text; parse_process_spec(to_string(s)) reproduces s.
[[nodiscard]] std::string to_string(const ProcessSpec& spec);

/// True when the AR polynomial of x_t = sum phi_i x_{t-i} + e_t is stationary.
[[nodiscard]] bool ar_is_stationary(std::span<const double> phi);

/// Gaussian ARMA with N(0, sigma^2) innovations, started at zero, burned in
/// and mapped through Theta_t = g(X_t) + mu mod 2pi.
[[nodiscard]] AngleSeries gen_larma(const ProcessSpec& spec, std::size_t length, RngSeed seed);

/// Theta_t ~ vM(mu_t, kappa), mu_t = mu + g(sum_j alpha_j g^{-1}(theta_{t-j} - mu)).
/// The first p values are i.i.d. vM(mu, kappa) and fall inside the burn-in.
[[nodiscard]] AngleSeries gen_car(const ProcessSpec& spec, std::size_t length, RngSeed seed);

/// Dispatches on spec.kind.
[[nodiscard]] AngleSeries generate(const ProcessSpec& spec, std::size_t length, RngSeed seed);

}  // namespace rcag
