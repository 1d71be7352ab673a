#pragma once

#include <functional>
#include <optional>
#include <utility>

namespace klf {

struct QuadratureSpec {
  double relative_tolerance = 1e-12;
  int max_refinements = 12;
};

/// Throws DomainError unless relative_tolerance >= 1e-14 and max_refinements >= 1.
void validate(const QuadratureSpec& q);

/// Integral over the real line of exp(log_f(u)), for log-concave log_f,
/// returned as its logarithm. Trapezoid rule on an automatically sized
/// window, halving the step until two successive levels agree to
/// q.relative_tolerance. Throws ConvergenceError otherwise.
///
/// peak_hint, if given, must be the maximizer of log_f; otherwise the peak
/// is located by golden-section search.
double log_integrate_line(const std::function<double(double)>& log_f, const QuadratureSpec& q,
                          std::optional<double> peak_hint = std::nullopt);

/// Gamma function for x > 0. Throws DomainError for x <= 0.
double gamma_real(double x);

/// Riemann zeta by analytic continuation on (0,1) and (1,inf).
/// Throws PoleError at x == 1 and DomainError for x <= 0.
double riemann_zeta(double x);

/// Euler-Mascheroni constant.
constexpr double euler_gamma() { return 0.57721566490153286060651209008240243; }

/// Digamma at a positive half-integer, psi(k/2) for k >= 1, in closed form.
double digamma_half(int k);

/// K_s(a,b) = int_0^inf exp(-(a^2 t + b^2/t)) t^s dt/t for a, b > 0 and
/// any real s. Evaluated on t = e^u with log_integrate_line.
double k_integral(double s, double a, double b, const QuadratureSpec& q = {});

/// Both sides of pi^{-s} Gamma(s) / a^s = int_0^inf exp(-pi a t) t^s dt/t.
/// first = closed form, second = quadrature.
std::pair<double, double> gamma_integral_check(double s, double a, const QuadratureSpec& q = {});

}  // namespace klf
