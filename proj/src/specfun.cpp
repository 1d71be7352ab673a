#include "klf/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "klf/errors.hpp"

namespace klf {

void validate(const QuadratureSpec& q) {
  if (!(q.relative_tolerance >= 1e-14)) throw DomainError("quadrature: relative_tolerance must be >= 1e-14");
  if (q.max_refinements < 1) throw DomainError("quadrature: max_refinements must be >= 1");
}

namespace {

constexpr double kWindowDrop = 60.0;  // e^-60 relative to the peak
constexpr int kInitialIntervals = 32;

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double r = 0.6180339887498949;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-10 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

double locate_peak(const std::function<double(double)>& f) {
  double step = 1.0;
  double a = 0.0;
  double fa = f(a);
  // walk uphill, doubling the step, until f drops
  double dir = (f(a + 1e-3) >= fa) ? 1.0 : -1.0;
  double b = a + dir * step;
  double fb = f(b);
  while (fb > fa) {
    a = b;
    fa = fb;
    step *= 2.0;
    if (step > 1e6) throw ConvergenceError("log_integrate_line: integrand has no maximum", fa, fb);
    b = a + dir * step;
    fb = f(b);
  }
  const double lo = std::min(a - dir * step, b);
  const double hi = std::max(a - dir * step, b);
  return golden_max(f, lo, hi);
}

double window_edge(const std::function<double(double)>& f, double peak, double peak_value, double dir, double scale) {
  double delta = scale;
  for (int it = 0; it < 200; ++it) {
    const double v = f(peak + dir * delta);
    if (!(v > peak_value - kWindowDrop)) return peak + dir * delta;
    delta *= 1.5;
  }
  throw ConvergenceError("log_integrate_line: integrand does not decay", peak_value, f(peak + dir * delta));
}

}  // namespace

double log_integrate_line(const std::function<double(double)>& log_f, const QuadratureSpec& q,
                          std::optional<double> peak_hint) {
  validate(q);
  const double peak = peak_hint ? *peak_hint : locate_peak(log_f);
  const double top = log_f(peak);
  if (!std::isfinite(top)) throw ConvergenceError("log_integrate_line: non-finite integrand at peak", top, top);

  // curvature-based width estimate for the initial window step
  const double h0 = 1e-3 * (1.0 + std::abs(peak));
  const double curv = (log_f(peak + h0) - 2.0 * top + log_f(peak - h0)) / (h0 * h0);
  // on a plateau curv is rounding noise; the window search expands from here anyway
  const double width = (curv < -1.0 && std::isfinite(curv)) ? 1.0 / std::sqrt(-curv) : 1.0;

  const double lo = window_edge(log_f, peak, top, -1.0, width);
  const double hi = window_edge(log_f, peak, top, +1.0, width);

  auto g = [&](double u) { return std::exp(log_f(u) - top); };

  int intervals = kInitialIntervals;
  double h = (hi - lo) / intervals;
  double sum = 0.5 * (g(lo) + g(hi));
  for (int i = 1; i < intervals; ++i) sum += g(lo + i * h);
  double estimate = sum * h;
  double previous = estimate;

  for (int level = 1; level <= q.max_refinements; ++level) {
    double mid = 0.0;
    for (int i = 0; i < intervals; ++i) mid += g(lo + (i + 0.5) * h);
    sum += mid;
    intervals *= 2;
    h *= 0.5;
    previous = estimate;
    estimate = sum * h;
    if (level >= 2 && std::abs(estimate - previous) <= q.relative_tolerance * std::abs(estimate)) {
      return top + std::log(estimate);
    }
  }
  throw ConvergenceError("log_integrate_line: no convergence within " + std::to_string(q.max_refinements) +
                             " refinements",
                         top + std::log(previous), top + std::log(estimate));
}

double gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: argument must be positive");
  return std::tgamma(x);
}

namespace {

// B_{2j} / (2j)!, j = 1..12
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

// Stieltjes constants gamma_0..gamma_5
constexpr std::array<double, 6> kStieltjes = {
    0.57721566490153286061, -0.072815845483676724861, -0.0096903631928723184845,
    0.0020538344203033458662, 0.0023253700654673000575, 0.00079332381730106270175,
};

constexpr double kLaurentRadius = 1e-4;

double zeta_euler_maclaurin(double x) {
  constexpr int N = 12;
  double direct = 0.0;
  for (int k = N - 1; k >= 1; --k) direct += std::pow(static_cast<double>(k), -x);
  const double nx = std::pow(static_cast<double>(N), -x);
  double total = direct + N * nx / (x - 1.0) + 0.5 * nx;
  // (x)_{2j-1} N^{-x-2j+1}
  double rising = x * nx / N;
  double correction = 0.0;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    correction += kBernoulliOverFactorial[j] * rising;
    const double k = 2.0 * static_cast<double>(j) + 1.0;
    rising *= (x + k) * (x + k + 1.0) / (static_cast<double>(N) * N);
  }
  return total + correction;
}

}  // namespace

double riemann_zeta(double x) {
  if (x == 1.0) throw PoleError("riemann_zeta: pole at x = 1");
  if (!(x > 0.0)) throw DomainError("riemann_zeta: argument must be positive");
  const double u = x - 1.0;
  if (std::abs(u) < kLaurentRadius) {
    double series = 0.0;
    double power = 1.0;
    double factorial = 1.0;
    for (std::size_t k = 0; k < kStieltjes.size(); ++k) {
      if (k > 0) {
        power *= -u;
        factorial *= static_cast<double>(k);
      }
      series += kStieltjes[k] * power / factorial;
    }
    return 1.0 / u + series;
  }
  if (x > 200.0) return 1.0 + std::pow(2.0, -x);
  return zeta_euler_maclaurin(x);
}

double digamma_half(int k) {
  if (k < 1) throw DomainError("digamma_half: argument must be a positive half-integer");
  constexpr double ln2 = std::numbers::ln2;
  if (k % 2 == 0) {
    // psi(m) = -gamma + H_{m-1}
    double h = 0.0;
    for (int j = 1; j < k / 2; ++j) h += 1.0 / j;
    return -euler_gamma() + h;
  }
  // psi(m + 1/2) = -gamma - 2 ln 2 + sum_{j=1}^m 2/(2j-1)
  double h = 0.0;
  for (int j = 1; j <= k / 2; ++j) h += 2.0 / (2.0 * j - 1.0);
  return -euler_gamma() - 2.0 * ln2 + h;
}

double k_integral(double s, double a, double b, const QuadratureSpec& q) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("k_integral: a and b must be positive");
  if (!std::isfinite(s)) throw DomainError("k_integral: order must be finite");
  const double a2 = a * a;
  const double b2 = b * b;
  // maximizer of s u - a^2 e^u - b^2 e^-u
  const double z = (s + std::sqrt(s * s + 4.0 * a2 * b2)) / (2.0 * a2);
  auto log_f = [=](double u) { return s * u - a2 * std::exp(u) - b2 * std::exp(-u); };
  return std::exp(log_integrate_line(log_f, q, std::log(z)));
}

std::pair<double, double> gamma_integral_check(double s, double a, const QuadratureSpec& q) {
  if (!(s > 0.0) || !(a > 0.0)) throw DomainError("gamma_integral_check: s and a must be positive");
  constexpr double pi = std::numbers::pi;
  const double closed = std::exp(-s * std::log(pi) + std::lgamma(s) - s * std::log(a));
  auto log_f = [=](double u) { return s * u - pi * a * std::exp(u); };
  const double quad = std::exp(log_integrate_line(log_f, q, std::log(s / (pi * a))));
  return {closed, quad};
}

}  // namespace klf
