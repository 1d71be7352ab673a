// Continuation of E*_n through the recursive expansion
//
//   E*_n(tau, s) = Y^s E*_{n-1}(tau', ns/(n-1))
//                + 2 (det tau)^s / det tau' * y^{-(n(s-1)+1)} pi^{-sigma} Gamma(sigma) zeta(2 sigma)
//                + (det tau)^s / det tau' * sum_{m1 != 0} sum_{k != 0} e^{2 pi i d} K_sigma(sqrt(pi)|m1| y, sqrt(pi)|w|)
//
// with sigma = n(s-1)/2 + 1/2, y = tau(0,0), Y = prod y_i^{i/(n-1)} and
// (w, d) the dual frequency of (m1, k) from dual_geometry().

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "klf/eisenstein.hpp"
#include "klf/errors.hpp"
#include "klf/lattice.hpp"
#include "klf/summation.hpp"

namespace klf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxShells = 4000;

// prod_{i=1}^{n-1} y_i^{i/(n-1)}
double homogeneity_weight(const HalfPlanePoint& p) {
  const int n = p.dim();
  double log_w = 0.0;
  for (int k = 0; k < n - 1; ++k) log_w += (k + 1.0) / (n - 1.0) * std::log(p.y(k));
  return std::exp(log_w);
}

FastExpansion base_case(double s) {
  FastExpansion out;
  out.value = 2.0 * std::pow(kPi, -0.5 * s) * gamma_real(0.5 * s) * riemann_zeta(s);
  out.homogeneous = out.value;
  out.estimated_error = 1e-14 * std::abs(out.value);
  return out;
}

// Upper bound for sum_{m1 >= 1} K_sigma(sqrt(pi) m1 y, b) using monotonicity
// in both arguments; the m1 series is summed until it stalls.
double k_column_bound(double sigma, double y, double b, const TruncationSpec& t, const QuadratureSpec& q) {
  const double a1 = std::sqrt(kPi) * y;
  CompensatedSum acc;
  double previous = 0.0;
  for (int m1 = 1; m1 <= t.m1_max; ++m1) {
    const double term = k_integral(sigma, a1 * m1, b, q);
    acc.add(term);
    if (m1 > 1 && term <= 1e-3 * previous) break;
    previous = term;
  }
  return acc.value();
}

struct FourierSum {
  double value = 0.0;
  double error = 0.0;
};

// sum_{m1 != 0} sum_{k != 0} cos(2 pi d) K_sigma(...), assembled over one
// representative k of each {k, -k} and m1 >= 1, i.e. 4 cos(2 pi m1 delta_k) K.
FourierSum fourier_sum(const HalfPlanePoint& p, double sigma, double scale, const TruncationSpec& t,
                       const QuadratureSpec& q) {
  const int n = p.dim();
  const int dim = n - 1;
  const double y = p.top_left();
  const double a1 = std::sqrt(kPi) * y;
  // |w| >= |k| / ||tau'||_F >= r / ||tau'||_F on shell r
  const double sub_norm = frobenius_norm(truncate(p));

  auto shell_bound = [&](int r) {
    const double b = std::sqrt(kPi) * r / sub_norm;
    return 4.0 * scale * static_cast<double>(shell_size(dim, r)) / 2.0 * k_column_bound(sigma, y, b, t, q);
  };

  std::vector<double> shells;
  FourierSum out;
  double next_bound = shell_bound(1);
  for (int r = 1;; ++r) {
    if (r > kMaxShells) throw ConvergenceError("e_star_fast: Fourier shells did not converge", next_bound, next_bound);
    CompensatedSum shell;
    double truncated = 0.0;
    for_each_half_shell_vector(dim, r, [&](std::span<const std::int64_t> k) {
      const DualGeometry g = dual_geometry(p, 1, k);
      const double b = std::sqrt(kPi) * g.m_norm;
      double previous = 0.0;
      int m1 = 1;
      for (; m1 <= t.m1_max; ++m1) {
        const double kv = k_integral(sigma, a1 * m1, b, q);
        shell.add(4.0 * std::cos(2.0 * kPi * m1 * g.d) * kv);
        if (scale * 4.0 * kv < 1e-3 * t.tail_threshold && (m1 == 1 || kv < previous)) break;
        previous = kv;
      }
      if (m1 > t.m1_max) truncated += 4.0 * previous;
    });
    shells.push_back(scale * shell.value());
    out.error += scale * truncated;
    const double after = shell_bound(r + 1);
    if (after < t.tail_threshold && after <= next_bound) {
      // remaining shells decay at least geometrically from here
      out.error += 2.0 * after;
      break;
    }
    next_bound = after;
  }
  out.value = compensated_total(shells);
  return out;
}

void require_fast_domain(int n, double s) {
  if (s == 1.0) throw PoleError("e_star_fast: pole at s=1");
  const double lower = 1.0 - 1.0 / (2.0 * n);
  if (!(s > lower) || !std::isfinite(s))
    throw DomainError("e_star_fast: s must exceed " + std::to_string(lower) + " for n=" + std::to_string(n));
}

FastExpansion expand(const HalfPlanePoint& p, double s, const TruncationSpec& t, const QuadratureSpec& q) {
  const int n = p.dim();
  if (n == 1) return base_case(s);

  const HalfPlanePoint sub = truncate(p);
  const FastExpansion inner = expand(sub, n * s / (n - 1.0), t, q);

  FastExpansion out;
  const double weight_s = std::pow(homogeneity_weight(p), s);
  out.homogeneous = weight_s * inner.value;

  const double log_det = std::log(det_tau(p));
  const double log_sub_det = std::log(det_tau(sub));
  const double y = p.top_left();
  const double shift = n * (s - 1.0);
  const double sigma = 0.5 * shift + 0.5;
  out.polar = 2.0 *
              std::exp(s * log_det - log_sub_det - (shift + 1.0) * std::log(y) - sigma * std::log(kPi) +
                       std::lgamma(sigma)) *
              riemann_zeta(shift + 1.0);

  const double scale = std::exp(s * log_det - log_sub_det);
  const FourierSum fourier = fourier_sum(p, sigma, scale, t, q);
  out.fourier = fourier.value;

  out.value = out.homogeneous + out.polar + out.fourier;
  out.estimated_error = weight_s * inner.estimated_error + fourier.error +
                        q.relative_tolerance * std::abs(out.fourier) + 1e-14 * std::abs(out.polar);
  return out;
}

}  // namespace

FastExpansion e_star_expansion(const HalfPlanePoint& p, double s, const TruncationSpec& t, const QuadratureSpec& q) {
  validate(t);
  validate(q);
  require_fast_domain(p.dim(), s);
  return expand(p, s, t, q);
}

double e_star_fast(const HalfPlanePoint& p, double s, const TruncationSpec& t, const QuadratureSpec& q) {
  return e_star_expansion(p, s, t, q).value;
}

EtaValue eta_generalized(const HalfPlanePoint& p, const TruncationSpec& t, const QuadratureSpec& q) {
  validate(t);
  validate(q);
  const int n = p.dim();
  if (n < 2) throw DomainError("g_of_tau: dimension must be at least 2");

  const HalfPlanePoint sub = truncate(p);
  const FastExpansion inner = expand(sub, n / (n - 1.0), t, q);
  const double homogeneous = homogeneity_weight(p) * inner.value;

  // sum_{m1 != 0} 1/|m1| sum_{k != 0} e^{2 pi i d - 2 pi |m1| |w| y}
  //   = sum_{k in half space} sum_{m1 >= 1} (4/m1) cos(2 pi m1 delta_k) e^{-2 pi m1 |w_k| y}
  const int dim = n - 1;
  const double y = p.top_left();
  const double sub_norm = frobenius_norm(sub);
  auto shell_bound = [&](int r) {
    const double qr = std::exp(-2.0 * kPi * y * r / sub_norm);
    return 4.0 * static_cast<double>(shell_size(dim, r)) / 2.0 * qr / (1.0 - qr);
  };

  std::vector<double> shells;
  double error = 0.0;
  double next_bound = shell_bound(1);
  for (int r = 1;; ++r) {
    if (r > kMaxShells) throw ConvergenceError("g_of_tau: shells did not converge", next_bound, next_bound);
    CompensatedSum shell;
    for_each_half_shell_vector(dim, r, [&](std::span<const std::int64_t> k) {
      const DualGeometry g = dual_geometry(p, 1, k);
      const double decay = std::exp(-2.0 * kPi * g.m_norm * y);
      double power = 1.0;
      int m1 = 1;
      for (; m1 <= t.m1_max; ++m1) {
        power *= decay;
        shell.add(4.0 / m1 * std::cos(2.0 * kPi * m1 * g.d) * power);
        if (4.0 * power < 1e-3 * t.tail_threshold) break;
      }
      if (m1 > t.m1_max) error += 4.0 * power * decay / (1.0 - decay);
    });
    shells.push_back(shell.value());
    const double after = shell_bound(r + 1);
    if (after < t.tail_threshold && after <= next_bound) {
      error += 2.0 * after;
      break;
    }
    next_bound = after;
  }
  const double exponent_sum = homogeneous + compensated_total(shells);

  EtaValue out;
  out.log_g = -0.25 * exponent_sum;
  out.g = std::exp(out.log_g);
  out.estimated_error = 0.25 * (error + homogeneity_weight(p) * inner.estimated_error);
  return out;
}

double g_of_tau(const HalfPlanePoint& p, const TruncationSpec& t, const QuadratureSpec& q) {
  return eta_generalized(p, t, q).g;
}

LaurentData laurent_at_1(const HalfPlanePoint& p, SeriesTag which, const TruncationSpec& t, const QuadratureSpec& q) {
  const int n = p.dim();
  const EtaValue eta = eta_generalized(p, t, q);
  double weighted_log_y = 0.0;  // log prod y_i^i
  for (int k = 0; k < n - 1; ++k) weighted_log_y += (k + 1.0) * std::log(p.y(k));

  const double pole_star = 2.0 / n;
  const double const_star = euler_gamma() - std::log(4.0 * kPi) - (2.0 / n) * weighted_log_y - 4.0 * eta.log_g;

  LaurentData out;
  out.series_tag = which;
  if (which == SeriesTag::E_STAR) {
    out.pole_coefficient = pole_star;
    out.constant_term = const_star;
    return out;
  }
  // E' = pi^{ns/2} / Gamma(ns/2) * E*; at n = 2 this is pi (2 gamma - log 4 - log y - 4 log g).
  const double at_one = e_prime_over_e_star(n, 1.0);
  // (2/n) times d/ds log(pi^{ns/2}/Gamma(ns/2)) at s = 1
  const double log_derivative = std::log(kPi) - digamma_half(n);
  out.pole_coefficient = at_one * pole_star;
  out.constant_term = at_one * (const_star + log_derivative);
  return out;
}

}  // namespace klf
