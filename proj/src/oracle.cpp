#include "klf/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "klf/errors.hpp"
#include "klf/summation.hpp"

namespace klf {

namespace {
constexpr double kPi = std::numbers::pi;
}

double dedekind_eta_abs(double x_coord, double y_coord, int terms) {
  if (!(y_coord > 0.0)) throw DomainError("dedekind_eta_abs: imaginary part must be positive");
  if (terms < 1) throw DomainError("dedekind_eta_abs: need at least one product term");
  // |e^{pi i z/12}| = e^{-pi y/12}; product accumulated in log-modulus
  double log_abs = -kPi * y_coord / 12.0;
  const std::complex<double> q = std::polar(std::exp(-2.0 * kPi * y_coord), 2.0 * kPi * x_coord);
  std::complex<double> qk = 1.0;
  for (int k = 1; k <= terms; ++k) {
    qk *= q;
    log_abs += std::log(std::abs(1.0 - qk));
  }
  return std::exp(log_abs);
}

std::pair<double, double> poisson_check(double t, double b, double c, int cutoff) {
  if (!(t > 0.0) || !(c > 0.0)) throw DomainError("poisson_check: t and c must be positive");
  if (cutoff < 1) throw DomainError("poisson_check: cutoff must be >= 1");
  CompensatedSum lattice;
  CompensatedSum dual;
  dual.add(1.0);
  for (int m = -cutoff; m <= cutoff; ++m) {
    const double u = b + c * m;
    lattice.add(std::exp(-kPi * t * u * u));
  }
  for (int m = 1; m <= cutoff; ++m) {
    // +m and -m: imaginary parts cancel
    dual.add(2.0 * std::cos(2.0 * kPi * b * m / c) * std::exp(-kPi * m * m / (t * c * c)));
  }
  return {lattice.value(), dual.value() / (c * std::sqrt(t))};
}

Signature::Signature(int r, int s_c) : r_(r), s_c_(s_c) {
  if (r < 0 || s_c < 0) throw DomainError("Signature: embedding counts must be nonnegative");
  if (r + s_c < 2) throw DomainError("Signature: need r + s_c >= 2");
  // complex embeddings first so that the (m+1)-st is real whenever r >= 1
  delta_.assign(static_cast<std::size_t>(s_c), 2);
  delta_.insert(delta_.end(), static_cast<std::size_t>(r), 1);
}

namespace {

// log of the integrand in u = log t, for coefficient squares a2 and
// exponents e_i on the product term.
double log_integrand(const std::vector<double>& u, const std::vector<double>& a2, const std::vector<int>& e,
                     double half_power) {
  const std::size_t m = u.size();
  // log(sum exp(l_i)) with l_i = log a_i^2 + 2 u_i, l_{m+1} = log a_{m+1}^2 - 2 sum e_i u_i
  std::vector<double> l(m + 1);
  double prod = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    l[i] = std::log(a2[i]) + 2.0 * u[i];
    prod += e[i] * u[i];
  }
  l[m] = std::log(a2[m]) - 2.0 * prod;
  double top = l[0];
  for (double v : l) top = std::max(top, v);
  double acc = 0.0;
  for (double v : l) acc += std::exp(v - top);
  return -half_power * (top + std::log(acc));
}

double scaling_integral(const std::vector<double>& a, const std::vector<int>& e, double half_power,
                        const QuadratureSpec& q) {
  const std::size_t m = e.size();
  std::vector<double> a2(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a2[i] = a[i] * a[i];
  if (m == 1) {
    auto f = [&](double u) { return log_integrand({u}, a2, e, half_power); };
    return std::exp(log_integrate_line(f, q));
  }
  QuadratureSpec inner_q = q;
  inner_q.relative_tolerance = std::max(1e-14, 0.1 * q.relative_tolerance);
  inner_q.max_refinements = q.max_refinements + 2;
  auto outer = [&](double u1) {
    auto inner = [&](double u2) { return log_integrand({u1, u2}, a2, e, half_power); };
    return log_integrate_line(inner, inner_q);
  };
  return std::exp(log_integrate_line(outer, q));
}

}  // namespace

std::pair<double, double> hecke_scaling_check(const Signature& sig, const std::vector<double>& a, double s,
                                              const QuadratureSpec& q) {
  validate(q);
  const int m = sig.unit_rank();
  if (m > 2) throw UnsupportedError("hecke_scaling_check: only unit rank 1 or 2 is supported, got " + std::to_string(m));
  if (a.size() != static_cast<std::size_t>(m + 1))
    throw ShapeError("hecke_scaling_check: expected " + std::to_string(m + 1) + " coefficients");
  for (double v : a) {
    if (!(v > 0.0)) throw DomainError("hecke_scaling_check: coefficients must be positive");
  }
  const int n = sig.degree();
  const double half_power = 0.5 * n * s;
  if (!(half_power > 1.0)) throw DomainError("hecke_scaling_check: requires ns/2 > 1");

  std::vector<int> product_exponents(static_cast<std::size_t>(m), 1);
  double log_scale = 0.0;
  if (sig.all_complex()) {
    for (double v : a) log_scale += 2.0 * std::log(v);
  } else {
    const auto& delta = sig.delta();
    for (int i = 0; i < m; ++i) product_exponents[static_cast<std::size_t>(i)] = delta[static_cast<std::size_t>(i)];
    for (int i = 0; i <= m; ++i) log_scale += delta[static_cast<std::size_t>(i)] * std::log(a[static_cast<std::size_t>(i)]);
  }

  const double lhs = scaling_integral(a, product_exponents, half_power, q);
  const double unit = scaling_integral(std::vector<double>(a.size(), 1.0), product_exponents, half_power, q);
  return {lhs, std::exp(-s * log_scale) * unit};
}

}  // namespace klf
