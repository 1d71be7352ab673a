// Truncated lattice sums for E'_n, E_n and E*_n in the region of absolute
// convergence, plus tail estimates for the truncation.

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "klf/eisenstein.hpp"
#include "klf/errors.hpp"
#include "klf/summation.hpp"

namespace klf {

void validate(const TruncationSpec& t) {
  if (t.lattice_radius < 1) throw DomainError("truncation: lattice_radius must be >= 1");
  if (!(t.tail_threshold > 0.0)) throw DomainError("truncation: tail_threshold must be positive");
  if (t.m1_max < 1) throw DomainError("truncation: m1_max must be >= 1");
}

double completion_factor(int n, double s) {
  const double h = 0.5 * n * s;
  return std::pow(std::numbers::pi, -h) * gamma_real(h);
}

double e_prime_over_e_star(int n, double s) {
  const double h = 0.5 * n * s;
  return std::pow(std::numbers::pi, h) / gamma_real(h);
}

namespace {

void require_convergent(double s, const char* who) {
  if (!(s > 1.0)) throw DomainError(std::string(who) + ": direct sum diverges at and below s=1");
}

// Sum of |m tau|^{-ns} over one representative of each {m, -m}, doubled.
// Slices are indexed by (leading coordinate, its value); each slice is
// accumulated with compensation and the slices are reduced in fixed order.
double half_lattice_sum(const HalfPlanePoint& p, double s, int R, bool primitive_only) {
  const int n = p.dim();
  const double expo = -0.5 * n * s;
  const Matrix tau = p.matrix();
  std::vector<double> slices;
  slices.reserve(static_cast<std::size_t>(n * R));

  std::vector<std::int64_t> m(static_cast<std::size_t>(n), 0);
  for (int lead = 0; lead < n; ++lead) {
    for (int lead_value = 1; lead_value <= R; ++lead_value) {
      CompensatedSum slice;
      std::fill(m.begin(), m.end(), 0);
      m[static_cast<std::size_t>(lead)] = lead_value;
      if (lead == n - 1) {
        if (!primitive_only || lead_value == 1) slice.add(std::pow(static_cast<double>(lead_value) * lead_value, expo));
        slices.push_back(slice.value());
        continue;
      }
      // odometer over coordinates lead+1 .. n-2; the last coordinate is the inner loop
      for (int i = lead + 1; i < n - 1; ++i) m[static_cast<std::size_t>(i)] = -R;
      while (true) {
        // row image of the prefix m_0..m_{n-2}
        double partial = 0.0;
        for (int j = 0; j < n - 1; ++j) {
          double u = 0.0;
          for (int i = 0; i <= j; ++i) u += static_cast<double>(m[static_cast<std::size_t>(i)]) * tau(i, j);
          partial += u * u;
        }
        double base = 0.0;
        for (int i = 0; i < n - 1; ++i) base += static_cast<double>(m[static_cast<std::size_t>(i)]) * tau(i, n - 1);
        std::int64_t prefix_gcd = 0;
        if (primitive_only) {
          for (int i = 0; i < n - 1; ++i) prefix_gcd = std::gcd(prefix_gcd, m[static_cast<std::size_t>(i)]);
        }
        for (int last = -R; last <= R; ++last) {
          if (primitive_only && std::gcd(prefix_gcd, static_cast<std::int64_t>(last)) != 1) continue;
          const double u = base + last;  // tau(n-1,n-1) = 1
          slice.add(std::pow(partial + u * u, expo));
        }
        int i = n - 2;
        while (i > lead && m[static_cast<std::size_t>(i)] == R) {
          m[static_cast<std::size_t>(i)] = -R;
          --i;
        }
        if (i <= lead) break;
        ++m[static_cast<std::size_t>(i)];
      }
      slices.push_back(slice.value());
    }
  }
  return 2.0 * compensated_total(slices);
}

}  // namespace

double e_prime_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t) {
  require_convergent(s, "e_prime_direct");
  validate(t);
  return std::pow(det_tau(p), s) * half_lattice_sum(p, s, t.lattice_radius, false);
}

double e_primitive_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t) {
  require_convergent(s, "e_primitive_direct");
  validate(t);
  return std::pow(det_tau(p), s) * half_lattice_sum(p, s, t.lattice_radius, true);
}

double e_star_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t) {
  require_convergent(s, "e_star_direct");
  return completion_factor(p.dim(), s) * e_prime_direct(p, s, t);
}

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_k.
GaussRule gauss_legendre(int k) {
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(k)), std::vector<double>(static_cast<std::size_t>(k))};
  for (int i = 0; i < k; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// Sum over the faces of [-1,1]^n of the surface integral of |theta tau|^{-p}.
double cube_surface_integral(const HalfPlanePoint& p, double power) {
  const int n = p.dim();
  const Matrix tau = p.matrix();
  const GaussRule rule = gauss_legendre(n <= 3 ? 32 : 20);
  const int k = static_cast<int>(rule.nodes.size());
  std::vector<double> theta(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(n - 1), 0);
  CompensatedSum total;
  for (int axis = 0; axis < n; ++axis) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      double weight = 1.0;
      int free = 0;
      for (int c = 0; c < n; ++c) {
        if (c == axis) {
          theta[static_cast<std::size_t>(c)] = 1.0;
        } else {
          const auto q = static_cast<std::size_t>(idx[static_cast<std::size_t>(free++)]);
          theta[static_cast<std::size_t>(c)] = rule.nodes[q];
          weight *= rule.weights[q];
        }
      }
      double norm2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double u = 0.0;
        for (int i = 0; i <= j; ++i) u += theta[static_cast<std::size_t>(i)] * tau(i, j);
        norm2 += u * u;
      }
      total.add(weight * std::pow(norm2, -0.5 * power));
      int d = n - 2;
      while (d >= 0 && idx[static_cast<std::size_t>(d)] == k - 1) {
        idx[static_cast<std::size_t>(d)] = 0;
        --d;
      }
      if (d < 0) break;
      ++idx[static_cast<std::size_t>(d)];
    }
  }
  // faces x_axis = -1 mirror x_axis = +1 under theta -> -theta
  return 2.0 * total.value();
}

}  // namespace

DirectTail direct_tail(const HalfPlanePoint& p, double s, int radius) {
  require_convergent(s, "direct_tail");
  if (radius < 1) throw DomainError("direct_tail: radius must be >= 1");
  const int n = p.dim();
  const double ns = n * s;
  const double det_s = std::pow(det_tau(p), s);
  const double R = radius;

  DirectTail tail;
  // |m tau|^2 >= lambda |m|_inf^2 with lambda = ||tau^{-1}||_F^{-2};
  // shell count (2r+1)^n - (2r-1)^n <= 2n (2r+1)^{n-1} <= 2n (2r (1 + 1/(2R)))^{n-1}
  const double inv_f = inverse_frobenius_norm(p);
  const double lambda_pow = std::pow(inv_f, ns);  // lambda^{-ns/2}
  tail.bound = det_s * lambda_pow * 2.0 * n * std::pow(2.0 * (1.0 + 0.5 / R), n - 1) * std::pow(R, n - ns) / (ns - n);

  const double rho = R + 0.5;
  tail.asymptotic = det_s * std::pow(rho, n - ns) / (ns - n) * cube_surface_integral(p, ns);
  return tail;
}

}  // namespace klf
