#include "klf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "klf/errors.hpp"
#include "klf/oracle.hpp"

namespace klf {

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

double SuiteResult::max_error() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.error);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poisson", "gamma-integral", "hecke",         "eta",
                                                 "residue", "const-term",     "fast-vs-direct"};
  return names;
}

HalfPlanePoint random_point(std::mt19937_64& rng, int n, double y_lo, double y_hi) {
  std::uniform_real_distribution<double> ydist(y_lo, y_hi);
  std::uniform_real_distribution<double> xdist(-0.5, 0.5);
  std::vector<double> y(static_cast<std::size_t>(n - 1));
  for (auto& v : y) v = ydist(rng);
  UnipotentPart x(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) {
    x[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n - 1 - i));
    for (auto& v : x[static_cast<std::size_t>(i)]) v = xdist(rng);
  }
  return make_point(n, x, std::move(y));
}

namespace {

using Rng = std::mt19937_64;

CaseResult make_case(int index, double error, double tolerance,
                     std::vector<std::pair<std::string, double>> data = {}) {
  return CaseResult{index, error <= tolerance, error, tolerance, std::move(data)};
}

SuiteResult poisson_suite(Rng& rng) {
  SuiteResult out{"poisson", {}};
  std::uniform_real_distribution<double> td(0.3, 3.0), bd(-1.0, 1.0), cd(0.5, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double t = td(rng), b = bd(rng), c = cd(rng);
    const auto [lhs, rhs] = poisson_check(t, b, c, 60);
    const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    out.cases.push_back(make_case(i, err, 1e-12, {{"t", t}, {"b", b}, {"c", c}, {"lhs", lhs}, {"rhs", rhs}}));
  }
  return out;
}

SuiteResult gamma_integral_suite(Rng& rng, const QuadratureSpec& q) {
  SuiteResult out{"gamma-integral", {}};
  std::uniform_real_distribution<double> d(0.5, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double s = d(rng), a = d(rng);
    const auto [lhs, rhs] = gamma_integral_check(s, a, q);
    out.cases.push_back(make_case(i, std::abs(lhs - rhs) / std::abs(lhs), 1e-11,
                                  {{"s", s}, {"a", a}, {"lhs", lhs}, {"rhs", rhs}}));
  }
  return out;
}

SuiteResult hecke_suite(Rng& rng, const QuadratureSpec& q) {
  SuiteResult out{"hecke", {}};
  std::uniform_real_distribution<double> ad(0.5, 3.0), sd(1.2, 2.0);
  const std::vector<std::pair<int, int>> signatures = {{0, 2}, {1, 1}, {2, 1}, {3, 0}};
  int index = 0;
  for (const auto& [r, sc] : signatures) {
    const Signature sig(r, sc);
    for (int i = 0; i < 5; ++i) {
      std::vector<double> a(static_cast<std::size_t>(sig.unit_rank() + 1));
      for (auto& v : a) v = ad(rng);
      const double s = sd(rng);
      const auto [lhs, rhs] = hecke_scaling_check(sig, a, s, q);
      out.cases.push_back(make_case(index++, std::abs(lhs - rhs) / std::abs(lhs), 1e-8,
                                    {{"r", r}, {"s_c", sc}, {"s", s}, {"lhs", lhs}, {"rhs", rhs}}));
    }
  }
  return out;
}

SuiteResult eta_suite(Rng& rng, const TruncationSpec& t, const QuadratureSpec& q) {
  SuiteResult out{"eta", {}};
  std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.7, 2.0);
  for (int i = 0; i < 10; ++i) {
    const double x = xd(rng), y = yd(rng);
    const double g = g_of_tau(z_to_point(x, y), t, q);
    const double eta = dedekind_eta_abs(x, y, 80);
    out.cases.push_back(make_case(i, std::abs(g - eta), 1e-8, {{"x", x}, {"y", y}, {"g", g}, {"eta", eta}}));
  }
  return out;
}

std::vector<HalfPlanePoint> sample_points(Rng& rng, int n, int random_count) {
  std::vector<HalfPlanePoint> pts{identity_point(n)};
  for (int i = 0; i < random_count; ++i) pts.push_back(random_point(rng, n, 0.8, 1.5));
  return pts;
}

SuiteResult residue_suite(Rng& rng, const TruncationSpec& t, const QuadratureSpec& q) {
  SuiteResult out{"residue", {}};
  constexpr double eps = 1e-3;
  int index = 0;
  for (int n : {2, 3, 4}) {
    for (const auto& p : sample_points(rng, n, 3)) {
      const double up = e_star_fast(p, 1.0 + eps, t, q);
      const double down = e_star_fast(p, 1.0 - eps, t, q);
      const double residue = eps * (up - down) / 2.0;
      out.cases.push_back(make_case(index++, std::abs(residue - 2.0 / n), 5e-6, {{"n", n}, {"residue", residue}}));
    }
  }
  return out;
}

SuiteResult const_term_suite(Rng& rng, const TruncationSpec& t, const QuadratureSpec& q) {
  SuiteResult out{"const-term", {}};
  int index = 0;
  for (int n : {2, 3}) {
    for (const auto& p : sample_points(rng, n, 4)) {
      const double c0 = laurent_at_1(p, SeriesTag::E_STAR, t, q).constant_term;
      for (double eps : {1e-2, 1e-3}) {
        const double avg = 0.5 * (e_star_fast(p, 1.0 + eps, t, q) + e_star_fast(p, 1.0 - eps, t, q));
        out.cases.push_back(make_case(index++, std::abs(avg - c0), 10.0 * eps * eps,
                                      {{"n", n}, {"eps", eps}, {"average", avg}, {"constant_term", c0}}));
      }
    }
  }
  return out;
}

SuiteResult fast_vs_direct_suite(Rng& rng, const TruncationSpec& t, const QuadratureSpec& q) {
  SuiteResult out{"fast-vs-direct", {}};
  int index = 0;
  for (int n : {2, 3}) {
    std::vector<HalfPlanePoint> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(random_point(rng, n, 0.8, 1.5));
    for (double s : {1.8, 2.0, 2.5}) {
      for (const auto& p : pts) {
        const double fast = e_star_fast(p, s, t, q);
        const double direct = e_star_direct(p, s, t);
        const double bound = completion_factor(n, s) * direct_tail(p, s, t.lattice_radius).bound;
        out.cases.push_back(make_case(index++, std::abs(fast - direct), bound + 1e-8,
                                      {{"n", n}, {"s", s}, {"fast", fast}, {"direct", direct}}));
      }
    }
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, const TruncationSpec& t, const QuadratureSpec& q) {
  Rng rng(seed);
  if (name == "poisson") return poisson_suite(rng);
  if (name == "gamma-integral") return gamma_integral_suite(rng, q);
  if (name == "hecke") return hecke_suite(rng, q);
  if (name == "eta") return eta_suite(rng, t, q);
  if (name == "residue") return residue_suite(rng, t, q);
  if (name == "const-term") return const_term_suite(rng, t, q);
  if (name == "fast-vs-direct") return fast_vs_direct_suite(rng, t, q);
  throw DomainError("unknown verification suite: " + name);
}

}  // namespace klf
