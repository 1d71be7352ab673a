#include "klf/halfplane.hpp"

#include <cmath>
#include <string>

#include "klf/errors.hpp"

namespace klf {

HalfPlanePoint::HalfPlanePoint(int n, std::vector<double> x_flat, std::vector<double> y)
    : n_(n), x_(std::move(x_flat)), y_(std::move(y)), diag_(static_cast<std::size_t>(n), 1.0) {
  // c_{n-1} = 1, c_j = c_{j+1} * y_{n-1-j}  (0-based)
  for (int j = n - 2; j >= 0; --j) {
    diag_[static_cast<std::size_t>(j)] =
        diag_[static_cast<std::size_t>(j + 1)] * y_[static_cast<std::size_t>(n - 2 - j)];
  }
}

std::size_t HalfPlanePoint::flat_index(int i, int j) const {
  // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries
  const int before = i * (n_ - 1) - i * (i - 1) / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

double HalfPlanePoint::x(int i, int j) const {
  if (i < 0 || j >= n_ || i >= j) return 0.0;
  return x_[flat_index(i, j)];
}

double HalfPlanePoint::entry(int i, int j) const {
  if (i > j) return 0.0;
  if (i == j) return diag(j);
  return x(i, j) * diag(j);
}

Matrix HalfPlanePoint::matrix() const {
  Matrix m{n_, std::vector<double>(static_cast<std::size_t>(n_ * n_), 0.0)};
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m.a[static_cast<std::size_t>(i * n_ + j)] = entry(i, j);
  return m;
}

HalfPlanePoint make_point(int n, const UnipotentPart& x, std::vector<double> y) {
  if (n < 2) throw DomainError("make_point: dimension must be at least 2, got " + std::to_string(n));
  if (y.size() != static_cast<std::size_t>(n - 1))
    throw ShapeError("make_point: expected " + std::to_string(n - 1) + " y-parameters, got " +
                     std::to_string(y.size()));
  for (double v : y) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("make_point: y-parameters must be positive and finite");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  if (x.empty()) {
    flat.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0.0);
  } else {
    if (x.size() != static_cast<std::size_t>(n - 1))
      throw ShapeError("make_point: unipotent part must have n-1 rows");
    for (int i = 0; i < n - 1; ++i) {
      const auto& row = x[static_cast<std::size_t>(i)];
      if (row.size() != static_cast<std::size_t>(n - 1 - i))
        throw ShapeError("make_point: unipotent row " + std::to_string(i) + " must have " +
                         std::to_string(n - 1 - i) + " entries");
      for (double v : row) {
        if (!std::isfinite(v)) throw DomainError("make_point: unipotent entries must be finite");
        flat.push_back(v);
      }
    }
  }
  return HalfPlanePoint(n, std::move(flat), std::move(y));
}

HalfPlanePoint make_point(int n, std::vector<double> y) { return make_point(n, UnipotentPart{}, std::move(y)); }

HalfPlanePoint identity_point(int n) {
  return make_point(n, std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
}

HalfPlanePoint z_to_point(double x_coord, double y_coord) {
  if (!(y_coord > 0.0)) throw DomainError("z_to_point: imaginary part must be positive");
  return make_point(2, UnipotentPart{{x_coord}}, {y_coord});
}

namespace {

void check_length(const HalfPlanePoint& p, std::size_t len, const char* who) {
  if (len != static_cast<std::size_t>(p.dim()))
    throw ShapeError(std::string(who) + ": vector length " + std::to_string(len) + " does not match dimension " +
                     std::to_string(p.dim()));
}

}  // namespace

double squared_row_norm(const HalfPlanePoint& p, std::span<const std::int64_t> v) {
  check_length(p, v.size(), "squared_row_norm");
  const int n = p.dim();
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i <= j; ++i) col += static_cast<double>(v[static_cast<std::size_t>(i)]) * p.entry(i, j);
    total += col * col;
  }
  return total;
}

TermGeometry term_geometry(const HalfPlanePoint& p, std::span<const std::int64_t> v) {
  check_length(p, v.size(), "term_geometry");
  const int n = p.dim();
  TermGeometry g;
  g.b.resize(static_cast<std::size_t>(n - 1));
  g.c.resize(static_cast<std::size_t>(n - 1));
  double m2 = 0.0;
  for (int j = 1; j < n; ++j) {
    double b = 0.0;
    for (int i = 0; i < j; ++i) b += static_cast<double>(v[static_cast<std::size_t>(i)]) * p.entry(i, j);
    const double c = p.diag(j);
    const double mj = static_cast<double>(v[static_cast<std::size_t>(j)]);
    g.b[static_cast<std::size_t>(j - 1)] = b;
    g.c[static_cast<std::size_t>(j - 1)] = c;
    m2 += (mj / c) * (mj / c);
    g.d += b * mj / c;
  }
  g.m_norm = std::sqrt(m2);
  return g;
}

DualGeometry dual_geometry(const HalfPlanePoint& p, std::int64_t m1, std::span<const std::int64_t> k) {
  const int n = p.dim();
  if (k.size() != static_cast<std::size_t>(n - 1))
    throw ShapeError("dual_geometry: frequency vector must have length n-1");
  DualGeometry g;
  g.w.assign(static_cast<std::size_t>(n - 1), 0.0);
  // tau' w^T = k^T, tau' upper triangular with rows/cols 1..n-1 of tau
  for (int j = n - 1; j >= 1; --j) {
    double rhs = static_cast<double>(k[static_cast<std::size_t>(j - 1)]);
    for (int l = j + 1; l < n; ++l) rhs -= p.entry(j, l) * g.w[static_cast<std::size_t>(l - 1)];
    g.w[static_cast<std::size_t>(j - 1)] = rhs / p.diag(j);
  }
  double norm2 = 0.0;
  double shift = 0.0;
  for (int j = 1; j < n; ++j) {
    const double wj = g.w[static_cast<std::size_t>(j - 1)];
    norm2 += wj * wj;
    shift += wj * p.entry(0, j);
  }
  g.m_norm = std::sqrt(norm2);
  g.d = static_cast<double>(m1) * shift;
  return g;
}

HalfPlanePoint truncate(const HalfPlanePoint& p) {
  const int n = p.dim();
  if (n < 2) throw DomainError("truncate: cannot remove a row and column from a 1x1 point");
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) flat.push_back(p.x(i, j));
  std::vector<double> y(p.y().begin(), p.y().end() - 1);
  return HalfPlanePoint(n - 1, std::move(flat), std::move(y));
}

double det_tau(const HalfPlanePoint& p) {
  const int n = p.dim();
  double det = 1.0;
  for (int i = 0; i < n - 1; ++i) det *= std::pow(p.y(i), n - 1 - i);
  return det;
}

double frobenius_norm(const HalfPlanePoint& p) {
  const int n = p.dim();
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) total += p.entry(i, j) * p.entry(i, j);
  return std::sqrt(total);
}

double inverse_frobenius_norm(const HalfPlanePoint& p) {
  const int n = p.dim();
  // Column-by-column back substitution for tau * X = I.
  double total = 0.0;
  std::vector<double> col(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      double rhs = (i == c) ? 1.0 : 0.0;
      for (int l = i + 1; l < n; ++l) rhs -= p.entry(i, l) * col[static_cast<std::size_t>(l)];
      col[static_cast<std::size_t>(i)] = rhs / p.diag(i);
      total += col[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
    }
  }
  return std::sqrt(total);
}

}  // namespace klf
