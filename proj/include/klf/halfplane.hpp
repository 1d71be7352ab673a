#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace klf {

/// Integer row vector (m_1, ..., m_n) indexing one term of a lattice sum.
using LatticeVector = std::vector<std::int64_t>;

/// Dense row-major n x n matrix.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

/// Strictly upper triangular unipotent coefficients, ragged by row:
/// row i (0-based) holds x[i][i+1], ..., x[i][n-1], so it has n-1-i entries.
using UnipotentPart = std::vector<std::vector<double>>;

/// A point of the generalized upper half-plane in Iwasawa coordinates.
///
/// The matrix is tau = (unit upper triangular) * diag(c_1, ..., c_n) with
/// c_j = y_1 * ... * y_{n-j} for j < n and c_n = 1. Entries are therefore
/// tau(i,j) = x(i,j) * c_j above the diagonal. All indices in this API are
/// 0-based; y(k) is the 1-based y_{k+1}.
///
/// Immutable after construction. Dimension 1 (the 1x1 matrix [1]) only
/// arises as the result of truncate().
class HalfPlanePoint {
 public:
  int dim() const noexcept { return n_; }

  std::span<const double> y() const noexcept { return y_; }
  double y(int k) const { return y_.at(static_cast<std::size_t>(k)); }

  /// Unipotent coefficient x(i,j) for i < j; 0 for i >= j below/on the diagonal part.
  double x(int i, int j) const;

  /// Diagonal entry tau(j,j).
  double diag(int j) const { return diag_.at(static_cast<std::size_t>(j)); }

  /// Matrix entry tau(i,j); zero below the diagonal.
  double entry(int i, int j) const;

  /// tau(0,0) = y_1 * ... * y_{n-1}.
  double top_left() const { return diag_.front(); }

  Matrix matrix() const;

 private:
  friend HalfPlanePoint make_point(int n, const UnipotentPart& x, std::vector<double> y);
  friend HalfPlanePoint truncate(const HalfPlanePoint& p);

  HalfPlanePoint(int n, std::vector<double> x_flat, std::vector<double> y);
  std::size_t flat_index(int i, int j) const;

  int n_;
  std::vector<double> x_;  // strict upper part, row major
  std::vector<double> y_;
  std::vector<double> diag_;
};

/// Builds a point from Iwasawa coordinates.
/// Throws DomainError for n < 2 or a non-positive y entry, ShapeError for
/// wrongly sized x or y.
HalfPlanePoint make_point(int n, const UnipotentPart& x, std::vector<double> y);

/// Convenience: zero unipotent part.
HalfPlanePoint make_point(int n, std::vector<double> y);

/// Identity matrix of dimension n (all y_i = 1, x = 0).
HalfPlanePoint identity_point(int n);

/// The n = 2 point for z = x + i*y, i.e. rows (y, x), (0, 1).
HalfPlanePoint z_to_point(double x_coord, double y_coord);

/// Squared Euclidean length of the row vector v*tau.
double squared_row_norm(const HalfPlanePoint& p, std::span<const std::int64_t> v);

/// Per-term quantities of the sequential Poisson expansion, indexed j = 2..n and stored
/// at position j-2.
struct TermGeometry {
  std::vector<double> b;  // b_j = sum_{i<j} m_i tau(i,j)
  std::vector<double> c;  // c_j = tau(j,j)
  double m_norm = 0.0;    // sqrt(sum_{j>=2} m_j^2 / c_j^2)
  double d = 0.0;         // sum_{j>=2} b_j m_j / c_j
};

TermGeometry term_geometry(const HalfPlanePoint& p, std::span<const std::int64_t> v);

/// Frequency data of the Fourier term (m_1, k) after Poisson summation over
/// m_2..m_n jointly. The dual frequency is w = k * tau'^{-T}, tau' being
/// tau without its first row and column:
///   m_norm = |w|,  d = m_1 * <w, (tau(0,1), ..., tau(0,n-1))>.
/// Coincides with term_geometry's m_norm and d (for v = (m_1, k)) exactly when
/// tau' is diagonal.
struct DualGeometry {
  std::vector<double> w;
  double m_norm = 0.0;
  double d = 0.0;
};

/// k has length n-1.
DualGeometry dual_geometry(const HalfPlanePoint& p, std::int64_t m1, std::span<const std::int64_t> k);

/// tau with its first row and column removed, as an (n-1)-dimensional point.
/// Throws DomainError for n = 1.
HalfPlanePoint truncate(const HalfPlanePoint& p);

/// det tau = prod_{i=1}^{n-1} y_i^{n-i}.
double det_tau(const HalfPlanePoint& p);

/// Frobenius norms of tau and tau^{-1}. Used for lattice tail bounds:
/// |v*tau| >= |v| / ||tau^{-1}||_F.
double frobenius_norm(const HalfPlanePoint& p);
double inverse_frobenius_norm(const HalfPlanePoint& p);

}  // namespace klf
