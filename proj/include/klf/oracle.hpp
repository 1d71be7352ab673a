#pragma once

#include <utility>
#include <vector>

#include "klf/specfun.hpp"

namespace klf {

/// |eta(z)| for z = x + iy via the truncated q-product
///   |e^{pi i z / 12} prod_{k=1}^{terms} (1 - e^{2 pi i k z})|.
/// Throws DomainError for y <= 0 or terms < 1.
double dedekind_eta_abs(double x_coord, double y_coord, int terms = 60);

/// Both sides of the one-dimensional Poisson summation identity
///   sum_m exp(-pi t (b + c m)^2) = 1/(c sqrt t) sum_m exp(2 pi i b m / c) exp(-pi m^2 / (t c^2)),
/// each truncated to |m| <= cutoff. first = lattice side, second = dual side.
std::pair<double, double> poisson_check(double t, double b, double c, int cutoff);

/// Embedding signature of a number field: r real embeddings and s_c pairs of
/// complex embeddings, with delta_i = 1 (real) or 2 (complex) for
/// i = 1..m+1, m = r + s_c - 1. When r >= 1 the last embedding is real.
class Signature {
 public:
  /// Throws DomainError unless r + s_c >= 2.
  Signature(int r, int s_c);

  int real_embeddings() const noexcept { return r_; }
  int complex_pairs() const noexcept { return s_c_; }
  int degree() const noexcept { return r_ + 2 * s_c_; }
  int unit_rank() const noexcept { return r_ + s_c_ - 1; }
  bool all_complex() const noexcept { return r_ == 0; }
  const std::vector<int>& delta() const noexcept { return delta_; }

 private:
  int r_;
  int s_c_;
  std::vector<int> delta_;
};

/// Both sides of the integral scaling identity used to write a Dedekind zeta
/// function as an integral of an Eisenstein series. With n = degree, m = unit rank:
///   all complex:  I(a) = int (sum_{i<=m} a_i^2 t_i^2 + a_{m+1}^2 (t_1...t_m)^{-2})^{-ns/2} dt/t
///                 rhs  = (a_1^2 ... a_{m+1}^2)^{-s} I(1)
///   mixed:        I(a) = int (sum_{i<=m} a_i^2 t_i^2 + a_{m+1}^2 (t_1^{d_1}...t_m^{d_m})^{-2})^{-ns/2} dt/t
///                 rhs  = (a_1^{d_1} ... a_{m+1}^{d_{m+1}})^{-s} I(1)
/// first = I(a), second = rhs. Supports m in {1, 2}; throws UnsupportedError
/// beyond that and DomainError for non-positive a_i or ns/2 <= 1.
std::pair<double, double> hecke_scaling_check(const Signature& sig, const std::vector<double>& a, double s,
                                              const QuadratureSpec& q = {});

}  // namespace klf
