#pragma once

#include "klf/halfplane.hpp"
#include "klf/specfun.hpp"

namespace klf {

struct TruncationSpec {
  int lattice_radius = 120;      // sup-norm cutoff for direct sums
  double tail_threshold = 1e-14; // absolute stopping threshold for exponential sums
  int m1_max = 64;               // cap on |m_1| in the Fourier terms
};

/// Throws DomainError unless all fields are positive.
void validate(const TruncationSpec& t);

enum class SeriesTag { E_STAR, E_PRIME };

struct LaurentData {
  double pole_coefficient = 0.0;
  double constant_term = 0.0;
  SeriesTag series_tag = SeriesTag::E_STAR;
};

// ---------------------------------------------------------------------------
// Direct lattice sums. Valid only for s > 1; all throw DomainError otherwise.
// The returned value is the raw truncated sum over 0 < |m|_inf <= radius.

/// sum over nonzero m of (det tau)^s / |m tau|^{n s}   (|.| Euclidean)
double e_prime_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t = {});

/// Same over primitive vectors (gcd of entries equal to 1).
double e_primitive_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t = {});

/// pi^{-ns/2} Gamma(ns/2) * e_prime_direct.
double e_star_direct(const HalfPlanePoint& p, double s, const TruncationSpec& t = {});

/// pi^{-ns/2} Gamma(ns/2).
double completion_factor(int n, double s);

/// pi^{ns/2} / Gamma(ns/2), the factor taking E* to E'.
double e_prime_over_e_star(int n, double s);

/// Omitted tail of e_prime_direct beyond sup-norm `radius`:
///   bound      rigorous upper bound, from |m tau|^2 >= |m|^2 / ||tau^{-1}||_F^2
///   asymptotic midpoint-rule integral of the summand over |x|_inf > radius + 1/2;
///              relative error O(radius^-2)
struct DirectTail {
  double bound = 0.0;
  double asymptotic = 0.0;
};

DirectTail direct_tail(const HalfPlanePoint& p, double s, int radius);

// ---------------------------------------------------------------------------
// Meromorphic continuation by the recursive Poisson/K-integral expansion.

/// The three summands of the expansion and their total.
struct FastExpansion {
  double value = 0.0;
  double homogeneous = 0.0;  // y-power times E*_{n-1}(tau', ns/(n-1))
  double polar = 0.0;        // Gamma * zeta(n(s-1)+1) term, carries the pole
  double fourier = 0.0;      // K-integral double sum
  double estimated_error = 0.0;
};

/// Valid on real s > 1 - 1/(2n), s != 1. Throws PoleError at s = 1 and
/// DomainError outside that range. n = 1 evaluates 2 pi^{-s/2} Gamma(s/2) zeta(s).
FastExpansion e_star_expansion(const HalfPlanePoint& p, double s, const TruncationSpec& t = {},
                               const QuadratureSpec& q = {});

double e_star_fast(const HalfPlanePoint& p, double s, const TruncationSpec& t = {}, const QuadratureSpec& q = {});

struct EtaValue {
  double g = 0.0;
  double log_g = 0.0;
  double estimated_error = 0.0;  // absolute, on log g
};

/// Generalized eta function g(tau); equals |eta(z)| for n = 2.
EtaValue eta_generalized(const HalfPlanePoint& p, const TruncationSpec& t = {}, const QuadratureSpec& q = {});

double g_of_tau(const HalfPlanePoint& p, const TruncationSpec& t = {}, const QuadratureSpec& q = {});

/// Pole coefficient and constant term at s = 1, in closed form from the
/// y-parameters and log g(tau).
LaurentData laurent_at_1(const HalfPlanePoint& p, SeriesTag which, const TruncationSpec& t = {},
                         const QuadratureSpec& q = {});

}  // namespace klf
