#pragma once

#include <complex>
#include <cstdint>

#include "frf/common.hpp"
#include "frf/rng.hpp"

namespace frf {

enum class BasisKind { Gaussian, Stable, TruncatedStable, CompoundPoissonPareto };

/// Infinitely divisible random measure with characteristics (sigma, nu):
/// Gaussian (alpha = 2), exactly alpha-stable, truncated stable
/// nu(dy) = I(|y|<=1)|y|^{-1-alpha} dy, or compound Poisson with symmetric
/// Pareto jumps. All non-Gaussian kinds carry sigma = 0 and stable tails
/// y^alpha nu([y,inf)) -> c+.
struct LevyBasisSpec {
  BasisKind kind = BasisKind::Gaussian;
  double alpha = 2.0;
  double sigma = 1.0;           // Gaussian
  double c_plus = 0.0, c_minus = 0.0;
  double rate = 1.0;            // CompoundPoissonPareto jump intensity
  double tail_scale = 1.0;      // CompoundPoissonPareto Pareto scale

  static LevyBasisSpec gaussian(double sigma);
  static LevyBasisSpec stable(double alpha, double c_plus, double c_minus);
  static LevyBasisSpec truncated_stable(double alpha);
  static LevyBasisSpec compound_poisson_pareto(double alpha, double rate, double tail_scale);

  /// omega_alpha(theta), the angular factor of the limiting stable CF
  /// exponent: E e^{i theta W(A)} = exp{-Leb(A) |theta|^alpha omega(theta)}.
  std::complex<double> omega(double theta) const;
};

/// One cell increment M(A) with Leb(A) = area.
double sample_cell(const LevyBasisSpec& spec, double area, RngStream& rng);

struct GridSpec {
  int n1 = 1, n2 = 1;       // cells per axis
  double h1 = 1.0, h2 = 1.0;  // cell spacings
};

/// n1 x n2 i.i.d. cell increments, entry (i,j) keyed by (seed, i, j): the
/// result is independent of traversal order and thread count.
Array2D<double> noise_grid(const LevyBasisSpec& spec, const GridSpec& grid, std::uint64_t seed,
                           int threads = 1);

/// Cumulative sheet M((0, t]) at t = (i h1, j h2), i = 0..n1, j = 0..n2
/// (first row and column identically 0).
Array2D<double> levy_sheet(const LevyBasisSpec& spec, const GridSpec& grid, std::uint64_t seed);

namespace detail {
/// Standard stable draw S(alpha, beta; 1) in the S1 parametrization with CF
/// exp{-|t|^alpha (1 - i beta tan(pi alpha/2) sgn t)} (Chambers-Mallows-Stuck).
double standard_stable(double alpha, double beta, RngStream& rng);
/// Truncated-stable small-jump cutoff for a cell of the given area.
double truncated_stable_cutoff(double alpha, double area);
}  // namespace detail

}  // namespace frf
