#include "frf/levy_basis.hpp"

#include <cmath>

namespace frf {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LevyBasisSpec LevyBasisSpec::gaussian(double sigma) {
  if (!(sigma > 0.0)) fail("ParameterError", "Gaussian basis requires sigma > 0");
  LevyBasisSpec s;
  s.kind = BasisKind::Gaussian;
  s.alpha = 2.0;
  s.sigma = sigma;
  return s;
}

LevyBasisSpec LevyBasisSpec::stable(double alpha, double c_plus, double c_minus) {
  if (!(alpha > 0.0 && alpha <= 2.0)) fail("ParameterError", "alpha must lie in (0,2]");
  if (c_plus < 0.0 || c_minus < 0.0 || c_plus + c_minus <= 0.0)
    fail("ParameterError", "stable basis requires c+ >= 0, c- >= 0, c+ + c- > 0");
  if (alpha == 1.0 && c_plus != c_minus)
    fail("ParameterError", "alpha = 1 requires a symmetric basis (c+ = c-)");
  LevyBasisSpec s;
  s.kind = BasisKind::Stable;
  s.alpha = alpha;
  s.sigma = 0.0;
  s.c_plus = c_plus;
  s.c_minus = c_minus;
  return s;
}

LevyBasisSpec LevyBasisSpec::truncated_stable(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) fail("ParameterError", "truncated stable needs alpha in (0,2)");
  LevyBasisSpec s;
  s.kind = BasisKind::TruncatedStable;
  s.alpha = alpha;
  s.sigma = 0.0;
  s.c_plus = s.c_minus = 1.0 / alpha;
  return s;
}

LevyBasisSpec LevyBasisSpec::compound_poisson_pareto(double alpha, double rate,
                                                     double tail_scale) {
  if (!(alpha > 0.0 && alpha < 2.0)) fail("ParameterError", "Pareto jumps need alpha in (0,2)");
  if (!(rate > 0.0) || !(tail_scale > 0.0))
    fail("ParameterError", "rate and tail scale must be positive");
  LevyBasisSpec s;
  s.kind = BasisKind::CompoundPoissonPareto;
  s.alpha = alpha;
  s.sigma = 0.0;
  s.rate = rate;
  s.tail_scale = tail_scale;
  // y^alpha nu([y,inf)) -> (rate/2) s0^alpha on each side.
  s.c_plus = s.c_minus = 0.5 * rate * std::pow(tail_scale, alpha);
  return s;
}

std::complex<double> LevyBasisSpec::omega(double theta) const {
  if (alpha == 2.0) {
    // For the Stable kind at alpha = 2 the marginal is Gaussian with
    // variance (c+ + c-) per unit area.
    double s2 = kind == BasisKind::Gaussian ? sigma * sigma : c_plus + c_minus;
    return {0.5 * s2, 0.0};
  }
  if (alpha == 1.0) return {(c_plus + c_minus) * kPi / 2.0, 0.0};
  double f = std::tgamma(2.0 - alpha) / (1.0 - alpha);
  double re = f * (c_plus + c_minus) * std::cos(kPi * alpha / 2.0);
  double im = -f * (c_plus - c_minus) * sgn(theta) * std::sin(kPi * alpha / 2.0);
  return {re, im};
}

namespace detail {

double standard_stable(double alpha, double beta, RngStream& rng) {
  double u = kPi * (rng.uniform() - 0.5);
  double w = rng.exponential();
  if (alpha == 1.0) {
    // symmetric Cauchy (asymmetric alpha = 1 is excluded upstream)
    return std::tan(u);
  }
  if (beta == 0.0) {
    return std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
           std::pow(std::cos((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
  }
  double tb = beta * std::tan(kPi * alpha / 2.0);
  double b = std::atan(tb) / alpha;
  double s = std::pow(1.0 + tb * tb, 0.5 / alpha);
  return s * std::sin(alpha * (u + b)) / std::pow(std::cos(u), 1.0 / alpha) *
         std::pow(std::cos(u - alpha * (u + b)) / w, (1.0 - alpha) / alpha);
}

double truncated_stable_cutoff(double alpha, double area) {
  // Small-jump Gaussian substitution is valid when sigma(eps)/eps >= 10,
  // sigma(eps)^2 = area * 2 eps^{2-alpha}/(2-alpha); cap at 1e-3.
  double bound = std::pow(std::sqrt(2.0 * area / (2.0 - alpha)) / 10.0, 2.0 / alpha);
  return std::min(1e-3, bound);
}

}  // namespace detail

double sample_cell(const LevyBasisSpec& spec, double area, RngStream& rng) {
  if (!(area > 0.0)) fail("InvalidArea", "cell area must be positive");
  switch (spec.kind) {
    case BasisKind::Gaussian:
      return spec.sigma * std::sqrt(area) * rng.normal();
    case BasisKind::Stable: {
      if (spec.alpha == 2.0)
        return std::sqrt(area * (spec.c_plus + spec.c_minus)) * rng.normal();
      if (spec.alpha == 1.0) {
        double scale = area * (spec.c_plus + spec.c_minus) * kPi / 2.0;
        return scale * detail::standard_stable(1.0, 0.0, rng);
      }
      // Match exp{-area |t|^a omega(t)} to the S1 parametrization
      // exp{-(s|t|)^a (1 - i beta tan(pi a/2) sgn t)}.
      double a = spec.alpha;
      double csum = spec.c_plus + spec.c_minus;
      double scale_a = area * std::tgamma(2.0 - a) * csum * std::cos(kPi * a / 2.0) / (1.0 - a);
      double beta = (spec.c_plus - spec.c_minus) / csum;
      return std::pow(scale_a, 1.0 / a) * detail::standard_stable(a, beta, rng);
    }
    case BasisKind::TruncatedStable: {
      double a = spec.alpha;
      double eps = detail::truncated_stable_cutoff(a, area);
      // Jumps with |y| in (eps, 1], density |y|^{-1-a}; symmetric, so the
      // tau_alpha compensation vanishes for every alpha regime.
      double big_rate = area * 2.0 * (std::pow(eps, -a) - 1.0) / a;
      double x = 0.0;
      std::uint64_t n = rng.poisson(big_rate);
      double em = std::pow(eps, -a) - 1.0;
      for (std::uint64_t i = 0; i < n; ++i) {
        double y = std::pow(1.0 + rng.uniform() * em, -1.0 / a);
        x += rng.uniform() < 0.5 ? y : -y;
      }
      double small_var = area * 2.0 * std::pow(eps, 2.0 - a) / (2.0 - a);
      return x + std::sqrt(small_var) * rng.normal();
    }
    case BasisKind::CompoundPoissonPareto: {
      std::uint64_t n = rng.poisson(spec.rate * area);
      double x = 0.0;
      for (std::uint64_t i = 0; i < n; ++i) {
        double y = spec.tail_scale * std::pow(rng.uniform(), -1.0 / spec.alpha);
        x += rng.uniform() < 0.5 ? y : -y;
      }
      // Symmetric jumps: the mean compensation for 1 < alpha <= 2 is 0.
      return x;
    }
  }
  return 0.0;
}

Array2D<double> noise_grid(const LevyBasisSpec& spec, const GridSpec& grid, std::uint64_t seed,
                           int threads) {
  if (grid.n1 < 1 || grid.n2 < 1 || !(grid.h1 > 0.0) || !(grid.h2 > 0.0))
    fail("ParameterError", "grid requires n_i >= 1 and h_i > 0");
  double cells = static_cast<double>(grid.n1) * static_cast<double>(grid.n2);
  if (cells > 6.4e7) fail("OverflowError", "noise grid exceeds the memory budget");
  Array2D<double> out(grid.n1, grid.n2);
  double area = grid.h1 * grid.h2;
  parallel_for(grid.n1, threads, [&](std::size_t i) {
    for (int j = 0; j < grid.n2; ++j) {
      RngStream rng(seed, 0x6e6f697365ULL, i, static_cast<std::uint64_t>(j));
      out(i, j) = sample_cell(spec, area, rng);
    }
  });
  return out;
}

Array2D<double> levy_sheet(const LevyBasisSpec& spec, const GridSpec& grid, std::uint64_t seed) {
  auto noise = noise_grid(spec, grid, seed);
  Array2D<double> sheet(grid.n1 + 1, grid.n2 + 1, 0.0);
  for (int i = 1; i <= grid.n1; ++i) {
    for (int j = 1; j <= grid.n2; ++j) {
      sheet(i, j) = noise(i - 1, j - 1) + sheet(i - 1, j) + sheet(i, j - 1) - sheet(i - 1, j - 1);
    }
  }
  return sheet;
}

}  // namespace frf
