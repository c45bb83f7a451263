#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "frf/common.hpp"
#include "frf/exponents.hpp"

namespace frf {

enum class KernelFamily { FractionalLevy, Matern, FractionalHeat, QuadrantIndicator, Custom };

/// Which initial functions g^0_1, g^0_2, g^0_12 the field representation
/// carries. AllZero: plain moving average. G12MinusG: g^0_12 = -g (stationary
/// ordinary increments). G12EqualsG: all initial functions equal g, i.e. the
/// rectangular-increment sheet representation.
enum class InitialFunctions { AllZero, G12MinusG, G12EqualsG };

struct Partials {
  double d1 = 0, d2 = 0, d12 = 0;
};

struct KernelSpec {
  KernelFamily family = KernelFamily::FractionalLevy;
  InitialFunctions init = InitialFunctions::G12MinusG;

  // FractionalLevy: H in (0,1) together with alpha, g = ||t||^{H - 2/alpha}.
  double H = 0.5;
  double alpha = 2.0;
  // Matern: scale c > 0 and smoothness chi in (-1/alpha, 1-1/alpha) \ {0}.
  // FractionalHeat: chi in (-3/(2 alpha), (3/2)(1-1/alpha)) \ {0}, c1, c2 > 0.
  double c = 1.0;
  double chi = -0.25;
  double c1 = 1.0, c2 = 1.0;
  // QuadrantIndicator values on the open quadrants (++, +-, -+, --).
  std::array<double, 4> quadrant{1.0, 0.0, 0.0, 0.0};

  // Custom hooks. custom_g is required; g0/partials fall back to g and
  // central differences when absent. smooth_scale drives quadrature
  // resolution for kernels without a singular local form.
  std::function<double(Point)> custom_g;
  std::function<double(Point)> custom_g0;
  std::function<Partials(Point)> custom_partials;
  double smooth_scale = 0.5;

  static KernelSpec fractional_levy(double H, double alpha);
  static KernelSpec matern(double c, double chi, double alpha);
  static KernelSpec fractional_heat(double chi, double c1, double c2, double alpha);
  static KernelSpec quadrant_indicator(std::array<double, 4> g);
  static KernelSpec custom(std::function<double(Point)> g, double smooth_scale);
};

/// Bound evaluator for a kernel specification: the moving-average kernel g,
/// its limit form g0 = rho^chi L, partial derivatives, rectangular
/// increments and the limit kernels of the scaling theory.
class Kernel {
 public:
  explicit Kernel(KernelSpec spec);

  const KernelSpec& spec() const { return spec_; }
  KernelFamily family() const { return spec_.family; }

  double g(Point t) const;
  double g0(Point t) const;
  Partials partials_g0(Point t) const;
  Partials partials_g(Point t) const;

  /// g((-u, t-u]): four-corner increment over the rectangle (0, t], t in R^2_+.
  double rect_increment(Point u, Point t) const;

  /// rho(t) = |t1|^q1 + |t2|^q2 and the generalized invariant factor L with
  /// g0 = rho^chi L.
  double rho(Point t) const;
  double rho0(Point t, const ExponentProfile& p) const;
  double L(Point t) const;

  bool has_profile() const;
  double q1() const { return q1_; }
  double q2() const { return q2_; }
  double chi() const { return chi_; }
  double gamma0() const { return q1_ / q2_; }
  /// Scaling profile for a given stability index (NonPositiveOrder /
  /// ZeroChi propagate from derive_exponents).
  ExponentProfile profile(double alpha) const;

  /// g[0] of a quadrant-indicator kernel.
  double quadrant_jump() const;

  /// Spatial decay radius used for quadrature tail truncation.
  double tail_radius(double alpha, double eps_tail) const;

 private:
  KernelSpec spec_;
  double q1_ = 2, q2_ = 2, chi_ = 0;
  double matern_amp_ = 0;  // 2^{1+chi} / (c^{2chi} Gamma(-chi))
  double heat_amp_ = 0;    // 1 / (2^{1/2} (2pi)^{3/2} c2 Gamma(chi + 3/2))
};

enum class LimitKernelKind { H0, H1, H2, H1Tilde, H2Tilde };

/// The deterministic kernels driving the limit fields:
///   h_i(t; u)  = g0(t e_i - u) - g0(-u)
///   ~h_1(t; u) = d2 g0(t e_1 - u) - d2 g0(-u)   (~h_2 symmetric)
///   h_0(t; u)  = g0((-u, t-u])
/// For H0 both coordinates of t are used; other kinds use t.x as the scalar
/// time.
double limit_kernel(LimitKernelKind kind, const Kernel& k, Point t, Point u);

/// Numeric 2-D Fourier transform |FT g|^2 of the fractional-heat kernel at
/// frequency x against the closed-form spectral density. Returns
/// (numeric, analytic). QuadratureFailure if the quadrature does not settle.
std::pair<double, double> heat_kernel_spectral_check(double chi, double c1, double c2, Point x);

}  // namespace frf
