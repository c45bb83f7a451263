#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frf/common.hpp"

namespace frf {

/// Derived scaling data of an anisotropic moving-average kernel with local
/// form rho(t)^chi, rho(t) = |t1|^q1 + |t2|^q2.
struct ExponentProfile {
  double q1 = 0, q2 = 0;
  double chi = 0;
  double alpha = 2;
  double Q = 0;       // 1/q1 + 1/q2
  double p1 = 0, p2 = 0;
  double P = 0;       // 1/p1 + 1/p2
  double gamma0 = 0;  // p1/p2 = q1/q2

  double Pcc(double c1, double c2) const { return c1 / p1 + c2 / p2; }
};

enum class ScalingMode { Rectangent, Tangent };

enum class LimitKind { Upsilon1, Upsilon2, UpsilonTilde1, UpsilonTilde2 };
enum class Region { R11, R12, R21, R22 };

struct HurstIndices {
  double H_a1 = 0, H_a2 = 0;    // H_{alpha,1}, H_{alpha,2}
  double Ht_a1 = 0, Ht_a2 = 0;  // tilde variants
};

struct RegionLabel {
  Region region;
  LimitKind v_plus, v_minus;
  std::pair<double, double> hurst_plus;   // MSS index pair of V+
  std::pair<double, double> hurst_minus;  // MSS index pair of V-
};

const char* to_string(Region r);
const char* to_string(LimitKind k);

ExponentProfile derive_exponents(double q1, double q2, double chi, double alpha);

/// Empty result means the mode's hypotheses hold. Each violation names the
/// failed inequality; violations are data, not errors.
std::vector<std::string> validate_assumptions(const ExponentProfile& p, ScalingMode mode);

HurstIndices hurst_indices(const ExponentProfile& p);

/// Classifies by the sign pair (P_{1/a,(1+a)/a} - 1, P_{(1+a)/a,1/a} - 1).
/// Throws BoundaryParameters when either lies on 1 within 1e-12.
RegionLabel classify_region(const ExponentProfile& p);

/// Normalization exponent H(gamma) of the rectangular-increment limits.
double rectangent_normalization(const ExponentProfile& p, double gamma);

/// Normalization exponent of the ordinary-increment (tangent) limits:
/// (1 ^ gamma/gamma0) * H(gamma0), H(gamma0) = (1+gamma0)/alpha + chi*q1.
double tangent_normalization(const ExponentProfile& p, double gamma);

std::pair<double, double> hurst_pair_for(LimitKind kind, const HurstIndices& h);

}  // namespace frf
