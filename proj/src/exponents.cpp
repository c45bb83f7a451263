#include "frf/exponents.hpp"

#include <cmath>
#include <sstream>

namespace frf {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::R11: return "R11";
    case Region::R12: return "R12";
    case Region::R21: return "R21";
    case Region::R22: return "R22";
  }
  return "?";
}

const char* to_string(LimitKind k) {
  switch (k) {
    case LimitKind::Upsilon1: return "Upsilon1";
    case LimitKind::Upsilon2: return "Upsilon2";
    case LimitKind::UpsilonTilde1: return "UpsilonTilde1";
    case LimitKind::UpsilonTilde2: return "UpsilonTilde2";
  }
  return "?";
}

ExponentProfile derive_exponents(double q1, double q2, double chi, double alpha) {
  if (!(q1 > 0.0) || !(q2 > 0.0))
    fail("NonPositiveOrder", "homogeneity orders must satisfy q1 > 0, q2 > 0");
  if (chi == 0.0) fail("ZeroChi", "chi must be nonzero");
  if (!(alpha > 0.0) || alpha > 2.0) fail("ParameterError", "alpha must lie in (0,2]");
  ExponentProfile p;
  p.q1 = q1;
  p.q2 = q2;
  p.chi = chi;
  p.alpha = alpha;
  p.Q = 1.0 / q1 + 1.0 / q2;
  p.p1 = q1 * (p.Q - chi);
  p.p2 = q2 * (p.Q - chi);
  if (!(p.p1 > 0.0) || !(p.p2 > 0.0))
    fail("NonPositiveOrder", "derived p_i = q_i (Q - chi) must be positive");
  p.P = 1.0 / p.p1 + 1.0 / p.p2;
  p.gamma0 = p.p1 / p.p2;
  return p;
}

std::vector<std::string> validate_assumptions(const ExponentProfile& p, ScalingMode mode) {
  std::vector<std::string> out;
  auto push = [&out](const std::string& s) { out.push_back(s); };
  if (mode == ScalingMode::Rectangent) {
    double lo = p.alpha / (1.0 + p.alpha);
    if (!(p.P > lo)) push("P > alpha/(1+alpha)");
    if (!(p.P < p.alpha)) push("P < alpha");
    if (std::fabs(p.P - 1.0) <= kBoundaryTol) push("P != 1");
    double a = 1.0 / p.alpha, b = (1.0 + p.alpha) / p.alpha;
    if (std::fabs(p.Pcc(a, b) - 1.0) <= kBoundaryTol) push("P_{1/a,(1+a)/a} != 1");
    if (std::fabs(p.Pcc(b, a) - 1.0) <= kBoundaryTol) push("P_{(1+a)/a,1/a} != 1");
  } else {
    if (!(p.chi < 0.0)) push("chi < 0");
    double lo = -p.Q / p.alpha;
    double hi = 1.0 / std::max(p.q1, p.q2) - p.Q / p.alpha;
    if (!(p.chi > lo)) push("chi > -Q/alpha");
    if (!(p.chi < hi)) push("chi < 1/max(q1,q2) - Q/alpha");
  }
  return out;
}

HurstIndices hurst_indices(const ExponentProfile& p) {
  double r = (1.0 + p.alpha) / p.alpha;
  HurstIndices h;
  h.H_a1 = r * (1.0 + p.p1 / p.p2) - p.p1;
  h.H_a2 = r * (1.0 + p.p2 / p.p1) - p.p2;
  h.Ht_a1 = r + p.p1 / (p.alpha * p.p2) - p.p1;
  h.Ht_a2 = r + p.p2 / (p.alpha * p.p1) - p.p2;
  return h;
}

std::pair<double, double> hurst_pair_for(LimitKind kind, const HurstIndices& h) {
  switch (kind) {
    case LimitKind::Upsilon1: return {h.H_a1, 0.0};
    case LimitKind::Upsilon2: return {0.0, h.H_a2};
    case LimitKind::UpsilonTilde1: return {h.Ht_a1, 1.0};
    case LimitKind::UpsilonTilde2: return {1.0, h.Ht_a2};
  }
  return {0.0, 0.0};
}

RegionLabel classify_region(const ExponentProfile& p) {
  double a = 1.0 / p.alpha, b = (1.0 + p.alpha) / p.alpha;
  double s1 = p.Pcc(a, b) - 1.0;  // decides V-
  double s2 = p.Pcc(b, a) - 1.0;  // decides V+
  if (std::fabs(s1) <= kBoundaryTol || std::fabs(s2) <= kBoundaryTol) {
    std::ostringstream os;
    os << "P_{1/a,(1+a)/a} = " << p.Pcc(a, b) << ", P_{(1+a)/a,1/a} = " << p.Pcc(b, a)
       << " lies on a classification boundary";
    fail("BoundaryParameters", os.str());
  }
  RegionLabel lab;
  lab.v_minus = s1 > 0.0 ? LimitKind::UpsilonTilde2 : LimitKind::Upsilon1;
  lab.v_plus = s2 > 0.0 ? LimitKind::UpsilonTilde1 : LimitKind::Upsilon2;
  if (s1 > 0.0 && s2 > 0.0) lab.region = Region::R11;
  else if (s1 < 0.0 && s2 > 0.0) lab.region = Region::R12;
  else if (s1 > 0.0 && s2 < 0.0) lab.region = Region::R21;
  else lab.region = Region::R22;
  HurstIndices h = hurst_indices(p);
  lab.hurst_plus = hurst_pair_for(lab.v_plus, h);
  lab.hurst_minus = hurst_pair_for(lab.v_minus, h);
  return lab;
}

double rectangent_normalization(const ExponentProfile& p, double gamma) {
  if (!(gamma > 0.0)) fail("ParameterError", "gamma must be positive");
  double a = 1.0 / p.alpha, b = (1.0 + p.alpha) / p.alpha;
  double s1 = p.Pcc(a, b) - 1.0;
  double s2 = p.Pcc(b, a) - 1.0;
  if (std::fabs(s1) <= kBoundaryTol || std::fabs(s2) <= kBoundaryTol)
    fail("BoundaryParameters", "normalization undefined on classification boundaries");
  HurstIndices h = hurst_indices(p);
  double r = (1.0 + p.alpha) / p.alpha;
  if (gamma == p.gamma0) return (1.0 + p.gamma0) * r - p.p1;
  if (gamma < p.gamma0) {
    return s1 < 0.0 ? h.H_a1 : 1.0 + gamma * h.Ht_a2;
  }
  // gamma > gamma0: axis-exchange extension, continuous at gamma0.
  return s2 < 0.0 ? gamma * h.H_a2 : gamma + h.Ht_a1;
}

double tangent_normalization(const ExponentProfile& p, double gamma) {
  if (!(gamma > 0.0)) fail("ParameterError", "gamma must be positive");
  if (p.chi >= 0.0) fail("TangentInapplicable", "tangent limits require chi < 0");
  double h0 = (1.0 + p.gamma0) / p.alpha + p.chi * p.q1;
  return std::min(1.0, gamma / p.gamma0) * h0;
}

}  // namespace frf
