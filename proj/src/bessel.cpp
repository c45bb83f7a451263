#include "frf/bessel.hpp"

#include <cmath>

#include "frf/common.hpp"

namespace frf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// Coefficients c_k of 1/Gamma(z) = sum_k c_k z^k (Abramowitz & Stegun 6.1.34),
// so that 1/Gamma(1+x) = c1 + c2 x + c3 x^2 + ...
constexpr double kInvGammaC[16] = {
    1.0000000000000000, 0.5772156649015329, -0.6558780715202538, -0.0420026350340952,
    0.1665386113822915, -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,
    -0.0011651675918591, -0.0002152416741149, 0.0001280502823882, -0.0000201348547807,
    -0.0000012504934821, 0.0000011330272320, -0.0000002056338417, 0.0000000061160950};

// gam1(mu) = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), the mu -> 0 limit being
// -EulerGamma. Even-coefficient series keeps full precision for small |mu|.
double gam1(double mu) {
  if (std::fabs(mu) < 0.25) {
    double mu2 = mu * mu;
    double s = 0.0, pw = 1.0;
    for (int k = 1; 2 * k < 16; ++k) {  // c2, c4, c6, ...
      s += kInvGammaC[2 * k - 1] * pw;
      pw *= mu2;
    }
    return -s;
  }
  return (1.0 / std::tgamma(1.0 - mu) - 1.0 / std::tgamma(1.0 + mu)) / (2.0 * mu);
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, 0 < x <= 2 (Temme's series).
void temme_k(double mu, double x, double& kmu, double& kmu1) {
  double gampl = 1.0 / std::tgamma(1.0 + mu);
  double gammi = 1.0 / std::tgamma(1.0 - mu);
  double g1 = gam1(mu);
  double g2 = 0.5 * (gammi + gampl);
  double pimu = kPi * mu;
  double fact = std::fabs(pimu) < 1e-12 ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(0.5 * x);
  double e = mu * d;
  double fact2 = std::fabs(e) < 1e-12 ? 1.0 : std::sinh(e) / e;
  double ff = fact * (g1 * std::cosh(e) + g2 * fact2 * d);
  double sum = ff;
  double ee = std::exp(e);
  double p = 0.5 * ee / gampl;
  double q = 0.5 / (ee * gammi);
  double c = 1.0;
  double d2 = 0.25 * x * x;
  double sum1 = p;
  int i = 1;
  for (; i <= kMaxIter; ++i) {
    ff = (i * ff + p + q) / (i * i - mu * mu);
    c *= d2 / i;
    p /= (i - mu);
    q /= (i + mu);
    double del = c * ff;
    sum += del;
    double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  if (i > kMaxIter) fail("QuadratureFailure", "bessel_k series did not converge");
  kmu = sum;
  kmu1 = sum1 * (2.0 / x);
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x > 2 via the Thompson-Barnett
// Steed continued fraction.
void cf2_k(double mu, double x, double& kmu, double& kmu1) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  double a1 = 0.25 - mu * mu;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= kMaxIter; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) break;
  }
  if (i > kMaxIter) fail("QuadratureFailure", "bessel_k continued fraction did not converge");
  h = a1 * h;
  kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) fail("DomainError", "bessel_k requires x > 0");
  nu = std::fabs(nu);  // K_{-nu} = K_nu
  int n = static_cast<int>(std::lround(nu));
  double mu = nu - n;  // |mu| <= 1/2
  double kmu, kmu1;
  if (x <= 2.0)
    temme_k(mu, x, kmu, kmu1);
  else
    cf2_k(mu, x, kmu, kmu1);
  if (n == 0) return kmu;
  // Upward recurrence K_{v+1} = K_{v-1} + (2v/x) K_v, stable for K.
  for (int i = 1; i < n; ++i) {
    double knew = kmu + (2.0 * (mu + i) / x) * kmu1;
    kmu = kmu1;
    kmu1 = knew;
  }
  return kmu1;
}

}  // namespace frf
