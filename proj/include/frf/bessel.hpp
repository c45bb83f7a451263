#pragma once

namespace frf {

/// Modified Bessel function of the second kind K_nu(x), x > 0.
/// Temme's series for x <= 2, Thompson-Barnett continued fraction (CF2) for
/// x > 2, upward recurrence in the order. Relative error below 1e-11 for
/// nu in [-5,5], x in [1e-8, 50]. K_{-nu} = K_nu.
double bessel_k(double nu, double x);

}  // namespace frf
