#include <cmath>

#include "doctest.h"
#include "frf/bessel.hpp"
#include "frf/common.hpp"

using frf::bessel_k;

namespace {

struct Ref {
  double nu, x, k;
};

// Reference values computed independently with 30-digit arithmetic
// (mpmath besselk), truncated to 17 significant digits.
const Ref kRefs[] = {
    {0.0, 1e-06, 13.931442073626419},
    {0.0, 0.02, 4.0284573303587163},
    {0.0, 0.7, 0.66051985991510160},
    {0.0, 2.0, 0.11389387274953344},
    {0.0, 6.0, 0.0012439943280131231},
    {0.0, 30.0, 2.1324774964630564e-14},
    {0.3, 1e-06, 116.16463060626912},
    {0.3, 0.02, 5.4122063077441663},
    {0.3, 0.7, 0.68956248975697506},
    {0.3, 2.0, 0.11603697434811926},
    {0.3, 6.0, 0.0012526877833417556},
    {0.3, 30.0, 2.1356270283260949e-14},
    {0.5, 1e-06, 1253.3128840019896},
    {0.5, 0.02, 8.6867845657751813},
    {0.5, 0.7, 0.74388325232069379},
    {0.5, 2.0, 0.11993777196806145},
    {0.5, 6.0, 0.0012682866523815886},
    {0.5, 30.0, 2.1412375659560114e-14},
    {-0.5, 0.7, 0.74388325232069379},
    {-0.5, 2.0, 0.11993777196806145},
    {1.0, 1e-06, 999999.99999278432},
    {1.0, 0.02, 49.954717815764417},
    {1.0, 0.7, 1.0502835353129180},
    {1.0, 2.0, 0.13986588181652243},
    {1.0, 6.0, 0.0013439197177355090},
    {1.0, 30.0, 2.1677320018915494e-14},
    {1.7, 1e-06, 23394417852.127335},
    {1.7, 0.02, 1141.0360969721778},
    {1.7, 0.7, 2.3539780490881690},
    {1.7, 2.0, 0.20424626426274670},
    {1.7, 6.0, 0.0015541624314296072},
    {1.7, 30.0, 2.2359454624763857e-14},
    {2.0, 1e-06, 1999999999999.5002},
    {2.0, 0.02, 4999.5002389068003},
    {2.0, 0.7, 3.6613299608091533},
    {2.0, 2.0, 0.25375975456605586},
    {2.0, 6.0, 0.0016919675672582928},
    {2.0, 30.0, 2.2769929632558263e-14},
    {-2.3, 1e-06, 181260270521690.90},
    {-2.3, 0.02, 23222.032603458205},
    {-2.3, 0.7, 5.9759617612105811},
    {-2.3, 2.0, 0.32510864704247955},
    {-2.3, 6.0, 0.0018668524099259083},
    {-2.3, 30.0, 2.3256344452638287e-14},
    {3.0, 1e-06, 7.9999999999990011e+18},
    {3.0, 0.02, 999950.00249917581},
    {3.0, 0.7, 21.972169025650939},
    {3.0, 2.0, 0.64738539094863415},
    {3.0, 6.0, 0.0024718980959077042},
    {3.0, 30.0, 2.4713310636589929e-14},
    {4.5, 1e-06, 1.3159798441811815e+29},
    {4.5, 0.02, 5815698034.0584786},
    {4.5, 0.7, 632.71933434926010},
    {4.5, 2.0, 4.4302014520702697},
    {4.5, 6.0, 0.0056867389945905952},
    {4.5, 30.0, 2.9706499023838242e-14},
    {5.0, 1e-06, 3.8399999999997609e+32},
    {5.0, 0.02, 119997000049.99915},
    {5.0, 0.7, 2216.1916812945825},
    {5.0, 2.0, 9.4310491005964674},
    {5.0, 6.0, 0.0080237189801290334},
    {5.0, 30.0, 3.2103335105890262e-14},
    {-5.0, 2.0, 9.4310491005964674},
    {0.25, 1e-06, 68.107227889734947},
    {0.25, 0.02, 4.9582734005232989},
    {0.25, 0.7, 0.68057536440105945},
    {0.25, 2.0, 0.11537827684085676},
    {0.25, 6.0, 0.0012500252967367434},
    {0.25, 30.0, 2.1346641833090355e-14},
    {0.9999, 1e-06, 998607.83397394284},
    {0.9999, 0.02, 49.934579993681595},
    {0.9999, 0.7, 1.0501891837256678},
    {0.9999, 2.0, 0.13986018751350650},
    {0.9999, 6.0, 0.0013438989856865532},
    {0.9999, 30.0, 2.1677248940001726e-14},
    {2.5, 1e-06, 3759942411945874.5},
    {2.5, 0.02, 66462.588712745909},
    {2.5, 0.7, 8.4863415928013850},
    {2.5, 2.0, 0.38979775889619970},
    {2.5, 6.0, 0.0020081205329375153},
    {2.5, 30.0, 2.3624987811047992e-14},
    {0.3, 1e-08, 462.56360318906636},
    {-1.5, 1e-08, 1253314137315.5001},
    {-1.5, 1e-06, 1253314137.3148737},
    {0.3, 0.0001, 29.075356949442203},
    {-1.5, 0.0001, 1253314.1310493472},
    {0.3, 0.1, 2.8050564750215722},
    {-1.5, 0.1, 39.447835226769858},
    {0.3, 0.5, 0.97647412438178792},
    {-1.5, 0.5, 3.2251428104997607},
    {0.3, 1.0, 0.43507602420880202},
    {-1.5, 1.0, 0.92213700889578912},
    {0.3, 1.9, 0.13137942527906504},
    {-1.5, 1.9, 0.20757164130023007},
    {-1.5, 2.0, 0.17990665795209217},
    {0.3, 2.1, 0.10260207043456641},
    {-1.5, 2.1, 0.15634150137645528},
    {0.3, 3.7, 0.015801315880070932},
    {-1.5, 3.7, 0.020462826751294708},
    {0.3, 5.0, 0.0037216693288734255},
    {-1.5, 5.0, 0.0045319360495714591},
    {0.3, 10.0, 1.7856607016823022e-5},
    {-1.5, 10.0, 1.9792825903075698e-5},
    {0.3, 25.0, 3.4702827599368086e-12},
    {-1.5, 25.0, 3.6204389279143230e-12},
    {0.3, 50.0, 3.4132081995368530e-23},
    {-1.5, 50.0, 3.4869924973662161e-23},
};

}  // namespace

TEST_SUITE("bessel") {

TEST_CASE("matches high-precision reference to 1e-11 relative") {
  for (const auto& r : kRefs) {
    double got = bessel_k(r.nu, r.x);
    CHECK_MESSAGE(std::fabs(got / r.k - 1.0) < 1e-11,
                  "nu=", r.nu, " x=", r.x, " got=", got, " want=", r.k);
  }
}

TEST_CASE("half-integer closed form") {
  // K_{1/2}(x) = sqrt(pi/(2x)) exp(-x)
  double want = std::sqrt(3.14159265358979323846 / 2.0) * std::exp(-1.0);
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(want).epsilon(1e-13));
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685055).epsilon(1e-9));
}

TEST_CASE("symmetry in the order") {
  for (double nu : {0.1, 0.5, 1.3, 2.7, 4.9}) {
    for (double x : {0.05, 0.9, 2.5, 17.0}) {
      CHECK(bessel_k(nu, x) == doctest::Approx(bessel_k(-nu, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("small-argument asymptotics") {
  // K_chi(t) ~ Gamma(chi) 2^{chi-1} t^{-chi} as t -> 0, chi > 0.
  double chi = 0.3, t = 1e-6;
  double asym = std::tgamma(chi) * std::pow(2.0, chi - 1.0) * std::pow(t, -chi);
  CHECK(std::fabs(bessel_k(chi, t) / asym - 1.0) < 1e-3);
}

TEST_CASE("derivative recurrence vs central differences") {
  // K'_nu(x) = -K_{nu-1}(x) - (nu/x) K_nu(x)
  for (double nu : {0.3, 1.2, 2.5}) {
    for (double x : {0.5, 1.5, 3.0, 8.0}) {
      double h = 1e-6 * x;
      double fd = (bessel_k(nu, x + h) - bessel_k(nu, x - h)) / (2.0 * h);
      double an = -bessel_k(nu - 1.0, x) - (nu / x) * bessel_k(nu, x);
      CHECK(std::fabs(fd / an - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("domain error") {
  CHECK_THROWS_WITH_AS(bessel_k(0.5, 0.0), doctest::Contains("DomainError"), frf::Error);
  CHECK_THROWS_WITH_AS(bessel_k(0.5, -1.0), doctest::Contains("DomainError"), frf::Error);
}

}  // TEST_SUITE
