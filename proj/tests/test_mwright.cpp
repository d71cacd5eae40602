#include <cmath>

#include <doctest.h>

#include "fracdiff/evaluation.hpp"
#include "fracdiff/gamma.hpp"
#include "fracdiff/mwright.hpp"

using namespace fracdiff;

// Frozen reference values from a 50+ digit series evaluation.
namespace oracle {
constexpr double m_half_1 = 0.439391289467722397;    // (1/sqrt(pi)) e^{-1/4}
constexpr double m_quarter_1 = 0.383335416570683536;
constexpr double m_third_1 = 0.396239479706502591;   // Airy identity
constexpr double m_081_2 = 0.104165816301451159;
constexpr double m_09_05 = 0.280041742087365848;
constexpr double m_025_4 = 0.0219899633404783586;
constexpr double m_04_3 = 0.0645572403816337857;
constexpr double m_06_6 = 6.6063158197233699e-8;
constexpr double m_075_8 = 1.1612079380755202e-187;
constexpr double ml_half_m1 = 0.427583576155807004;  // e erfc(1)
constexpr double ml_04_m2 = 0.273535299960679539;
constexpr double ml_06_m4 = 0.119534161957067876;
}  // namespace oracle

TEST_CASE("order validation") {
  CHECK_THROWS_AS(MWrightOrder(0.0), domain_error);
  CHECK_THROWS_AS(MWrightOrder(1.0), domain_error);
  CHECK_THROWS_AS(MWrightOrder(-0.2), domain_error);
}

TEST_CASE("series values at the origin") {
  // M_nu(0) = 1/Gamma(1-nu).
  CHECK(mwright(MWrightOrder(0.5), 0.0).value ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(mwright(MWrightOrder(0.25), 0.0).value ==
        doctest::Approx(rgamma(0.75)).epsilon(1e-14));
}

TEST_CASE("series against frozen oracles") {
  CHECK(mwright_series(MWrightOrder(0.5), 1.0).value ==
        doctest::Approx(oracle::m_half_1).epsilon(1e-13));
  CHECK(mwright_series(MWrightOrder(0.25), 1.0).value ==
        doctest::Approx(oracle::m_quarter_1).epsilon(1e-13));
  CHECK(mwright_series(MWrightOrder(1.0 / 3.0), 1.0).value ==
        doctest::Approx(oracle::m_third_1).epsilon(1e-13));
  CHECK(mwright_series(MWrightOrder(0.81), 2.0).value ==
        doctest::Approx(oracle::m_081_2).epsilon(1e-12));
  CHECK(mwright_series(MWrightOrder(0.9), 0.5).value ==
        doctest::Approx(oracle::m_09_05).epsilon(1e-12));
}

TEST_CASE("dispatcher covers the cancellation region") {
  CHECK(mwright(MWrightOrder(0.25), 4.0).value ==
        doctest::Approx(oracle::m_025_4).epsilon(1e-9));
  CHECK(mwright(MWrightOrder(0.4), 3.0).value ==
        doctest::Approx(oracle::m_04_3).epsilon(1e-9));
  CHECK(mwright(MWrightOrder(0.6), 6.0).value ==
        doctest::Approx(oracle::m_06_6).epsilon(1e-7));
}

TEST_CASE("asymptotic form") {
  // At nu = 1/2 the asymptotic form is exact: (1/sqrt(pi)) e^{-r^2/4}.
  Evaluation e = mwright_asymptotic(MWrightOrder(0.5), 4.0);
  CHECK(e.value ==
        doctest::Approx(std::exp(-4.0) / std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(e.method == Method::asymptotic);

  // Deep tail at nu = 3/4 within 2 percent of the frozen series value.
  e = mwright(MWrightOrder(0.75), 8.0);
  CHECK(e.method == Method::asymptotic);
  CHECK(std::abs(e.value / oracle::m_075_8 - 1.0) < 0.02);

  CHECK_THROWS_AS(mwright_asymptotic(MWrightOrder(0.5), 0.5), domain_error);
}

TEST_CASE("nonnegativity across a representative grid") {
  for (double nu : {0.2, 0.4, 0.5, 0.6, 0.75, 0.9}) {
    for (double r : {0.0, 0.3, 1.0, 2.5, 5.0, 8.0, 12.0}) {
      CHECK(mwright(MWrightOrder(nu), r).value >= -1e-12);
    }
  }
}

TEST_CASE("scaled form") {
  // t^{-nu} M_nu(x t^{-nu}) at (nu, x, t) = (0.5, 0, 4): 0.5/sqrt(pi).
  CHECK(mwright_scaled(MWrightOrder(0.5), 0.0, 4.0).value ==
        doctest::Approx(0.5 / std::sqrt(M_PI)).epsilon(1e-13));
  // (0.5, 2, 4): 0.5 * M_{1/2}(1).
  CHECK(mwright_scaled(MWrightOrder(0.5), 2.0, 4.0).value ==
        doctest::Approx(0.5 * oracle::m_half_1).epsilon(1e-13));
  CHECK_THROWS_AS(mwright_scaled(MWrightOrder(0.5), 1.0, 0.0),
                  domain_error);
}

TEST_CASE("moments") {
  CHECK(mwright_moment(MWrightOrder(0.5), 0.0) == doctest::Approx(1.0));
  CHECK(mwright_moment(MWrightOrder(0.5), 1.0) ==
        doctest::Approx(rgamma(1.5)).epsilon(1e-14));
  CHECK(mwright_moment(MWrightOrder(0.5), 2.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Mittag-Leffler on the negative axis") {
  CHECK(mittag_leffler(1.0, -1.0).value ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(mittag_leffler(0.5, -1.0).value ==
        doctest::Approx(oracle::ml_half_m1).epsilon(1e-11));
  CHECK(mittag_leffler(0.4, -2.0).value ==
        doctest::Approx(oracle::ml_04_m2).epsilon(1e-10));
  CHECK(mittag_leffler(0.6, -4.0).value ==
        doctest::Approx(oracle::ml_06_m4).epsilon(1e-10));
  CHECK(mittag_leffler(0.7, 0.0).value == doctest::Approx(1.0));
}
