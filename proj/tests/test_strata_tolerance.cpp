#include <doctest.h>

#include "fractal/biased_lift.hpp"

using namespace fractal;

// The strata total is documented as an upper bound; this is the stated
// tolerance against the exact census.
TEST_CASE("strata total within 15% of the exact census, even n <= 12, k <= 2") {
  for (int k = 0; k <= 2; ++k) {
    for (int n = 2; n <= 12; n += 2) {
      const auto exact = census_sk_exact(n, k);
      const auto upper = strata_total(census_sk_strata(n, k));
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(exact);
      CAPTURE(upper);
      CHECK(upper >= exact);
      CHECK(static_cast<double>(upper) <= 1.15 * static_cast<double>(exact));
    }
  }
}
