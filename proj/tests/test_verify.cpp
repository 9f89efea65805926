#include "doctest.h"
#include "monact/verify.hpp"

using namespace monact;

TEST_CASE("example checks report the expected numbers") {
  auto nf = check_f_not_faithful();
  CHECK(nf.passed);
  CHECK(nf.detail == "hom counts 2 -> 1");
  auto nle = check_f_not_left_exact();
  CHECK(nle.passed);
  CHECK(nle.detail == "sizes 6 vs 4");
  CHECK(check_indecomposability_examples().passed);
  CHECK(check_non_projective_preimage().passed);
}

TEST_CASE("the property battery passes at small bounds") {
  VerifyBounds b;
  b.sweep = {3, 3, 2, 2};
  b.perfect_monoid_size = 3;
  b.perfect_act_size = 3;
  b.steady_monoid_size = 3;
  b.steady_act_size = 3;
  auto results = verify_paper(b);
  CHECK(results.size() == 16);
  for (auto const& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
