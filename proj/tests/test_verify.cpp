#include "doctest.h"

#include "jumpq/verify.hpp"

using namespace jumpq;

// The full-depth suite is exercised by the acceptance binary; here the
// checks run at reduced depth to keep the unit run quick.
TEST_CASE("verification checks pass at reduced bounds") {
  VerifyOptions opts;
  opts.max_n = 6;
  opts.exhaustive_n = 5;
  opts.frontal_m = 5;
  opts.witness_n = 6;
  opts.ternary_terms = 80;
  opts.agreement_n = 40;
  opts.growth_index = 60;

  const auto results = run_verification(opts, nullptr);
  REQUIRE(results.size() == 10);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
    CHECK_FALSE(r.detail.empty());
  }
}

TEST_CASE("characterization details report the computed set sizes") {
  VerifyOptions opts;
  opts.max_n = 5;
  const auto strict = check_strict_characterization(opts);
  CHECK(strict.pass);
  CHECK(strict.detail.find("1,1,2,6,23,102") != std::string::npos);

  const auto loose = check_loose_characterization(opts);
  CHECK(loose.pass);
  CHECK(loose.detail.find("1,1,2,6,23,103") != std::string::npos);
}
