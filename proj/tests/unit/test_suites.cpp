#include <doctest.h>

#include "ayrep/error.hpp"
#include "ayrep/suites.hpp"

using namespace ayrep;

TEST_SUITE("suites") {
  TEST_CASE("every suite passes at small n") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& name : suite_names()) {
        SweepOptions options;
        options.n = n;
        const SuiteResult r = run_suite(name, options);
        INFO(name << " at n = " << n << ": " << (r.failures.empty() ? "" : r.failures.front()));
        CHECK(r.ok());
        // Below n = 3 some sweeps have nothing to check (no flats at n = 1).
        if (n == 3) CHECK(r.checks > 0);
      }
  }

  TEST_CASE("unknown suites and bad sizes are rejected") {
    CHECK_THROWS_AS(run_suite("nope", SweepOptions{}), DomainError);
    SweepOptions zero;
    zero.n = 0;
    CHECK_THROWS_AS(run_suite("coxeter", zero), DomainError);
  }
}
