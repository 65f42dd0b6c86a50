#include "doctest.h"

#include <algorithm>

#include "paradromic/paradrome.hpp"
#include "paradromic/verify.hpp"

using namespace paradromic;

namespace {

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* find(const std::vector<CheckResult>& results, const std::string& name) {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("default grid passes every check") {
  const auto results = run_verification(VerifyOptions{});
  CHECK(results.size() >= 8);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("small grid passes") {
  VerifyOptions opts;
  opts.max_m = 3;
  opts.max_n = 3;
  opts.primes = {3};
  CHECK(all_passed(run_verification(opts)));
}

TEST_CASE("corrupted S_n is caught") {
  VerifyOptions opts;
  opts.transfer_s = [](std::size_t n) {
    IntMatrix s = transfer_S(n);
    s(0, 0) += 1;
    return s;
  };
  const auto results = run_verification(opts);
  CHECK_FALSE(all_passed(results));
  const CheckResult* lemma = find(results, "charpoly-closed-form");
  REQUIRE(lemma != nullptr);
  CHECK_FALSE(lemma->passed);
  CHECK_FALSE(lemma->detail.empty());
}

TEST_CASE("non-prime moduli are rejected") {
  VerifyOptions opts;
  opts.primes = {4};
  CHECK_THROWS_AS(run_verification(opts), std::invalid_argument);
}
