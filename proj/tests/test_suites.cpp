// Each verification suite as a test; failing cases are printed.
#include "thetalift/verify.hpp"

#include "thetalift/theta.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tl;

namespace {

void expect_clean(const VerificationReport& rep) {
  for (const auto& c : rep.cases)
    if (!c.ok) FAIL_CHECK(rep.suite << " / " << c.name << ": " << c.detail);
  CHECK_FALSE(rep.cases.empty());
}

}  // namespace

TEST_CASE("theta_1 and theta_2 tables") { expect_clean(verify_theta12()); }
TEST_CASE("theta_3 table") { expect_clean(verify_theta3()); }
TEST_CASE("theta_4 of determinants") { expect_clean(verify_theta4()); }
TEST_CASE("duality, persistence, path independence") { expect_clean(verify_duality()); }
TEST_CASE("first occurrence and conservation") { expect_clean(verify_first_occurrence()); }
TEST_CASE("lowest K-type propagation") { expect_clean(verify_propagation()); }
TEST_CASE("phi round trips") { expect_clean(verify_phi()); }
TEST_CASE("norm against root oracle") { expect_clean(verify_norm_oracle()); }
TEST_CASE("canonical form idempotence") { expect_clean(verify_canonical_idempotence()); }
TEST_CASE("modification confluence") { expect_clean(verify_confluence()); }
TEST_CASE("involutions") { expect_clean(verify_involutions()); }

TEST_CASE("inverse lookup recovers table sources") {
  for (const auto& s : sample_rows("theta4_det.tbl")) {
    auto r = theta_n(s.params, 4);
    REQUIRE_FALSE(r.zero);
    auto pre = inverse_lookup(r.params, s.params.p, s.params.q);
    CHECK(std::count(pre.begin(), pre.end(), s.params) == 1);
  }
}
