#pragma once
// Verification suites over the embedded tables: Sp(6) list regeneration,
// the lift tables for n = 1..4, and property checks.

#include "thetalift/enumerate.hpp"
#include "thetalift/pattern.hpp"

#include <string>
#include <vector>

namespace tl {

// Scalars tried for every table variable.
std::vector<Scalar> sample_pool();
// Beta values for the Sp(6) list.
std::vector<Scalar> sample_betas();

// Valid left-hand sides of a lift table obtained by substituting the pool
// into each row's variables.
struct RowSample {
  int line = 0;
  Bindings bindings;
  OParams params;  // canonical
};
std::vector<RowSample> sample_rows(const std::string& table_name);
// Every sampled p+q = 4 parameter of the lift tables in both orderings of
// (p,q), plus trivial and det.
std::vector<OParams> lift_sources();

// O(p,q) parameters (p+q = 4) whose dispatcher lift is sp: table rows read
// backwards, then a search over lift_sources().
std::vector<OParams> inverse_lookup(const SpParams& sp, int p, int q);

VerificationReport verify_appendix_c();
VerificationReport verify_theta12();
VerificationReport verify_theta3();
VerificationReport verify_theta4();
VerificationReport verify_props();

// Source parameters for the lowest K-type propagation check.
std::vector<SpParams> propagation_sources();
// induct_n(k=1) against "add (p-q)/2 to every lowest K-type", over every
// even (p,q) with p+q <= 8 meeting the hypotheses.
VerificationReport verify_propagation();

// Pieces of the props suite.
VerificationReport verify_duality(int max_n = 6);  // also persistence, path independence
VerificationReport verify_first_occurrence();
VerificationReport verify_phi();
VerificationReport verify_norm_oracle(int trials = 200);
VerificationReport verify_canonical_idempotence();
VerificationReport verify_confluence(int trials = 500);
VerificationReport verify_involutions();

// "appendixC", "theta12", "theta3", "theta4", "props" or "all".
VerificationReport run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace tl
