#pragma once
// Brute-force lists of Sp(2n,R) parameters with a given infinitesimal
// character, the Sp(6,R) list check, and a small report type shared with
// the verification suites.

#include "thetalift/exact.hpp"
#include "thetalift/ktypes.hpp"
#include "thetalift/langlands.hpp"

#include <string>
#include <vector>

namespace tl {

constexpr int kMaxEnumN = 4;

struct CaseResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  // Free-form counters, e.g. rows dropped at a given beta.
  std::vector<std::pair<std::string, long long>> counts;

  void add(std::string name, bool ok, std::string detail = {}) {
    cases.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const VerificationReport& other);
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// Canonical, valid, pairwise distinct; sorted by rendered text.
std::vector<SpParams> enumerate_sp_reps(int n, const InfChar& target);

// Parameters and lowest K-types of the Sp(6,R) list at beta, with the rows
// whose instantiation fails validation dropped.
struct Sp6Row {
  int line = 0;
  SpParams params;
  std::vector<UKType> lkt;
};
struct Sp6Rows {
  std::vector<Sp6Row> rows;
  int dropped = 0;
};
Sp6Rows sp6_rows_at(const Scalar& beta);

// Diff of the Sp(6,R) list at beta against enumeration plus lowest K-types.
VerificationReport regenerate_appendix_c(const Scalar& beta);

std::vector<SpParams> verify_unique_by_invariants(int n, const InfChar& target, const std::vector<UKType>& lkt);

}  // namespace tl
