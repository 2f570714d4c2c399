#pragma once
// Langlands parameters for Sp(2n,R) and O(p,q) (p+q even): validity,
// canonical forms, infinitesimal characters and the two involutions.

#include "thetalift/exact.hpp"
#include "thetalift/roots.hpp"

#include <string>
#include <vector>

namespace tl {

struct SpParams {
  std::vector<long long> lambda_d;
  PositiveSystem psi{GroupKind::sp(0), {}};
  std::vector<long long> mu;
  std::vector<Scalar> nu;
  std::vector<int> eps;
  std::vector<Scalar> kappa;

  int v() const { return static_cast<int>(lambda_d.size()); }
  int s() const { return static_cast<int>(mu.size()); }
  int t() const { return static_cast<int>(eps.size()); }
  int n() const { return v() + 2 * s() + t(); }
  friend bool operator==(const SpParams&, const SpParams&) = default;
};

struct OParams {
  int p = 0, q = 0;
  int zeta = 1;
  std::vector<long long> lambda_l, lambda_r;
  int xi = 1;
  PositiveSystem psi{GroupKind::o_even(0, 0), {}};
  std::vector<long long> mu;
  std::vector<Scalar> nu;
  std::vector<int> eps;
  std::vector<Scalar> kappa;

  int a() const { return static_cast<int>(lambda_l.size()); }
  int d() const { return static_cast<int>(lambda_r.size()); }
  int s() const { return static_cast<int>(mu.size()); }
  int t() const { return static_cast<int>(eps.size()); }
  friend bool operator==(const OParams&, const OParams&) = default;
};

// Empty when valid.
std::vector<std::string> validate(const SpParams& x);
std::vector<std::string> validate(const OParams& x);

SpParams canonicalize(SpParams x);
OParams canonicalize(OParams x);

InfChar infchar_of(const SpParams& x);
InfChar infchar_of(const OParams& x);

SpParams contragredient_sp(const SpParams& x);
OParams swap_pq(const OParams& x);

// Counts of positive / negative / zero entries of an Sp lambda_d.
struct LambdaCounts {
  int k = 0, l = 0, z = 0;
};
LambdaCounts lambda_counts(const std::vector<long long>& lambda_d);

// The (F-2) clashes used by the modification rule and the validator.
bool kappa_clash(const Scalar& x, const Scalar& y);

}  // namespace tl
