#pragma once
// The theta correspondence for O(p,q) x Sp(2n,R): infinitesimal-character
// duality, the two explicit induction rules, first occurrence for p+q = 4
// and the lift dispatcher built on the embedded tables.

#include "thetalift/exact.hpp"
#include "thetalift/ktypes.hpp"
#include "thetalift/langlands.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tl {

// Precondition failures of the lift operators.
class ThetaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// |x| = m: x is on the O side (size (p+q)/2) and the Sp side of size n is
// returned; |x| = n: the other way.  m = n is the identity.
InfChar dual_infchar(const InfChar& x, int m, int n);

// The (mu,nu,eps,kappa) part of a parameter record.
struct ModData {
  std::vector<long long> mu;
  std::vector<Scalar> nu;
  std::vector<int> eps;
  std::vector<Scalar> kappa;
  friend bool operator==(const ModData&, const ModData&) = default;
};

// Picks one of the clashing pairs (i<j); default is the first.
using PairChooser = std::function<std::size_t(const std::vector<std::pair<int, int>>&)>;

std::vector<std::pair<int, int>> clashing_pairs(const std::vector<int>& eps, const std::vector<Scalar>& kappa);
// Removes clashing pairs until none is left, adding (0, 2|kappa|) to
// (mu,nu) for each; the pairs are not reordered otherwise.
ModData apply_modification(ModData d, const PairChooser& choose = {});

bool cond_lambda(const std::vector<long long>& lambda_d, const PositiveSystem& psi, int p_minus_q);

// theta_{n+k}(theta_{p,q}(pi')) from pi' on Sp(2n,R).
SpParams induct_n(const SpParams& pi_prime, int p, int q, int k);
// theta_{p+k,q+k}(theta_n(pi)) from pi on O(p,q).
OParams induct_pq(const OParams& pi, int n, int k);

struct ThetaResult {
  bool zero = true;
  SpParams params;
  std::string provenance;
  // Lowest K-types recorded in the table the lift came from, when any.
  std::optional<std::vector<UKType>> table_lkt;
};

// p+q = 4 only.
OParams trivial_params(int p, int q);
OParams det_params(int p, int q);
int first_occurrence(const OParams& pi);
ThetaResult theta_n(const OParams& pi, int n);

// theta_3(det_{1,1}); p+q = 2 is outside the tables, so this one value is
// kept as a fact.
SpParams theta3_det11();

enum class InducingChar { plain, sign };
int multiplicity_O31(int l, int eps, int eta, InducingChar chi);

}  // namespace tl
