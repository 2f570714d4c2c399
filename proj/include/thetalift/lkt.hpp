#pragma once
// Lowest K-types from Langlands parameters.

#include "thetalift/exact.hpp"
#include "thetalift/ktypes.hpp"
#include "thetalift/langlands.hpp"

#include <vector>

namespace tl {

// One block of lambda_a: value alpha with u copies on the positive (left)
// side and r copies on the negative (right) side.
struct AlphaBlock {
  HalfInt alpha;
  int u = 0, r = 0;
  HalfInt beta, gamma;
  // Index j (1-based) with alpha = a_j, 0 when alpha is not a lambda_d entry.
  int lambda_block = 0;
  // {0}, {+1/2}, {-1/2} or both, as twice the value.
  std::vector<int> delta_twice;
};

struct LktIntermediate {
  bool orthogonal = false;
  std::vector<HalfInt> lambda_a;          // Sp: full vector
  std::vector<HalfInt> lambda_a_l, lambda_a_r;  // O: halves
  std::vector<AlphaBlock> blocks;
  int u = 0, r = 0;
  int w = 0;        // Sp zero block
  int x = 0, y = 0; // O zero blocks
  int k = 0, l = 0, z = 0, zp = 0;
  int h = 0;
  // Which placements of the h ones are allowed: Sp first = (1^h,0..),
  // second = (0..,(-1)^h); O first = ones on the left zeros.
  bool eta_first = false, eta_second = false;
};

LktIntermediate lkt_intermediate(const SpParams& x);
LktIntermediate lkt_intermediate(const OParams& x);

// lambda_a + rho(u∩p) - rho(u∩k) before delta_L; Sp: one vector, O: left
// then right.
std::vector<HalfInt> lkt_base(const LktIntermediate& m);

std::vector<UKType> lowest_ktypes_sp(const SpParams& x);
std::vector<OKType> lowest_ktypes_o(const OParams& x);

}  // namespace tl
