#pragma once
// K-types for U(n) and O(p)xO(q), norms, degrees and the joint-harmonics
// correspondence.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tl {

struct UKType {
  std::vector<long long> w;  // weakly decreasing
  friend auto operator<=>(const UKType&, const UKType&) = default;
};

// One O(p)-type (a_1..a_[p/2]; sign), width fixed to [p/2].
struct OFactor {
  int p = 0;
  std::vector<long long> a;
  int sign = 1;

  int nonzero() const;
  // p = 2x: the sign carries no information and is set to +1.
  OFactor canonical() const;
  friend auto operator<=>(const OFactor&, const OFactor&) = default;
};

struct OKType {
  OFactor left, right;
  int p() const { return left.p; }
  int q() const { return right.p; }
  OKType canonical() const { return {left.canonical(), right.canonical()}; }
  friend auto operator<=>(const OKType&, const OKType&) = default;
};

OKType make_oktype(int p, int q, std::vector<long long> left, int eps, std::vector<long long> right, int eta);

std::string to_string(const UKType& t);
std::string to_string(const OFactor& f);
std::string to_string(const OKType& t);
UKType parse_uktype(std::string_view text);
// "(2,0;-1)x(0;-1)"; widths give [p/2],[q/2] so p,q are needed.
OKType parse_oktype(std::string_view text, int p, int q);
// Throws std::invalid_argument when not weakly decreasing / wrong width.
void check_uktype(const UKType& t);
void check_oktype(const OKType& t);

long long ktype_norm(const UKType& t);
long long ktype_norm(const OKType& t);

UKType u_from_o(const OFactor& sigma);
OFactor o_from_u(const UKType& lambda, int p);

long long degree_o(const OKType& sigma);
long long degree_u(const UKType& sigma_prime, long long p_minus_q);

// Smallest n with phi_n(sigma) != 0.
long long occurrence_bound(const OKType& sigma);
std::optional<UKType> phi_n(const OKType& sigma, int n);
std::optional<OKType> phi_pq(const UKType& sigma_prime, int p, int q);

OKType sigma_one_one(const OKType& sigma);
UKType sigma_prime_add(const UKType& sigma_prime, long long half_diff);

}  // namespace tl
