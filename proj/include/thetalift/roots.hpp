#pragma once
// Root systems of type C and of the O(p,q) shapes, positive systems
// containing the standard compact positive roots, dominance.

#include <string>
#include <string_view>
#include <vector>

namespace tl {

enum class GroupTag { Sp, OEven, OOdd };

// Sp: rank in `a`, d = 0.  O: `a` e-coordinates then `d` f-coordinates.
struct GroupKind {
  GroupTag tag = GroupTag::Sp;
  int a = 0;
  int d = 0;

  static GroupKind sp(int v) { return {GroupTag::Sp, v, 0}; }
  static GroupKind o_even(int a, int d) { return {GroupTag::OEven, a, d}; }
  static GroupKind o_odd(int p0, int q0) { return {GroupTag::OOdd, p0, q0}; }
  // Maximal compact O(p)xO(q) of O(p,q), p+q even.
  static GroupKind o_pq(int p, int q) {
    return p % 2 == 0 ? o_even(p / 2, q / 2) : o_odd(p / 2, q / 2);
  }

  int rank() const { return a + d; }
  bool is_o() const { return tag != GroupTag::Sp; }
  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

using Weight = std::vector<long long>;

struct Root {
  std::vector<int> coeffs;
  friend auto operator<=>(const Root&, const Root&) = default;
  Root operator-() const;
};

long long pairing(const Weight& w, const Root& r);
// Sum of two roots, no validity check.
Root add(const Root& x, const Root& y);

std::vector<Root> all_roots(const GroupKind& kind);
std::vector<Root> compact_positive_roots(const GroupKind& kind);
bool is_compact(const GroupKind& kind, const Root& r);
bool is_root(const GroupKind& kind, const Root& r);

struct PositiveSystem {
  GroupKind kind;
  std::vector<Root> roots;  // sorted, unique
  bool contains(const Root& r) const;
  friend bool operator==(const PositiveSystem& x, const PositiveSystem& y) {
    return x.kind == y.kind && x.roots == y.roots;
  }
  friend auto operator<=>(const PositiveSystem& x, const PositiveSystem& y) { return x.roots <=> y.roots; }
};

PositiveSystem make_positive_system(const GroupKind& kind, std::vector<Root> roots);
// Empty when valid; otherwise the violated clauses.
std::vector<std::string> check_positive_system(const PositiveSystem& psi);
std::vector<Root> simple_roots(const PositiveSystem& psi);

constexpr int kMaxEnumRank = 6;
std::vector<PositiveSystem> enumerate_positive_systems(const GroupKind& kind);

// lambda is Psi-dominant and strictly positive on compact simple roots.
bool check_dominance_F1(const Weight& lambda, const PositiveSystem& psi);

Weight two_rho_c(const GroupKind& kind);

// Root tokens: e1+e2, 2e1, -2e3, e1-f1, f2.  `+-` or `±` expands a token
// into two roots.
std::string root_to_string(const GroupKind& kind, const Root& r);
std::string psi_to_string(const PositiveSystem& psi);
std::vector<Root> parse_roots(const GroupKind& kind, std::string_view text);

// Substitute e_i -> s * e_{perm(i)} etc: general coordinate map.
Root map_root(const Root& r, const std::vector<int>& target, const std::vector<int>& sign);

}  // namespace tl
