#include "thetalift/langlands.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tl {

LambdaCounts lambda_counts(const std::vector<long long>& lambda_d) {
  LambdaCounts c;
  for (long long x : lambda_d) {
    if (x > 0) ++c.k;
    else if (x < 0) ++c.l;
    else ++c.z;
  }
  return c;
}

bool kappa_clash(const Scalar& x, const Scalar& y) { return x == y || x == -y; }

namespace {

void check_gl_blocks(std::vector<std::string>& bad, const std::vector<long long>& mu, const std::vector<Scalar>& nu,
                     const std::vector<int>& eps, const std::vector<Scalar>& kappa) {
  if (mu.size() != nu.size()) bad.push_back("mu and nu lengths differ");
  if (eps.size() != kappa.size()) bad.push_back("eps and kappa lengths differ");
  for (long long m : mu)
    if (m < 0) bad.push_back("mu entries must be nonnegative");
  for (int e : eps)
    if (e != 1 && e != -1) bad.push_back("eps entries must be +1 or -1");
  if (!bad.empty()) return;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (nu[i].is_zero() && mu[i] % 2 == 0)
      bad.push_back("(F-2): nu_" + std::to_string(i + 1) + "=0 requires mu odd");
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = i + 1; j < eps.size(); ++j)
      if (kappa_clash(kappa[i], kappa[j]) && eps[i] != eps[j])
        bad.push_back("(F-2): kappa_" + std::to_string(i + 1) + "=+-kappa_" + std::to_string(j + 1) +
                      " requires equal eps");
}

// Multiplicity of each positive value on the two sides.
bool block_balanced(const std::vector<long long>& pos, const std::vector<long long>& neg) {
  std::map<long long, int> cnt;
  for (long long x : pos) ++cnt[x];
  for (long long x : neg) --cnt[x];
  return std::all_of(cnt.begin(), cnt.end(), [](auto& kv) { return std::abs(kv.second) <= 1; });
}

template <class F>
void sort_pairs(std::vector<long long>& a, std::vector<Scalar>& b, F key) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (auto& x : b) x = x.normalized();
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return key(a[i], b[i]) < key(a[j], b[j]); });
  std::vector<long long> a2;
  std::vector<Scalar> b2;
  for (auto i : idx) {
    a2.push_back(a[i]);
    b2.push_back(b[i]);
  }
  a = std::move(a2);
  b = std::move(b2);
}

void canonical_gl(std::vector<long long>& mu, std::vector<Scalar>& nu, std::vector<int>& eps,
                  std::vector<Scalar>& kappa) {
  sort_pairs(mu, nu, [](long long m, const Scalar& s) { return std::make_pair(m, s); });
  std::vector<long long> e(eps.begin(), eps.end());
  sort_pairs(e, kappa, [](long long x, const Scalar& s) { return std::make_pair(s, x); });
  eps.assign(e.begin(), e.end());
}

void append_infchar(std::vector<Scalar>& raw, const std::vector<long long>& mu, const std::vector<Scalar>& nu,
                    const std::vector<Scalar>& kappa) {
  Scalar half(Rational(1, 2));
  for (std::size_t i = 0; i < mu.size(); ++i) {
    raw.push_back((Scalar(mu[i]) + nu[i]) * half);
    raw.push_back((Scalar(-mu[i]) + nu[i]) * half);
  }
  raw.insert(raw.end(), kappa.begin(), kappa.end());
}

}  // namespace

std::vector<std::string> validate(const SpParams& x) {
  std::vector<std::string> bad;
  int v = x.v();
  if (x.psi.kind != GroupKind::sp(v)) bad.push_back("Psi is not a root set for Sp of rank " + std::to_string(v));
  if (!std::is_sorted(x.lambda_d.rbegin(), x.lambda_d.rend())) bad.push_back("lambda_d must be nonincreasing");
  std::vector<long long> pos, neg;
  for (long long c : x.lambda_d) {
    if (c > 0) pos.push_back(c);
    if (c < 0) neg.push_back(-c);
  }
  if (!block_balanced(pos, neg)) bad.push_back("lambda_d blocks: |k_i-l_i|<=1 violated");
  if (bad.empty()) {
    for (auto& m : check_positive_system(x.psi)) bad.push_back("Psi: " + m);
    if (bad.empty() && !check_dominance_F1(x.lambda_d, x.psi))
      bad.push_back("(F-1): lambda_d not Psi-dominant or zero on a compact simple root");
  }
  check_gl_blocks(bad, x.mu, x.nu, x.eps, x.kappa);
  if (x.eps.size() == x.kappa.size()) {
    int want = v % 2 ? -1 : 1;
    for (std::size_t i = 0; i < x.eps.size(); ++i)
      if (x.kappa[i].is_zero() && x.eps[i] != want)
        bad.push_back("(F-2): kappa_" + std::to_string(i + 1) + "=0 requires eps=(-1)^v");
  }
  return bad;
}

std::vector<std::string> validate(const OParams& x) {
  std::vector<std::string> bad;
  int a = x.a(), d = x.d(), s = x.s(), t = x.t();
  if ((x.p + x.q) % 2) bad.push_back("p+q must be even");
  if (2 * a + 2 * s + t != x.p || 2 * d + 2 * s + t != x.q)
    bad.push_back("shape: need 2a+2s+t=p and 2d+2s+t=q");
  if (x.zeta != 1 && x.zeta != -1) bad.push_back("zeta must be +1 or -1");
  if (x.xi != 1 && x.xi != -1) bad.push_back("xi must be +1 or -1");
  if (x.psi.kind != GroupKind::o_even(a, d)) bad.push_back("Psi is not a root set for O(2a,2d)");
  for (const auto* half : {&x.lambda_l, &x.lambda_r}) {
    if (!std::is_sorted(half->rbegin(), half->rend())) bad.push_back("lambda_d halves must be nonincreasing");
    if (!half->empty() && half->back() < 0) bad.push_back("lambda_d entries must be nonnegative");
  }
  std::vector<long long> pos, neg;
  int z = 0, zp = 0;
  for (long long c : x.lambda_l) c > 0 ? pos.push_back(c) : void(++z);
  for (long long c : x.lambda_r) c > 0 ? neg.push_back(c) : void(++zp);
  if (!block_balanced(pos, neg)) bad.push_back("lambda_d blocks: |k_i-l_i|<=1 violated");
  if (std::abs(z - zp) > 1) bad.push_back("lambda_d zero blocks: |z-z'|<=1 violated");
  if (bad.empty()) {
    for (auto& m : check_positive_system(x.psi)) bad.push_back("Psi: " + m);
    Weight w(x.lambda_l);
    w.insert(w.end(), x.lambda_r.begin(), x.lambda_r.end());
    if (bad.empty() && !check_dominance_F1(w, x.psi))
      bad.push_back("(F-1): lambda_d not Psi-dominant or zero on a compact simple root");
  }
  check_gl_blocks(bad, x.mu, x.nu, x.eps, x.kappa);
  if (x.xi == -1 && z + zp == 0) bad.push_back("xi=-1 requires a zero entry in lambda_d");
  if (x.zeta == -1) {
    bool kappa_zero = std::any_of(x.kappa.begin(), x.kappa.end(), [](const Scalar& k) { return k.is_zero(); });
    if (z + zp > 0 || !kappa_zero)
      bad.push_back("zeta=-1 requires lambda_d without zero entries and a zero entry in kappa (inferred reading)");
  }
  return bad;
}

SpParams canonicalize(SpParams x) {
  canonical_gl(x.mu, x.nu, x.eps, x.kappa);
  return x;
}

namespace {

PositiveSystem flip_coord(const PositiveSystem& psi, int coord) {
  int n = psi.kind.rank();
  std::vector<int> target(n), sign(n, 1);
  std::iota(target.begin(), target.end(), 0);
  sign[coord] = -1;
  std::vector<Root> roots;
  for (const auto& r : psi.roots) roots.push_back(map_root(r, target, sign));
  return make_positive_system(psi.kind, std::move(roots));
}

}  // namespace

OParams canonicalize(OParams x) {
  canonical_gl(x.mu, x.nu, x.eps, x.kappa);
  // O(2a) contains the reflection in e_a: when lambda_d vanishes there the
  // two positive systems give the same representation.  Same for f_d.
  std::vector<PositiveSystem> orbit{x.psi};
  auto extend = [&](int coord) {
    std::size_t m = orbit.size();
    for (std::size_t i = 0; i < m; ++i) orbit.push_back(flip_coord(orbit[i], coord));
  };
  if (x.a() > 0 && x.lambda_l.back() == 0) extend(x.a() - 1);
  if (x.d() > 0 && x.lambda_r.back() == 0) extend(x.a() + x.d() - 1);
  x.psi = *std::max_element(orbit.begin(), orbit.end());
  return x;
}

InfChar infchar_of(const SpParams& x) {
  std::vector<Scalar> raw;
  for (long long c : x.lambda_d) raw.emplace_back(c);
  append_infchar(raw, x.mu, x.nu, x.kappa);
  return canonical_infchar(std::move(raw));
}

InfChar infchar_of(const OParams& x) {
  std::vector<Scalar> raw;
  for (long long c : x.lambda_l) raw.emplace_back(c);
  for (long long c : x.lambda_r) raw.emplace_back(c);
  append_infchar(raw, x.mu, x.nu, x.kappa);
  return canonical_infchar(std::move(raw));
}

SpParams contragredient_sp(const SpParams& x) {
  SpParams y = x;
  int v = x.v();
  for (int i = 0; i < v; ++i) y.lambda_d[i] = -x.lambda_d[v - 1 - i];
  std::vector<int> target(v), sign(v, -1);
  for (int i = 0; i < v; ++i) target[i] = v - 1 - i;
  std::vector<Root> roots;
  for (const auto& r : x.psi.roots) roots.push_back(map_root(r, target, sign));
  y.psi = make_positive_system(x.psi.kind, std::move(roots));
  return y;
}

OParams swap_pq(const OParams& x) {
  OParams y = x;
  std::swap(y.p, y.q);
  std::swap(y.lambda_l, y.lambda_r);
  int a = x.a(), d = x.d();
  std::vector<int> target(a + d), sign(a + d, 1);
  for (int i = 0; i < a; ++i) target[i] = d + i;
  for (int j = 0; j < d; ++j) target[a + j] = j;
  std::vector<Root> roots;
  for (const auto& r : x.psi.roots) roots.push_back(map_root(r, target, sign));
  y.psi = make_positive_system(GroupKind::o_even(d, a), std::move(roots));
  return y;
}

}  // namespace tl
