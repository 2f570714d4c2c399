#include "thetalift/theta.hpp"

#include "thetalift/notation.hpp"
#include "thetalift/pattern.hpp"
#include "thetalift/tables.hpp"

#include <algorithm>

namespace tl {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

int parity_sign(int x) { return (x % 2 == 0) ? 1 : -1; }

// Removes |value| once from canonical entries; false when absent.
bool remove_entry(std::vector<Scalar>& entries, long long value) {
  auto it = std::find(entries.begin(), entries.end(), Scalar(value));
  if (it == entries.end()) return false;
  entries.erase(it);
  return true;
}

}  // namespace

InfChar dual_infchar(const InfChar& x, int m, int n) {
  if (m < 0 || n < 0) throw ThetaError("dual_infchar: negative size");
  int size = static_cast<int>(x.size());
  if (size != m && size != n) throw ThetaError("dual_infchar: |x| must be m or n");
  if (m == n) return x;
  bool from_o = size == m;
  std::vector<Scalar> e = x.entries;
  // O side = (Sp side | 0..m-n-1) when m > n, Sp side = (O side | 1..n-m)
  // when m < n.
  if (m > n) {
    if (from_o) {
      for (long long j = 0; j < m - n; ++j)
        if (!remove_entry(e, j)) throw ThetaError("incompatible infinitesimal character");
    } else {
      for (long long j = 0; j < m - n; ++j) e.emplace_back(j);
    }
  } else {
    if (from_o) {
      for (long long j = 1; j <= n - m; ++j) e.emplace_back(j);
    } else {
      for (long long j = 1; j <= n - m; ++j)
        if (!remove_entry(e, j)) throw ThetaError("incompatible infinitesimal character");
    }
  }
  return canonical_infchar(std::move(e));
}

std::vector<std::pair<int, int>> clashing_pairs(const std::vector<int>& eps, const std::vector<Scalar>& kappa) {
  std::vector<std::pair<int, int>> out;
  int t = static_cast<int>(eps.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (eps[i] != eps[j] && kappa_clash(kappa[i], kappa[j])) out.emplace_back(i, j);
  return out;
}

ModData apply_modification(ModData d, const PairChooser& choose) {
  while (true) {
    auto pairs = clashing_pairs(d.eps, d.kappa);
    if (pairs.empty()) return d;
    std::size_t pick = choose ? choose(pairs) : 0;
    if (pick >= pairs.size()) throw std::out_of_range("apply_modification: chooser out of range");
    auto [i, j] = pairs[pick];
    Scalar k = d.kappa[i].normalized();
    d.mu.push_back(0);
    d.nu.push_back(k + k);
    d.eps.erase(d.eps.begin() + j);
    d.eps.erase(d.eps.begin() + i);
    d.kappa.erase(d.kappa.begin() + j);
    d.kappa.erase(d.kappa.begin() + i);
  }
}

bool cond_lambda(const std::vector<long long>& lambda_d, const PositiveSystem& psi, int p_minus_q) {
  if (p_minus_q % 2) return false;
  int h = p_minus_q / 2;
  auto [k, l, z] = lambda_counts(lambda_d);
  if (h == k - l) return true;
  if (z == 0) return false;
  // e_{k+1} + e_{k+z}; 2e_{k+1} when z = 1.
  Root r;
  r.coeffs.assign(lambda_d.size(), 0);
  r.coeffs[k] += 1;
  r.coeffs[k + z - 1] += 1;
  bool in = psi.contains(r);
  return (h == k - l + 1 && in) || (h == k - l - 1 && !in);
}

SpParams induct_n(const SpParams& pi_prime, int p, int q, int k) {
  if (auto bad = validate(pi_prime); !bad.empty()) throw ThetaError("induct_n: invalid parameters: " + join(bad));
  int n = pi_prime.n();
  if (p < 0 || q < 0 || (p + q) % 2) throw ThetaError("induct_n: p+q must be even");
  if (p + q == 2 * n + 2) throw ThetaError("induct_n: p+q = 2n+2 is excluded");
  if (k < 1) throw ThetaError("induct_n: k must be at least 1");
  int half = (p + q) / 2;
  if (half >= n + 1 && half <= n + k) throw ThetaError("induct_n: (p+q)/2 lies in [n+1, n+k]");
  if (!cond_lambda(pi_prime.lambda_d, pi_prime.psi, p - q))
    throw ThetaError("induct_n: (lambda_d, Psi) fails the condition on p-q");

  ModData d{pi_prime.mu, pi_prime.nu, pi_prime.eps, pi_prime.kappa};
  int e = parity_sign((p - q) / 2);
  for (int i = 1; i <= k; ++i) {
    d.eps.push_back(e);
    d.kappa.emplace_back(static_cast<long long>(i + n - half));
  }
  d = apply_modification(std::move(d));
  SpParams out = pi_prime;
  out.mu = d.mu;
  out.nu = d.nu;
  out.eps = d.eps;
  out.kappa = d.kappa;
  out = canonicalize(out);
  if (auto bad = validate(out); !bad.empty()) throw std::logic_error("induct_n produced invalid parameters: " + join(bad));
  return out;
}

OParams induct_pq(const OParams& pi, int n, int k) {
  if (auto bad = validate(pi); !bad.empty()) throw ThetaError("induct_pq: invalid parameters: " + join(bad));
  if (pi.zeta != 1 || pi.xi != 1) throw ThetaError("induct_pq: needs zeta = xi = 1");
  if (k < 1) throw ThetaError("induct_pq: k must be at least 1");
  if (n < 0) throw ThetaError("induct_pq: n must be nonnegative");
  int half = (pi.p + pi.q) / 2;
  if (n >= half && n <= half + k - 1) throw ThetaError("induct_pq: n lies in [(p+q)/2, (p+q)/2+k-1]");
  if (pi.p + pi.q == 4 && n < first_occurrence(pi)) throw ThetaError("induct_pq: n is below the first occurrence");
  bool zero_entry = std::count(pi.lambda_l.begin(), pi.lambda_l.end(), 0) +
                        std::count(pi.lambda_r.begin(), pi.lambda_r.end(), 0) > 0;
  bool one_zero = false;
  for (int i = 0; i < pi.t(); ++i) one_zero |= pi.eps[i] == 1 && pi.kappa[i].is_zero();
  if (!zero_entry && !one_zero)
    throw ThetaError("induct_pq: needs a zero entry in lambda_d or some (eps,kappa) = (1,0)");

  ModData d{pi.mu, pi.nu, pi.eps, pi.kappa};
  for (int i = 1; i <= k; ++i) {
    d.eps.push_back(1);
    d.kappa.emplace_back(static_cast<long long>(n - half - (i - 1)));
  }
  d = apply_modification(std::move(d));
  OParams out = pi;
  out.p += k;
  out.q += k;
  out.mu = d.mu;
  out.nu = d.nu;
  out.eps = d.eps;
  out.kappa = d.kappa;
  out = canonicalize(out);
  if (auto bad = validate(out); !bad.empty()) throw std::logic_error("induct_pq produced invalid parameters: " + join(bad));
  return out;
}

namespace {

void require_four(int p, int q) {
  if (p < 0 || q < 0 || p + q != 4) throw ThetaError("only p+q = 4 is supported");
}

OParams special_params(int p, int q, bool det) {
  require_four(p, q);
  if (p < q) return canonicalize(swap_pq(special_params(q, p, det)));
  const char* text = nullptr;
  if (p == 4)
    text = det ? "pi_{1}((1,0;),-1,{e1+-e2},0,0,0,0) @ O(4,0)" : "pi_{1}((1,0;),1,{e1+-e2},0,0,0,0) @ O(4,0)";
  else if (p == 3)
    text = det ? "pi_{1}((0;),-1,{},0,0,(1),(1)) @ O(3,1)" : "pi_{1}((0;),1,{},0,0,(1),(1)) @ O(3,1)";
  else
    text = det ? "pi_{-1}(0,1,{},0,0,(1,1),(0,1)) @ O(2,2)" : "pi_{1}(0,1,{},0,0,(1,1),(0,1)) @ O(2,2)";
  return canonicalize(parse_o(text));
}

OParams checked_canonical(const OParams& pi) {
  if (auto bad = validate(pi); !bad.empty()) throw ThetaError("invalid parameters: " + join(bad));
  return canonicalize(pi);
}

// The unique row of a lift table matching x.
ThetaResult lookup(const char* table_name, const OParams& x) {
  auto tables = current_tables();
  const Table& table = tables->get(table_name);
  auto hits = match_rows(table, x);
  if (hits.empty()) throw std::logic_error(std::string("no row of ") + table_name + " matches " + render(x));
  ThetaResult r;
  r.zero = false;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const TableRow& row = *hits[h].row;
    SpParams y = canonicalize(std::get<SpParams>(instantiate(*row.rhs, hits[h].bindings)));
    if (h == 0) {
      r.params = y;
      r.provenance = std::string(table_name) + ":" + std::to_string(row.line);
      if (row.has_lkt) r.table_lkt = instantiate_uktypes(row.lkt, hits[h].bindings);
    } else if (!(y == r.params)) {
      throw std::logic_error(std::string("rows of ") + table_name + " disagree on " + render(x));
    }
  }
  if (auto bad = validate(r.params); !bad.empty())
    throw std::logic_error(r.provenance + " gives invalid parameters: " + join(bad));
  return r;
}

ThetaResult induct_result(const ThetaResult& from, int p, int q, int k) {
  ThetaResult r;
  r.zero = false;
  r.params = induct_n(from.params, p, q, k);
  r.provenance = "induct_n(k=" + std::to_string(k) + ") <- " + from.provenance;
  return r;
}

UKType contragredient_uk(const UKType& t) {
  UKType out;
  for (auto it = t.w.rbegin(); it != t.w.rend(); ++it) out.w.push_back(-*it);
  return out;
}

}  // namespace

OParams trivial_params(int p, int q) { return special_params(p, q, false); }
OParams det_params(int p, int q) { return special_params(p, q, true); }

int first_occurrence(const OParams& pi_in) {
  OParams pi = checked_canonical(pi_in);
  require_four(pi.p, pi.q);
  if (pi == trivial_params(pi.p, pi.q)) return 0;
  if (pi == det_params(pi.p, pi.q)) return 4;
  bool one_zero = false;
  for (int i = 0; i < pi.t(); ++i) one_zero |= pi.eps[i] == 1 && pi.kappa[i].is_zero();
  if (pi.xi == -1 || (pi.zeta == -1 && one_zero)) return 3;
  OParams probe = pi.p < pi.q ? canonicalize(swap_pq(pi)) : pi;
  auto tables = current_tables();
  return match_rows(tables->get(kTheta1), probe).empty() ? 2 : 1;
}

ThetaResult theta_n(const OParams& pi_in, int n) {
  OParams pi = checked_canonical(pi_in);
  require_four(pi.p, pi.q);
  if (n < 0) throw ThetaError("n must be nonnegative");
  if (pi.p < pi.q) {
    ThetaResult r = theta_n(canonicalize(swap_pq(pi)), n);
    if (!r.zero) {
      r.params = canonicalize(contragredient_sp(r.params));
      r.provenance = "contragredient <- " + r.provenance + " on O(" + std::to_string(pi.q) + "," + std::to_string(pi.p) + ")";
      if (r.table_lkt) {
        for (auto& t : *r.table_lkt) t = contragredient_uk(t);
        std::sort(r.table_lkt->begin(), r.table_lkt->end());
      }
    }
    return r;
  }

  int n0 = first_occurrence(pi);
  if (n < n0) return ThetaResult{};
  int p = pi.p, q = pi.q;
  if (n == 0) {
    ThetaResult r;
    r.zero = false;
    r.params = parse_sp("pi(0,{},0,0,0,0)");
    r.provenance = "trivial";
    return r;
  }
  if (n == 1) return lookup(kTheta1, pi);
  if (n == 2) return lookup(kTheta2, pi);
  if (n == 3) return n0 == 3 ? lookup(kTheta3, pi) : induct_result(lookup(kTheta2, pi), p, q, 1);
  if (n == 4) {
    if (n0 == 4) return lookup(kTheta4, pi);
    if (n0 == 3) return induct_result(lookup(kTheta3, pi), p, q, 1);
    return induct_result(lookup(kTheta2, pi), p, q, 2);
  }
  return induct_result(theta_n(pi, 4), p, q, n - 4);
}

SpParams theta3_det11() { return canonicalize(parse_sp("pi(0,{},(1),(1),(1),(2))")); }

int multiplicity_O31(int l, int eps, int eta, InducingChar chi) {
  if (eps != -1) return 0;
  int want = chi == InducingChar::plain ? parity_sign(l + 1) : parity_sign(l);
  return eta == want ? 1 : 0;
}

}  // namespace tl
