#include "thetalift/verify.hpp"

#include "thetalift/lkt.hpp"
#include "thetalift/notation.hpp"
#include "thetalift/tables.hpp"
#include "thetalift/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace tl {

std::vector<Scalar> sample_pool() {
  return {Scalar(-1), Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(5), Scalar(Rational(1, 2)), generic_scalar()};
}

std::vector<Scalar> sample_betas() {
  return {Scalar(0), Scalar(1), Scalar(2), Scalar(5), Scalar(Rational(1, 2)), generic_scalar(),
          Scalar(3), Scalar(4), Scalar(Rational(2), Rational(1))};
}

std::vector<RowSample> sample_rows(const std::string& table_name) {
  auto tables = current_tables();
  const Table& table = tables->get(table_name);
  auto pool = sample_pool();
  std::vector<RowSample> out;
  for (const auto& row : table.rows) {
    std::set<std::string> varset = bindable_vars(row.lhs);
    std::vector<std::string> vars(varset.begin(), varset.end());
    std::set<std::string> seen;
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Bindings b;
      for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = pool[idx[i]];
      if (row.cond.eval(b)) {
        try {
          OParams x = std::get<OParams>(instantiate(row.lhs, b));
          if (validate(x).empty()) {
            x = canonicalize(x);
            if (seen.insert(render(x)).second) out.push_back({row.line, b, x});
          }
        } catch (const std::exception&) {
          // non-integral slot for this substitution
        }
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == pool.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

namespace {

std::string set_text(const std::vector<UKType>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out + "}";
}

std::string where(const char* table, const RowSample& s) {
  return std::string(table) + ":" + std::to_string(s.line) + " " + render(s.params);
}

// Runs f, turning exceptions into a failed case.
void guarded(VerificationReport& rep, const std::string& name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    rep.add(name, false, std::string("exception: ") + e.what());
  }
}

bool dual_ok(const OParams& x, const SpParams& y) {
  return infchar_of(y) == dual_infchar(infchar_of(x), (x.p + x.q) / 2, y.n());
}

std::vector<OParams> special_all() {
  std::vector<OParams> out;
  for (int p = 0; p <= 4; ++p) {
    out.push_back(trivial_params(p, 4 - p));
    out.push_back(det_params(p, 4 - p));
  }
  return out;
}

const SpParams& exceptional_pick() {
  static const SpParams x = canonicalize(parse_sp("pi(0,{},(1),(1),(1),(2))"));
  return x;
}
const SpParams& exceptional_other() {
  static const SpParams x = canonicalize(parse_sp("pi(0,{},(1),(3),(1),(0))"));
  return x;
}

UKType add_entry(const UKType& t, long long e) {
  UKType out = t;
  out.w.push_back(e);
  std::sort(out.w.rbegin(), out.w.rend());
  return out;
}

}  // namespace

std::vector<OParams> lift_sources() {
  std::map<std::string, OParams> m;
  for (const char* t : {kTheta1, kTheta2, kTheta3, kTheta4})
    for (auto& s : sample_rows(t)) {
      m.emplace(render(s.params), s.params);
      OParams w = canonicalize(swap_pq(s.params));
      m.emplace(render(w), w);
    }
  for (auto& x : special_all()) m.emplace(render(x), x);
  std::vector<OParams> out;
  for (auto& [k, x] : m) out.push_back(x);
  return out;
}

std::vector<OParams> inverse_lookup(const SpParams& sp_in, int p, int q) {
  if (p < 0 || q < 0 || p + q != 4) throw ThetaError("inverse lookup needs p+q = 4");
  SpParams sp = canonicalize(sp_in);
  int n = sp.n();
  std::map<std::string, OParams> found;
  auto consider = [&](const OParams& x) {
    try {
      ThetaResult r = theta_n(x, n);
      if (!r.zero && r.params == sp) found.emplace(render(x), x);
    } catch (const std::exception&) {
    }
  };
  if (n >= 1 && n <= 4) {
    // Rows are stored for p >= q; the other half goes through the exchange.
    bool flip = p < q;
    SpParams target = flip ? canonicalize(contragredient_sp(sp)) : sp;
    const char* names[] = {kTheta1, kTheta2, kTheta3, kTheta4};
    auto tables = current_tables();
    for (const auto& row : tables->get(names[n - 1]).rows) {
      if (!row.rhs || row.lhs.p != std::max(p, q) || row.lhs.q != std::min(p, q)) continue;
      try {
        if (auto b = match(*row.rhs, row.cond, target)) {
          OParams x = canonicalize(std::get<OParams>(instantiate(row.lhs, *b)));
          if (!validate(x).empty()) continue;
          consider(flip ? canonicalize(swap_pq(x)) : x);
        }
      } catch (const std::exception&) {
      }
    }
  }
  for (const auto& x : lift_sources())
    if (x.p == p && x.q == q) consider(x);
  std::vector<OParams> out;
  for (auto& [k, x] : found) out.push_back(x);
  return out;
}

VerificationReport verify_appendix_c() {
  VerificationReport rep;
  rep.suite = "appendixC";
  for (const auto& b : sample_betas()) {
    VerificationReport r = regenerate_appendix_c(b);
    rep.merge(r);
    if (is_generic(b)) {
      auto it = std::find_if(r.counts.begin(), r.counts.end(), [](auto& c) { return c.first == "distinct rows"; });
      long long n = it == r.counts.end() ? -1 : it->second;
      rep.add("generic row count", n == 26, std::to_string(n) + " rows at generic beta");
    }
  }
  return rep;
}

VerificationReport verify_theta12() {
  VerificationReport rep;
  rep.suite = "theta12";
  auto tables = current_tables();
  for (int n : {1, 2}) {
    const char* tname = n == 1 ? kTheta1 : kTheta2;
    auto samples = sample_rows(tname);
    rep.counts.push_back({std::string(tname) + " samples", static_cast<long long>(samples.size())});
    for (const auto& s : samples) {
      std::string name = where(tname, s);
      guarded(rep, name, [&] {
        auto hits = match_rows(tables->get(tname), s.params);
        if (hits.size() != 1) {
          rep.add(name, false, std::to_string(hits.size()) + " rows match");
          return;
        }
        ThetaResult r = theta_n(s.params, n);
        std::vector<std::string> problems;
        if (r.zero) problems.push_back("lift is zero");
        else {
          if (!validate(r.params).empty()) problems.push_back("lift invalid");
          if (!dual_ok(s.params, r.params)) problems.push_back("infinitesimal characters not dual");
          if (n == 2 && !cond_lambda(r.params.lambda_d, r.params.psi, s.params.p - s.params.q))
            problems.push_back("lift fails the (lambda_d, Psi) condition");
          int fo = first_occurrence(s.params);
          if (fo > n) problems.push_back("first occurrence " + std::to_string(fo) + " > " + std::to_string(n));
          if (n == 2 && fo == 2 && !match_rows(tables->get(kTheta1), s.params).empty())
            problems.push_back("matches a theta_1 row but first occurrence is 2");
          // On O(2,2) the (p,q) exchange can fix parameters whose lift is
          // not self-dual, so the exchange rule is only checked for p != q.
          if (s.params.p != s.params.q) {
            OParams w = canonicalize(swap_pq(s.params));
            ThetaResult rw = theta_n(w, n);
            if (rw.zero || !(rw.params == canonicalize(contragredient_sp(r.params))))
              problems.push_back("swapped signature is not the contragredient");
            else if (!dual_ok(w, rw.params))
              problems.push_back("swapped signature: infinitesimal characters not dual");
          }
        }
        std::string detail = r.zero ? "" : render(r.params);
        for (auto& p : problems) detail += "; " + p;
        rep.add(name, problems.empty(), detail);
      });
    }
  }
  return rep;
}

VerificationReport verify_theta3() {
  VerificationReport rep;
  rep.suite = "theta3";
  auto samples = sample_rows(kTheta3);
  rep.counts.push_back({"samples", static_cast<long long>(samples.size())});
  int exceptional = 0;
  for (const auto& s : samples) {
    std::string name = where(kTheta3, s);
    guarded(rep, name, [&] {
      std::vector<std::string> problems;
      if (first_occurrence(s.params) != 3) problems.push_back("first occurrence is not 3");
      if (!theta_n(s.params, 2).zero) problems.push_back("theta_2 is not zero");
      ThetaResult r = theta_n(s.params, 3);
      if (r.zero) {
        rep.add(name, false, "lift is zero");
        return;
      }
      auto lkt = lowest_ktypes_sp(r.params);
      if (!r.table_lkt || lkt != *r.table_lkt)
        problems.push_back("lowest K-types " + set_text(lkt) + " vs table " + (r.table_lkt ? set_text(*r.table_lkt) : "none"));
      if (!dual_ok(s.params, r.params)) problems.push_back("infinitesimal characters not dual");
      auto cands = verify_unique_by_invariants(3, infchar_of(r.params), lkt);
      bool unique = cands.size() == 1 && cands[0] == r.params;
      bool pair = cands.size() == 2 && r.params == exceptional_pick() &&
                  std::count(cands.begin(), cands.end(), exceptional_pick()) == 1 &&
                  std::count(cands.begin(), cands.end(), exceptional_other()) == 1;
      if (pair) ++exceptional;
      if (!unique && !pair) problems.push_back(std::to_string(cands.size()) + " candidates share the invariants");
      OParams w = canonicalize(swap_pq(s.params));
      ThetaResult rw = theta_n(w, 3);
      if (rw.zero || !(rw.params == canonicalize(contragredient_sp(r.params))))
        problems.push_back("swapped signature is not the contragredient");
      std::string detail = render(r.params) + " " + set_text(lkt) + (pair ? " (two candidates)" : "");
      for (auto& p : problems) detail += "; " + p;
      rep.add(name, problems.empty(), detail);
    });
  }
  rep.add("two-candidate case seen", exceptional == 1, std::to_string(exceptional) + " sample(s)");

  guarded(rep, "theta_3(det_{1,1})", [&] {
    SpParams theta2 = canonicalize(parse_sp("pi(0,{},(1),(1),0,0)"));
    SpParams induced = induct_n(theta2, 1, 1, 1);
    rep.add("theta_3(det_{1,1})", induced == theta3_det11(),
            render(theta3_det11()) + " vs induced " + render(induced));
  });
  return rep;
}

VerificationReport verify_theta4() {
  VerificationReport rep;
  rep.suite = "theta4";
  for (const auto& s : sample_rows(kTheta4)) {
    std::string name = where(kTheta4, s);
    guarded(rep, name, [&] {
      std::vector<std::string> problems;
      if (first_occurrence(s.params) != 4) problems.push_back("first occurrence is not 4");
      if (!theta_n(s.params, 3).zero) problems.push_back("theta_3 is not zero");
      ThetaResult r = theta_n(s.params, 4);
      if (r.zero) {
        rep.add(name, false, "lift is zero");
        return;
      }
      auto lkt = lowest_ktypes_sp(r.params);
      if (!r.table_lkt || lkt != *r.table_lkt) problems.push_back("lowest K-types " + set_text(lkt));
      if (!(infchar_of(r.params) == canonical_infchar({0, 1, 1, 2}))) problems.push_back("infinitesimal character");
      if (!dual_ok(s.params, r.params)) problems.push_back("infinitesimal characters not dual");
      auto cands = verify_unique_by_invariants(4, infchar_of(r.params), lkt);
      if (cands.size() != 1 || !(cands[0] == r.params))
        problems.push_back(std::to_string(cands.size()) + " candidates share the invariants");
      OParams w = canonicalize(swap_pq(s.params));
      ThetaResult rw = theta_n(w, 4);
      if (rw.zero || !(rw.params == canonicalize(contragredient_sp(r.params))))
        problems.push_back("swapped signature is not the contragredient");
      std::string detail = render(r.params) + " " + set_text(lkt);
      for (auto& p : problems) detail += "; " + p;
      rep.add(name, problems.empty(), detail);
    });
  }
  return rep;
}

VerificationReport verify_duality(int max_n) {
  VerificationReport rep;
  rep.suite = "duality";
  long long pairs = 0;
  for (const auto& x : lift_sources()) {
    std::string name = render(x);
    guarded(rep, name, [&] {
      int fo = first_occurrence(x);
      std::vector<std::string> problems;
      bool seen_nonzero = false;
      for (int n = 0; n <= max_n; ++n) {
        ThetaResult r = theta_n(x, n);
        if (r.zero != (n < fo)) problems.push_back("n=" + std::to_string(n) + ": zero pattern");
        if (r.zero) {
          if (seen_nonzero) problems.push_back("n=" + std::to_string(n) + ": vanishes after a nonzero lift");
          continue;
        }
        seen_nonzero = true;
        ++pairs;
        if (!validate(r.params).empty()) problems.push_back("n=" + std::to_string(n) + ": invalid lift");
        if (!dual_ok(x, r.params)) problems.push_back("n=" + std::to_string(n) + ": infinitesimal characters not dual");
      }
      if (fo <= 2) {
        SpParams t2 = theta_n(x, 2).params;
        SpParams twice = induct_n(induct_n(t2, x.p, x.q, 1), x.p, x.q, 1);
        if (!(induct_n(t2, x.p, x.q, 2) == twice)) problems.push_back("induction path dependence");
      }
      std::string detail = "n(pi)=" + std::to_string(fo);
      for (auto& p : problems) detail += "; " + p;
      rep.add(name, problems.empty(), detail);
    });
  }
  rep.counts.push_back({"nonzero pairs", pairs});
  return rep;
}

VerificationReport verify_first_occurrence() {
  VerificationReport rep;
  rep.suite = "first-occurrence";
  for (int p = 0; p <= 4; ++p) {
    int q = 4 - p;
    std::string sig = "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
    guarded(rep, sig, [&] {
      int t = first_occurrence(trivial_params(p, q)), d = first_occurrence(det_params(p, q));
      rep.add(sig + " trivial", t == 0, std::to_string(t));
      rep.add(sig + " det", d == 4, std::to_string(d));
      rep.add(sig + " conservation", t + d == 4, std::to_string(t + d));
    });
  }
  struct Want {
    const char* table;
    int lo, hi;
  };
  for (const Want& w : {Want{kTheta1, 0, 1}, Want{kTheta2, 0, 2}, Want{kTheta3, 3, 3}, Want{kTheta4, 4, 4}}) {
    for (const auto& s : sample_rows(w.table)) {
      for (const OParams& x : {s.params, canonicalize(swap_pq(s.params))}) {
        std::string name = std::string(w.table) + ":" + std::to_string(s.line) + " " + render(x);
        guarded(rep, name, [&] {
          int fo = first_occurrence(x);
          bool ok = fo >= w.lo && fo <= w.hi;
          if (fo == 0) ok = ok && x == trivial_params(x.p, x.q);
          rep.add(name, ok, "n(pi)=" + std::to_string(fo));
        });
      }
    }
  }
  return rep;
}

std::vector<SpParams> propagation_sources() {
  std::map<std::string, SpParams> m;
  for (int n : {1, 2})
    for (const auto& s : sample_rows(n == 1 ? kTheta1 : kTheta2)) {
      ThetaResult r = theta_n(s.params, n);
      if (!r.zero) m.emplace(render(r.params), r.params);
    }
  for (const auto& b : sample_betas())
    for (const auto& row : sp6_rows_at(b).rows) m.emplace(render(row.params), row.params);
  std::vector<SpParams> out;
  for (auto& [k, x] : m) out.push_back(x);
  return out;
}

VerificationReport verify_propagation() {
  VerificationReport rep;
  rep.suite = "propagation";
  long long checked = 0;
  for (const auto& x : propagation_sources()) {
    int n = x.n();
    std::vector<UKType> base;
    try {
      base = lowest_ktypes_sp(x);
    } catch (const std::exception& e) {
      rep.add(render(x), false, e.what());
      continue;
    }
    for (int p = 0; p <= 8; ++p)
      for (int q = 0; p + q <= 8; ++q) {
        if ((p + q) % 2 || p + q == 2 * n + 2) continue;
        if (!cond_lambda(x.lambda_d, x.psi, p - q)) continue;
        std::string name = render(x) + " O(" + std::to_string(p) + "," + std::to_string(q) + ")";
        guarded(rep, name, [&] {
          SpParams y = induct_n(x, p, q, 1);
          std::vector<UKType> want;
          for (const auto& t : base) want.push_back(add_entry(t, (p - q) / 2));
          std::sort(want.begin(), want.end());
          auto got = lowest_ktypes_sp(y);
          ++checked;
          bool ok = got == want;
          rep.add(name, ok, ok ? "" : render(y) + ": " + set_text(got) + " vs " + set_text(want));
        });
      }
  }
  rep.counts.push_back({"checked", checked});
  return rep;
}

VerificationReport verify_phi() {
  VerificationReport rep;
  rep.suite = "phi";
  constexpr long long kMax = 6;
  long long o2u = 0, u2o = 0;
  std::vector<std::string> failures;
  // Weakly decreasing vectors of length len with entries in [lo, hi].
  std::function<void(int, long long, long long, std::vector<long long>&, const std::function<void(const std::vector<long long>&)>&)>
      walk = [&](int len, long long lo, long long hi, std::vector<long long>& cur, const auto& emit) {
        if (static_cast<int>(cur.size()) == len) {
          emit(cur);
          return;
        }
        long long top = cur.empty() ? hi : cur.back();
        for (long long v = lo; v <= top; ++v) {
          cur.push_back(v);
          walk(len, lo, hi, cur, emit);
          cur.pop_back();
        }
      };
  for (int p = 0; p <= 4; ++p) {
    int q = 4 - p;
    for (int n = 0; n <= 5; ++n) {
      // O(p) x O(q) -> U(n) -> back.
      std::vector<long long> l, r;
      walk(p / 2, 0, kMax, l, [&](const std::vector<long long>& left) {
        walk(q / 2, 0, kMax, r, [&](const std::vector<long long>& right) {
          for (int eps : {1, -1})
            for (int eta : {1, -1}) {
              OKType s = make_oktype(p, q, left, eps, right, eta);
              auto u = phi_n(s, n);
              if (!u) continue;
              ++o2u;
              auto back = phi_pq(*u, p, q);
              if (!back || !(*back == s)) failures.push_back("round trip " + to_string(s) + " n=" + std::to_string(n));
              if (degree_o(s) != degree_u(*u, p - q))
                failures.push_back("degree " + to_string(s) + " n=" + std::to_string(n));
            }
        });
      });
      // U(n) -> O(p) x O(q) -> back.
      std::vector<long long> w;
      walk(n, -kMax, kMax, w, [&](const std::vector<long long>& v) {
        UKType u{v};
        auto s = phi_pq(u, p, q);
        if (!s) return;
        ++u2o;
        auto back = phi_n(*s, n);
        if (!back || !(*back == u)) failures.push_back("round trip " + to_string(u) + " O(" + std::to_string(p) + "," + std::to_string(q) + ")");
        if (degree_o(*s) != degree_u(u, p - q)) failures.push_back("degree " + to_string(u));
      });
    }
  }
  rep.counts.push_back({"O->U", o2u});
  rep.counts.push_back({"U->O", u2o});
  rep.add("phi round trips and degrees", failures.empty() && o2u > 0 && u2o > 0,
          failures.empty() ? std::to_string(o2u) + " + " + std::to_string(u2o) + " K-types"
                           : std::to_string(failures.size()) + " failures, first: " + failures[0]);
  return rep;
}

VerificationReport verify_norm_oracle(int trials) {
  VerificationReport rep;
  rep.suite = "norm";
  std::mt19937 rng(20240531u);
  auto uni = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
  // 2 rho_c from the root list directly: compact roots whose first nonzero
  // coordinate is positive.
  auto rho2 = [](const GroupKind& kind) {
    Weight w(kind.rank(), 0);
    for (const auto& r : all_roots(kind)) {
      if (!is_compact(kind, r)) continue;
      auto it = std::find_if(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c != 0; });
      if (it == r.coeffs.end() || *it < 0) continue;
      for (int i = 0; i < kind.rank(); ++i) w[i] += r.coeffs[i];
    }
    return w;
  };
  auto norm2 = [](const Weight& a, const Weight& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] + b[i]) * (a[i] + b[i]);
    return s;
  };
  int bad = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    long long got = 0, want = 0;
    std::string what;
    if (t % 2 == 0) {
      int n = static_cast<int>(uni(1, 5));
      UKType u;
      for (int i = 0; i < n; ++i) u.w.push_back(uni(-6, 6));
      std::sort(u.w.rbegin(), u.w.rend());
      got = ktype_norm(u);
      want = norm2(u.w, rho2(GroupKind::sp(n)));
      what = to_string(u);
    } else {
      int p, q;
      do {
        p = static_cast<int>(uni(0, 10));
        q = static_cast<int>(uni(0, 10));
      } while ((p + q) % 2 || p / 2 + q / 2 > 5 || p / 2 + q / 2 == 0);
      std::vector<long long> l, r;
      for (int i = 0; i < p / 2; ++i) l.push_back(uni(0, 6));
      for (int i = 0; i < q / 2; ++i) r.push_back(uni(0, 6));
      std::sort(l.rbegin(), l.rend());
      std::sort(r.rbegin(), r.rend());
      OKType s = make_oktype(p, q, l, uni(0, 1) ? 1 : -1, r, uni(0, 1) ? 1 : -1);
      Weight lam = l;
      lam.insert(lam.end(), r.begin(), r.end());
      got = ktype_norm(s);
      want = norm2(lam, rho2(GroupKind::o_pq(p, q)));
      what = to_string(s);
    }
    if (got != want && bad++ == 0) first = what + ": " + std::to_string(got) + " vs " + std::to_string(want);
  }
  rep.add("norm vs root oracle", bad == 0,
          bad ? std::to_string(bad) + " mismatches, first " + first : std::to_string(trials) + " K-types");
  return rep;
}

VerificationReport verify_canonical_idempotence() {
  VerificationReport rep;
  rep.suite = "canonical";
  int bad = 0;
  long long count = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++count;
    if (!ok && bad++ == 0) first = what;
  };
  std::vector<SpParams> sp = propagation_sources();
  for (const auto& t : {canonical_infchar({2, 0, 1}), canonical_infchar({0, 1, 1, 2}), canonical_infchar({5}),
                        canonical_infchar({1, 1, 1})}) {
    auto e = enumerate_sp_reps(static_cast<int>(t.size()), t);
    sp.insert(sp.end(), e.begin(), e.end());
  }
  for (const auto& x : sp) {
    SpParams c = canonicalize(x);
    note(canonicalize(c) == c, render(x));
    note(canonicalize(parse_sp(render(c))) == c, "round trip " + render(x));
  }
  for (const auto& x : lift_sources()) {
    OParams c = canonicalize(x);
    note(canonicalize(c) == c, render(x));
    note(canonicalize(parse_o(render(c))) == c, "round trip " + render(x));
  }
  rep.add("canonicalize idempotent, parse(render) = canonical", bad == 0,
          bad ? std::to_string(bad) + " failures, first " + first : std::to_string(count) + " checks");
  return rep;
}

VerificationReport verify_confluence(int trials) {
  VerificationReport rep;
  rep.suite = "confluence";
  std::mt19937 rng(7u);
  const std::vector<Scalar> kpool{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2),
                                  Scalar(Rational(1, 2)), Scalar(Rational(-1, 2)), Scalar(3)};
  auto canon = [](const ModData& d) {
    SpParams x;
    x.mu = d.mu;
    x.nu = d.nu;
    x.eps = d.eps;
    x.kappa = d.kappa;
    return canonicalize(x);
  };
  int bad = 0, modified = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    ModData d;
    int len = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < len; ++i) {
      d.eps.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
      d.kappa.push_back(kpool[std::uniform_int_distribution<std::size_t>(0, kpool.size() - 1)(rng)]);
    }
    ModData left = apply_modification(d);
    ModData random = apply_modification(d, [&](const std::vector<std::pair<int, int>>& pairs) {
      return std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng);
    });
    ModData last = apply_modification(d, [](const std::vector<std::pair<int, int>>& pairs) { return pairs.size() - 1; });
    if (left.mu.size() != 0) ++modified;
    bool ok = canon(left) == canon(random) && canon(left) == canon(last) &&
              clashing_pairs(left.eps, left.kappa).empty();
    if (!ok && bad++ == 0) first = render(canon(d)) + " -> " + render(canon(left)) + " / " + render(canon(random));
  }
  rep.add("modification confluence", bad == 0,
          bad ? std::to_string(bad) + " failures, first " + first
              : std::to_string(trials) + " trials, " + std::to_string(modified) + " modified");
  return rep;
}

VerificationReport verify_involutions() {
  VerificationReport rep;
  rep.suite = "involutions";
  int bad = 0;
  long long count = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++count;
    if (!ok && bad++ == 0) first = what;
  };
  for (const auto& x : lift_sources()) {
    OParams w = swap_pq(x);
    note(swap_pq(w) == x, "swap twice " + render(x));
    note(validate(w).empty(), "swap invalid " + render(x));
    note(infchar_of(w) == infchar_of(x), "swap infchar " + render(x));
  }
  for (const auto& x : propagation_sources()) {
    SpParams c = contragredient_sp(x);
    note(contragredient_sp(c) == x, "contragredient twice " + render(x));
    note(validate(c).empty(), "contragredient invalid " + render(x));
    note(infchar_of(c) == infchar_of(x), "contragredient infchar " + render(x));
  }
  rep.add("swap_pq and contragredient_sp are involutions", bad == 0,
          bad ? std::to_string(bad) + " failures, first " + first : std::to_string(count) + " checks");
  return rep;
}

VerificationReport verify_props() {
  VerificationReport rep;
  rep.suite = "props";
  for (const auto& r : {verify_duality(), verify_first_occurrence(), verify_propagation(), verify_phi(),
                        verify_norm_oracle(), verify_canonical_idempotence(), verify_confluence(), verify_involutions()})
    rep.merge(r);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"appendixC", "theta12", "theta3", "theta4", "props", "all"};
  return names;
}

VerificationReport run_suite(const std::string& name) {
  if (name == "appendixC") return verify_appendix_c();
  if (name == "theta12") return verify_theta12();
  if (name == "theta3") return verify_theta3();
  if (name == "theta4") return verify_theta4();
  if (name == "props") return verify_props();
  if (name == "all") {
    VerificationReport rep;
    rep.suite = "all";
    for (const auto& r : {verify_appendix_c(), verify_theta12(), verify_theta3(), verify_theta4(), verify_props()})
      rep.merge(r);
    return rep;
  }
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace tl
