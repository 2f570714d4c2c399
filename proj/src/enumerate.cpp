#include "thetalift/enumerate.hpp"

#include "thetalift/lkt.hpp"
#include "thetalift/notation.hpp"
#include "thetalift/pattern.hpp"
#include "thetalift/tables.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tl {

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.cases) cases.push_back({other.suite + "/" + c.name, c.ok, c.detail});
  for (const auto& c : other.counts) counts.push_back({other.suite + "/" + c.first, c.second});
}

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.ok; }));
}

namespace {

// All ways to split `items` into unordered pairs.
void matchings(std::vector<Scalar> items, std::vector<std::pair<Scalar, Scalar>>& cur,
               const std::function<void(const std::vector<std::pair<Scalar, Scalar>>&)>& emit) {
  if (items.empty()) {
    emit(cur);
    return;
  }
  Scalar first = items[0];
  for (std::size_t j = 1; j < items.size(); ++j) {
    std::vector<Scalar> rest;
    for (std::size_t i = 1; i < items.size(); ++i)
      if (i != j) rest.push_back(items[i]);
    cur.emplace_back(first, items[j]);
    matchings(rest, cur, emit);
    cur.pop_back();
  }
}

// (mu, nu) with {(mu+nu)/2, (nu-mu)/2} = {+-x, +-y} and mu a nonnegative
// integer; nu normalized.
std::vector<std::pair<long long, Scalar>> pair_options(const Scalar& x, const Scalar& y) {
  std::set<std::pair<long long, Scalar>> out;
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      Scalar a = sx == 1 ? x : -x;
      Scalar b = sy == 1 ? y : -y;
      for (int order = 0; order < 2; ++order) {
        Scalar m = a - b;
        if (m.is_integer() && m.as_int() >= 0) out.insert({m.as_int(), (a + b).normalized()});
        std::swap(a, b);
      }
    }
  return {out.begin(), out.end()};
}

// Distinct sorted-decreasing lambda_d from integer entries with signs.
std::vector<std::vector<long long>> lambda_options(const std::vector<Scalar>& entries) {
  for (const auto& e : entries)
    if (!e.is_integer()) return {};
  std::set<std::vector<long long>> out;
  std::size_t v = entries.size();
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    std::vector<long long> l;
    for (std::size_t i = 0; i < v; ++i) l.push_back((mask >> i & 1u) ? -entries[i].as_int() : entries[i].as_int());
    std::sort(l.rbegin(), l.rend());
    out.insert(l);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<SpParams> enumerate_sp_reps(int n, const InfChar& target) {
  if (n < 0 || n > kMaxEnumN) throw std::invalid_argument("enumerate_sp_reps: n must be in [0, 4]");
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("enumerate_sp_reps: |target| must be n");
  if (!(canonical_infchar(target.entries) == target)) throw std::invalid_argument("enumerate_sp_reps: target not canonical");
  const auto& t = target.entries;
  std::map<std::string, SpParams> found;

  // role[i]: 0 lambda_d, 1 pair, 2 kappa.
  std::vector<int> role(n, 0);
  std::function<void(int)> assign = [&](int i) {
    if (i < n) {
      for (int r = 0; r < 3; ++r) {
        role[i] = r;
        assign(i + 1);
      }
      return;
    }
    std::vector<Scalar> lam, pairs, kap;
    for (int j = 0; j < n; ++j) (role[j] == 0 ? lam : role[j] == 1 ? pairs : kap).push_back(t[j]);
    if (pairs.size() % 2) return;
    auto lambdas = lambda_options(lam);
    if (lambdas.empty()) return;
    auto psis = enumerate_positive_systems(GroupKind::sp(static_cast<int>(lam.size())));

    // (mu,nu) lists over all matchings and choices.
    std::vector<std::pair<std::vector<long long>, std::vector<Scalar>>> mn;
    std::vector<std::pair<Scalar, Scalar>> cur;
    matchings(pairs, cur, [&](const std::vector<std::pair<Scalar, Scalar>>& m) {
      std::vector<std::pair<std::vector<long long>, std::vector<Scalar>>> acc{{}};
      for (const auto& [x, y] : m) {
        std::vector<std::pair<std::vector<long long>, std::vector<Scalar>>> next;
        for (const auto& [mu, nu] : pair_options(x, y))
          for (auto a : acc) {
            a.first.push_back(mu);
            a.second.push_back(nu);
            next.push_back(std::move(a));
          }
        acc = std::move(next);
      }
      mn.insert(mn.end(), acc.begin(), acc.end());
    });

    std::size_t tk = kap.size();
    for (const auto& l : lambdas)
      for (const auto& psi : psis)
        for (const auto& [mu, nu] : mn)
          for (unsigned mask = 0; mask < (1u << tk); ++mask) {
            SpParams x;
            x.lambda_d = l;
            x.psi = psi;
            x.mu = mu;
            x.nu = nu;
            x.kappa = kap;
            for (std::size_t j = 0; j < tk; ++j) x.eps.push_back((mask >> j & 1u) ? -1 : 1);
            if (!validate(x).empty()) continue;
            x = canonicalize(x);
            found.emplace(render(x), x);
          }
  };
  assign(0);

  std::vector<SpParams> out;
  for (auto& [key, x] : found) {
    if (!(infchar_of(x) == target)) throw std::logic_error("enumeration produced wrong infinitesimal character: " + key);
    out.push_back(std::move(x));
  }
  return out;
}

Sp6Rows sp6_rows_at(const Scalar& beta) {
  auto tables = current_tables();
  const Table& table = tables->get(kSp6List);
  Bindings b{{"b", beta.normalized()}};
  Sp6Rows out;
  for (const auto& row : table.rows) {
    if (!row.cond.eval(b)) continue;
    SpParams x = std::get<SpParams>(instantiate(row.lhs, b));
    if (!validate(x).empty()) {
      ++out.dropped;
      continue;
    }
    out.rows.push_back({row.line, canonicalize(x), instantiate_uktypes(row.lkt, b)});
  }
  return out;
}

namespace {

std::string render_set(const std::vector<UKType>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out + "}";
}

}  // namespace

VerificationReport regenerate_appendix_c(const Scalar& beta) {
  VerificationReport rep;
  std::string tag = is_generic(beta) ? "generic" : to_string(beta.normalized());
  rep.suite = "appendixC@" + tag;
  InfChar target = canonical_infchar({beta, Scalar(0), Scalar(1)});

  Sp6Rows expected;
  try {
    expected = sp6_rows_at(beta);
  } catch (const std::exception& e) {
    rep.add("instantiate", false, e.what());
    return rep;
  }
  // Rows that coincide at this beta must agree on the lowest K-types.
  std::map<std::string, std::pair<int, std::vector<UKType>>> want;
  for (const auto& r : expected.rows) {
    std::string key = render(r.params);
    auto [it, fresh] = want.emplace(key, std::make_pair(r.line, r.lkt));
    if (!fresh && it->second.second != r.lkt)
      rep.add("line " + std::to_string(r.line), false,
              key + ": coincides with line " + std::to_string(it->second.first) + " but lowest K-types differ");
  }

  std::map<std::string, SpParams> got;
  for (auto& x : enumerate_sp_reps(3, target)) got.emplace(render(x), x);

  for (const auto& [key, w] : want) {
    std::string name = "line " + std::to_string(w.first);
    auto it = got.find(key);
    if (it == got.end()) {
      rep.add(name, false, "missing from enumeration: " + key);
      continue;
    }
    auto lkt = lowest_ktypes_sp(it->second);
    if (lkt != w.second)
      rep.add(name, false, key + ": table " + render_set(w.second) + ", computed " + render_set(lkt));
    else
      rep.add(name, true, key + " " + render_set(lkt));
  }
  for (const auto& [key, x] : got)
    if (!want.count(key)) rep.add("extra", false, "not in table: " + key + " " + render_set(lowest_ktypes_sp(x)));

  rep.counts.push_back({"table rows", static_cast<long long>(expected.rows.size())});
  rep.counts.push_back({"distinct rows", static_cast<long long>(want.size())});
  rep.counts.push_back({"dropped rows", expected.dropped});
  rep.counts.push_back({"enumerated", static_cast<long long>(got.size())});
  return rep;
}

std::vector<SpParams> verify_unique_by_invariants(int n, const InfChar& target, const std::vector<UKType>& lkt) {
  std::vector<UKType> want = lkt;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  std::vector<SpParams> out;
  for (auto& x : enumerate_sp_reps(n, target))
    if (lowest_ktypes_sp(x) == want) out.push_back(std::move(x));
  return out;
}

}  // namespace tl
