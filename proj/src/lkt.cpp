#include "thetalift/lkt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tl {

namespace {

struct LambdaBlocks {
  std::vector<long long> a;   // a_1 > a_2 > ... > 0
  std::vector<int> kk, ll;    // multiplicities
  int k = 0, l = 0, z = 0, zp = 0;
};

LambdaBlocks lambda_blocks(const std::vector<long long>& pos, const std::vector<long long>& neg, int z, int zp) {
  std::map<long long, std::pair<int, int>, std::greater<>> m;
  for (long long v : pos) ++m[v].first;
  for (long long v : neg) ++m[v].second;
  LambdaBlocks b;
  for (auto& [val, c] : m) {
    b.a.push_back(val);
    b.kk.push_back(c.first);
    b.ll.push_back(c.second);
    b.k += c.first;
    b.l += c.second;
  }
  b.z = z;
  b.zp = zp;
  return b;
}

// Group positive HalfInt values (left) and magnitudes (right) into blocks.
void fill_blocks(LktIntermediate& m, const std::vector<HalfInt>& left, const std::vector<HalfInt>& right,
                 const LambdaBlocks& lb) {
  std::map<HalfInt, std::pair<int, int>, std::greater<>> cnt;
  for (auto v : left)
    if (v.twice > 0) ++cnt[v].first;
  for (auto v : right)
    if (v.twice > 0) ++cnt[v].second;
  for (auto& [val, c] : cnt) {
    AlphaBlock b;
    b.alpha = val;
    b.u = c.first;
    b.r = c.second;
    for (std::size_t j = 0; j < lb.a.size(); ++j)
      if (val.is_integer() && val.twice / 2 == lb.a[j]) b.lambda_block = static_cast<int>(j) + 1;
    m.blocks.push_back(b);
    m.u += b.u;
    m.r += b.r;
  }
}

std::vector<HalfInt> halves_desc(std::vector<HalfInt> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Root make_root(int n, std::initializer_list<std::pair<int, int>> terms) {
  Root r{std::vector<int>(n, 0)};
  for (auto [idx, c] : terms) r.coeffs[idx] += c;
  return r;
}

}  // namespace

LktIntermediate lkt_intermediate(const SpParams& x) {
  LktIntermediate m;
  int v = x.v();
  std::vector<long long> pos, neg;
  int z = 0;
  for (long long c : x.lambda_d) {
    if (c > 0) pos.push_back(c);
    else if (c < 0) neg.push_back(-c);
    else ++z;
  }
  LambdaBlocks lb = lambda_blocks(pos, neg, z, 0);
  m.k = lb.k;
  m.l = lb.l;
  m.z = z;

  std::vector<HalfInt> all;
  for (long long c : x.lambda_d) all.push_back(HalfInt::from_int(c));
  for (long long mu : x.mu) {
    all.push_back(HalfInt::half(mu));
    all.push_back(HalfInt::half(-mu));
  }
  for (int i = 0; i < x.t(); ++i) all.push_back(HalfInt{});
  m.lambda_a = halves_desc(all);

  std::vector<HalfInt> left, right;
  for (auto h : m.lambda_a) {
    if (h.twice > 0) left.push_back(h);
    else if (h.twice < 0) right.push_back(-h);
    else ++m.w;
  }
  fill_blocks(m, left, right, lb);

  int run = 0;
  for (auto& b : m.blocks) {
    HalfInt shift = HalfInt::half(b.u - b.r) + HalfInt::from_int(run);
    b.beta = b.alpha + HalfInt::half(1) + shift;
    b.gamma = -b.alpha - HalfInt::half(1) + shift;
    run += b.u - b.r;
    if (b.beta.is_integer()) {
      b.delta_twice = {0};
    } else if (b.lambda_block == 0) {
      b.delta_twice = {1, -1};
    } else {
      int j = b.lambda_block;
      int kt_prev = 0, lt = 0;
      for (int i = 0; i < j - 1; ++i) kt_prev += lb.kk[i];
      for (int i = 0; i < j; ++i) lt += lb.ll[i];
      // e_{k~_{j-1}+1} + e_{v-l~_j+1}
      Root root = make_root(v, {{kt_prev, 1}, {v - lt, 1}});
      b.delta_twice = {x.psi.contains(root) ? 1 : -1};
    }
  }

  int want = (m.u - m.r + 1) % 2 == 0 ? 1 : -1;
  m.h = static_cast<int>(std::count(x.eps.begin(), x.eps.end(), want));
  m.h += static_cast<int>(std::count(x.mu.begin(), x.mu.end(), 0LL));
  m.h += (z + 1) / 2;
  if (m.z == 0) {
    m.eta_first = m.eta_second = true;
  } else {
    Root root = make_root(v, {{m.k, 1}, {m.k + m.z - 1, 1}});
    m.eta_first = x.psi.contains(root);
    m.eta_second = !m.eta_first;
  }
  return m;
}

LktIntermediate lkt_intermediate(const OParams& x) {
  LktIntermediate m;
  m.orthogonal = true;
  std::vector<long long> pos, neg;
  int z = 0, zp = 0;
  for (long long c : x.lambda_l) c > 0 ? pos.push_back(c) : void(++z);
  for (long long c : x.lambda_r) c > 0 ? neg.push_back(c) : void(++zp);
  LambdaBlocks lb = lambda_blocks(pos, neg, z, zp);
  m.k = lb.k;
  m.l = lb.l;
  m.z = z;
  m.zp = zp;

  std::vector<HalfInt> left, right;
  for (long long c : x.lambda_l) left.push_back(HalfInt::from_int(c));
  for (long long c : x.lambda_r) right.push_back(HalfInt::from_int(c));
  for (long long mu : x.mu) {
    left.push_back(HalfInt::half(mu));
    right.push_back(HalfInt::half(mu));
  }
  for (int i = 0; i < x.t() / 2; ++i) {
    left.push_back(HalfInt{});
    right.push_back(HalfInt{});
  }
  m.lambda_a_l = halves_desc(left);
  m.lambda_a_r = halves_desc(right);
  for (auto h : m.lambda_a_l) m.x += h.twice == 0;
  for (auto h : m.lambda_a_r) m.y += h.twice == 0;
  fill_blocks(m, m.lambda_a_l, m.lambda_a_r, lb);

  // Shift by -p0+q0 with p0,q0 the half ranks of O(p)xO(q).
  int p0 = m.u + m.x, q0 = m.r + m.y;
  int run = 0;
  int a = x.a(), d = x.d(), n = a + d;
  for (auto& b : m.blocks) {
    HalfInt shift = HalfInt::from_int(q0 - p0) + HalfInt::half(b.u - b.r) + HalfInt::from_int(run);
    b.beta = b.alpha + HalfInt::half(1) + shift;
    b.gamma = -b.alpha - HalfInt::half(1) + shift;
    run += b.u - b.r;
    if (b.beta.is_integer()) {
      b.delta_twice = {0};
    } else if (b.lambda_block == 0) {
      b.delta_twice = {1, -1};
    } else {
      int j = b.lambda_block;
      int kt = 0, lt = 0;
      for (int i = 0; i < j; ++i) {
        kt += lb.kk[i];
        lt += lb.ll[i];
      }
      if (kt == 0 || lt == 0) throw std::logic_error("LKT-O: half-integral block without partner coordinates");
      // e_{k~_j} - f_{l~_j}
      Root root = make_root(n, {{kt - 1, 1}, {a + lt - 1, -1}});
      b.delta_twice = {x.psi.contains(root) ? 1 : -1};
    }
  }

  int plus = static_cast<int>(std::count(x.eps.begin(), x.eps.end(), 1));
  int minus = x.t() - plus;
  m.h = std::min(z, zp) + static_cast<int>(std::count(x.mu.begin(), x.mu.end(), 0LL)) + std::min(plus, minus);
  if (z + zp == 0) {
    m.eta_first = m.eta_second = true;
  } else if (a == 0 || d == 0) {
    // No e_a - f_d root: the ones can only sit where lambda_d has zeros.
    m.eta_first = a > 0;
    m.eta_second = !m.eta_first;
  } else {
    Root root = make_root(n, {{a - 1, 1}, {a + d - 1, -1}});
    m.eta_first = x.psi.contains(root);
    m.eta_second = !m.eta_first;
  }
  return m;
}

std::vector<HalfInt> lkt_base(const LktIntermediate& m) {
  std::vector<HalfInt> out;
  if (!m.orthogonal) {
    for (const auto& b : m.blocks)
      for (int i = 0; i < b.u; ++i) out.push_back(b.beta);
    for (int i = 0; i < m.w; ++i) out.push_back(HalfInt::from_int(m.u - m.r));
    for (auto it = m.blocks.rbegin(); it != m.blocks.rend(); ++it)
      for (int i = 0; i < it->r; ++i) out.push_back(it->gamma);
    return out;
  }
  for (const auto& b : m.blocks)
    for (int i = 0; i < b.u; ++i) out.push_back(b.beta);
  for (int i = 0; i < m.x; ++i) out.push_back(HalfInt{});
  for (const auto& b : m.blocks)
    for (int i = 0; i < b.r; ++i) out.push_back(-b.gamma);
  for (int i = 0; i < m.y; ++i) out.push_back(HalfInt{});
  return out;
}

namespace {

// Cartesian product over the independent delta choices.
std::vector<std::vector<int>> delta_choices(const LktIntermediate& m) {
  std::vector<std::vector<int>> acc{{}};
  for (const auto& b : m.blocks) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : acc)
      for (int d : b.delta_twice) {
        auto v = pre;
        v.push_back(d);
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  return acc;
}

long long to_int(HalfInt h) {
  if (!h.is_integer()) throw std::logic_error("lowest K-type has a half-integral entry");
  return h.twice / 2;
}

}  // namespace

std::vector<UKType> lowest_ktypes_sp(const SpParams& x) {
  LktIntermediate m = lkt_intermediate(x);
  if (m.h > m.w) throw std::logic_error("LKT-Sp: h exceeds the zero block");
  std::vector<HalfInt> base = lkt_base(m);
  std::set<UKType> out;
  for (const auto& deltas : delta_choices(m)) {
    for (int form = 0; form < 2; ++form) {
      if (form == 0 && !m.eta_first) continue;
      if (form == 1 && !m.eta_second) continue;
      std::vector<HalfInt> lam = base;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < m.blocks.size(); ++i)
        for (int c = 0; c < m.blocks[i].u; ++c) lam[pos++].twice += deltas[i];
      for (int c = 0; c < m.w; ++c) {
        int eta = form == 0 ? (c < m.h ? 1 : 0) : (c >= m.w - m.h ? -1 : 0);
        lam[pos++].twice += 2 * eta;
      }
      for (std::size_t i = m.blocks.size(); i-- > 0;)
        for (int c = 0; c < m.blocks[i].r; ++c) lam[pos++].twice += deltas[i];
      UKType t;
      for (auto h : lam) t.w.push_back(to_int(h));
      out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

std::vector<std::pair<int, int>> lkt_signs(const OParams& x, const LktIntermediate& m, const std::vector<long long>& L1,
                                          const std::vector<long long>& L2) {
  int plus = static_cast<int>(std::count(x.eps.begin(), x.eps.end(), 1));
  int minus = x.t() - plus;
  bool more_left = std::count(L1.begin(), L1.end(), 0LL) > std::count(L2.begin(), L2.end(), 0LL);
  bool zero_plus = false, zero_minus = false;
  for (int i = 0; i < x.t(); ++i)
    if (x.kappa[i].is_zero()) (x.eps[i] == 1 ? zero_plus : zero_minus) = true;
  int zt = x.zeta, xi = x.xi;
  if (m.z + m.zp == 0) {
    if (zero_plus) {
      if (plus >= minus) return {{zt, zt}};
      return {more_left ? std::pair{zt, -zt} : std::pair{-zt, zt}};
    }
    if (zero_minus) {
      if (plus >= minus) return {more_left ? std::pair{zt, zt} : std::pair{-zt, -zt}};
      return {{zt, -zt}};
    }
    if (plus >= minus) return {{1, 1}, {-1, -1}};
    return {{1, -1}, {-1, 1}};
  }
  if (plus >= minus) return {{xi, xi}};
  return {more_left ? std::pair{xi, -xi} : std::pair{-xi, xi}};
}

}  // namespace

std::vector<OKType> lowest_ktypes_o(const OParams& x) {
  LktIntermediate m = lkt_intermediate(x);
  std::vector<HalfInt> base = lkt_base(m);
  std::size_t nl = m.u + m.x;
  std::set<OKType> out;
  for (const auto& deltas : delta_choices(m)) {
    for (int form = 0; form < 2; ++form) {
      if (form == 0 && !m.eta_first) continue;
      if (form == 1 && !m.eta_second) continue;
      if (m.h > (form == 0 ? m.x : m.y)) throw std::logic_error("LKT-O: h exceeds the zero block");
      std::vector<HalfInt> lam = base;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < m.blocks.size(); ++i)
        for (int c = 0; c < m.blocks[i].u; ++c) lam[pos++].twice += deltas[i];
      for (int c = 0; c < m.x; ++c) lam[pos++].twice += (form == 0 && c < m.h) ? 2 : 0;
      for (std::size_t i = 0; i < m.blocks.size(); ++i)
        for (int c = 0; c < m.blocks[i].r; ++c) lam[pos++].twice -= deltas[i];
      for (int c = 0; c < m.y; ++c) lam[pos++].twice += (form == 1 && c < m.h) ? 2 : 0;
      std::vector<long long> L1, L2;
      for (std::size_t i = 0; i < lam.size(); ++i) (i < nl ? L1 : L2).push_back(to_int(lam[i]));
      for (auto [e, h] : lkt_signs(x, m, L1, L2)) {
        OKType t{OFactor{x.p, L1, e}, OFactor{x.q, L2, h}};
        check_oktype(t);
        out.insert(t.canonical());
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace tl
