#include "thetalift/roots.hpp"

#include "thetalift/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tl {

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

long long pairing(const Weight& w, const Root& r) {
  if (w.size() != r.coeffs.size()) throw std::invalid_argument("weight/root dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * r.coeffs[i];
  return s;
}

Root add(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

namespace {

Root unit(int n, int i, int ci, int j = -1, int cj = 0) {
  Root r{std::vector<int>(n, 0)};
  r.coeffs[i] = ci;
  if (j >= 0) r.coeffs[j] = cj;
  return r;
}

void pm_pairs(std::vector<Root>& out, int n, int i, int j) {
  for (int si : {1, -1})
    for (int sj : {1, -1}) out.push_back(unit(n, i, si, j, sj));
}

}  // namespace

std::vector<Root> all_roots(const GroupKind& kind) {
  std::vector<Root> out;
  int n = kind.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pm_pairs(out, n, i, j);
  if (kind.tag == GroupTag::Sp) {
    for (int i = 0; i < n; ++i) {
      out.push_back(unit(n, i, 2));
      out.push_back(unit(n, i, -2));
    }
  } else if (kind.tag == GroupTag::OOdd) {
    for (int i = 0; i < n; ++i) {
      out.push_back(unit(n, i, 1));
      out.push_back(unit(n, i, -1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_compact(const GroupKind& kind, const Root& r) {
  if (kind.tag == GroupTag::Sp) {
    int s = 0, nz = 0;
    for (int c : r.coeffs) {
      s += c;
      nz += c != 0;
    }
    return nz == 2 && s == 0;
  }
  bool has_e = false, has_f = false;
  for (int i = 0; i < kind.rank(); ++i) {
    if (r.coeffs[i] == 0) continue;
    (i < kind.a ? has_e : has_f) = true;
  }
  return !(has_e && has_f);
}

bool is_root(const GroupKind& kind, const Root& r) {
  auto all = all_roots(kind);
  return std::binary_search(all.begin(), all.end(), r);
}

std::vector<Root> compact_positive_roots(const GroupKind& kind) {
  std::vector<Root> out;
  int n = kind.rank();
  if (kind.tag == GroupTag::Sp) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(unit(n, i, 1, j, -1));
  } else {
    auto block = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) {
          out.push_back(unit(n, i, 1, j, 1));
          out.push_back(unit(n, i, 1, j, -1));
        }
    };
    block(0, kind.a);
    block(kind.a, n);
    if (kind.tag == GroupTag::OOdd)
      for (int i = 0; i < n; ++i) out.push_back(unit(n, i, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PositiveSystem::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

PositiveSystem make_positive_system(const GroupKind& kind, std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return PositiveSystem{kind, std::move(roots)};
}

std::vector<std::string> check_positive_system(const PositiveSystem& psi) {
  std::vector<std::string> bad;
  auto all = all_roots(psi.kind);
  for (const auto& r : psi.roots)
    if (!std::binary_search(all.begin(), all.end(), r)) {
      bad.push_back("not a root: " + root_to_string(psi.kind, r));
      return bad;
    }
  for (const auto& r : all)
    if (psi.contains(r) == psi.contains(-r)) {
      bad.push_back("exactly one of +-" + root_to_string(psi.kind, r) + " required");
      break;
    }
  for (const auto& x : psi.roots)
    for (const auto& y : psi.roots) {
      Root s = add(x, y);
      if (std::binary_search(all.begin(), all.end(), s) && !psi.contains(s)) {
        bad.push_back("not closed: " + root_to_string(psi.kind, s));
        goto closure_done;
      }
    }
closure_done:
  for (const auto& c : compact_positive_roots(psi.kind))
    if (!psi.contains(c)) {
      bad.push_back("missing compact root " + root_to_string(psi.kind, c));
      break;
    }
  return bad;
}

std::vector<Root> simple_roots(const PositiveSystem& psi) {
  std::vector<Root> out;
  for (const auto& r : psi.roots) {
    bool decomposable = false;
    for (const auto& x : psi.roots) {
      Root y = add(r, -x);
      if (psi.contains(y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(r);
  }
  return out;
}

std::vector<PositiveSystem> enumerate_positive_systems(const GroupKind& kind) {
  int n = kind.rank();
  if (n > kMaxEnumRank) throw std::invalid_argument("rank too large for enumeration");
  auto all = all_roots(kind);
  auto compact = compact_positive_roots(kind);
  std::set<std::vector<Root>> seen;
  // Positive systems are cut out by regular vectors; signed permutations of
  // (1..n) realize every chamber.
  std::vector<long long> vals(n);
  std::iota(vals.begin(), vals.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Weight x(n);
      for (int i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? -vals[i] : vals[i];
      bool ok = std::all_of(compact.begin(), compact.end(), [&](const Root& c) { return pairing(x, c) > 0; });
      if (!ok) continue;
      std::vector<Root> psi;
      for (const auto& r : all)
        if (pairing(x, r) > 0) psi.push_back(r);
      seen.insert(std::move(psi));
    }
  } while (std::next_permutation(vals.begin(), vals.end()));
  std::vector<PositiveSystem> out;
  for (const auto& s : seen) out.push_back(PositiveSystem{kind, s});
  return out;
}

bool check_dominance_F1(const Weight& lambda, const PositiveSystem& psi) {
  if (static_cast<int>(lambda.size()) != psi.kind.rank())
    throw std::invalid_argument("lambda length does not match rank");
  for (const auto& r : psi.roots)
    if (pairing(lambda, r) < 0) return false;
  for (const auto& r : simple_roots(psi))
    if (is_compact(psi.kind, r) && pairing(lambda, r) <= 0) return false;
  return true;
}

Weight two_rho_c(const GroupKind& kind) {
  Weight w(kind.rank(), 0);
  for (const auto& r : compact_positive_roots(kind))
    for (int i = 0; i < kind.rank(); ++i) w[i] += r.coeffs[i];
  return w;
}

std::string root_to_string(const GroupKind& kind, const Root& r) {
  std::string out;
  for (int i = 0; i < kind.rank(); ++i) {
    int c = r.coeffs[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    if (kind.is_o() && i >= kind.a)
      out += "f" + std::to_string(i - kind.a + 1);
    else
      out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Display order: by leading coordinate, then partner coordinate, with
// 2e_i / e_i (no partner) last within a leading coordinate.
std::vector<int> display_key(const Root& r) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i]) idx.push_back(static_cast<int>(i));
  int big = 1 << 20;
  int lead_sign = r.coeffs[idx[0]] > 0 ? 0 : 1;
  int i = idx[0], j = idx.size() > 1 ? idx[1] : big;
  int js = idx.size() > 1 ? (r.coeffs[idx[1]] > 0 ? 0 : 1) : 0;
  return {i, j, lead_sign, js};
}

}  // namespace

std::string psi_to_string(const PositiveSystem& psi) {
  auto roots = psi.roots;
  std::sort(roots.begin(), roots.end(),
            [](const Root& x, const Root& y) { return display_key(x) < display_key(y); });
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ",";
    out += root_to_string(psi.kind, roots[i]);
  }
  return out + "}";
}

namespace {

struct Cursor {
  std::string_view t;
  std::size_t pos = 0;
  void ws() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  }
  bool eat(std::string_view s) {
    ws();
    if (t.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }
};

// Sign marker: +, -, +- / ± (both).  Returns 0 if none.
int read_sign(Cursor& c) {
  if (c.eat("±") || c.eat("+-")) return 2;
  if (c.eat("+")) return 1;
  if (c.eat("-")) return -1;
  return 0;
}

}  // namespace

std::vector<Root> parse_roots(const GroupKind& kind, std::string_view text) {
  Cursor c{text};
  if (!c.eat("{")) throw ParseError("expected '{'", c.pos);
  std::vector<Root> out;
  if (c.eat("}")) return out;
  int n = kind.rank();
  while (true) {
    // A token is a sum of signed terms; each term may carry a +- marker.
    std::vector<std::vector<int>> variants{std::vector<int>(n, 0)};
    bool first = true;
    while (true) {
      std::size_t at = c.pos;
      int sign = read_sign(c);
      if (sign == 0) {
        if (!first) break;
        sign = 1;
      }
      c.ws();
      int mag = 1;
      if (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) {
        mag = 0;
        while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos])))
          mag = mag * 10 + (text[c.pos++] - '0');
      }
      if (c.pos >= text.size() || (text[c.pos] != 'e' && text[c.pos] != 'f'))
        throw ParseError("expected e or f in root", c.pos);
      char letter = text[c.pos++];
      int idx = 0;
      std::size_t dstart = c.pos;
      while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos])))
        idx = idx * 10 + (text[c.pos++] - '0');
      if (c.pos == dstart || idx < 1) throw ParseError("expected coordinate index", dstart);
      int coord;
      if (letter == 'e') {
        coord = idx - 1;
        if (coord >= (kind.is_o() ? kind.a : n)) throw ParseError("coordinate out of range", at);
      } else {
        if (!kind.is_o() || idx > kind.d) throw ParseError("coordinate out of range", at);
        coord = kind.a + idx - 1;
      }
      std::vector<std::vector<int>> next;
      for (auto& v : variants) {
        for (int s : sign == 2 ? std::vector<int>{1, -1} : std::vector<int>{sign}) {
          auto w = v;
          w[coord] += s * mag;
          next.push_back(std::move(w));
        }
      }
      variants = std::move(next);
      first = false;
      c.ws();
      if (c.pos >= text.size() || text[c.pos] == ',' || text[c.pos] == '}') break;
    }
    for (auto& v : variants) {
      Root r{v};
      if (!is_root(kind, r)) throw ParseError("not a root of the group", c.pos);
      out.push_back(r);
    }
    if (c.eat("}")) break;
    if (!c.eat(",")) throw ParseError("expected ',' or '}'", c.pos);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Root map_root(const Root& r, const std::vector<int>& target, const std::vector<int>& sign) {
  Root out{std::vector<int>(r.coeffs.size(), 0)};
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out.coeffs[target[i]] += sign[i] * r.coeffs[i];
  return out;
}

}  // namespace tl
