#include "thetalift/ktypes.hpp"

#include "thetalift/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tl {

int OFactor::nonzero() const {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](long long v) { return v != 0; }));
}

OFactor OFactor::canonical() const {
  OFactor f = *this;
  if (p % 2 == 0 && 2 * nonzero() == p) f.sign = 1;
  return f;
}

OKType make_oktype(int p, int q, std::vector<long long> left, int eps, std::vector<long long> right, int eta) {
  OKType t{OFactor{p, std::move(left), eps}, OFactor{q, std::move(right), eta}};
  check_oktype(t);
  return t.canonical();
}

namespace {

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

struct Reader {
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
  void expect(std::string_view s) {
    if (!eat(s)) throw ParseError("expected '" + std::string(s) + "'", pos);
  }
  long long integer() {
    ws();
    int sign = 1;
    if (eat("+")) {
    } else if (eat("-")) {
      sign = -1;
    }
    ws();
    std::size_t start = pos;
    long long v = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) v = v * 10 + (t[pos++] - '0');
    if (pos == start) throw ParseError("expected integer", start);
    return sign * v;
  }
  void end() {
    ws();
    if (pos != t.size()) throw ParseError("trailing characters", pos);
  }
};

OFactor read_factor(Reader& r, int p) {
  r.expect("(");
  OFactor f{p, {}, 1};
  if (!r.eat(";")) {
    do f.a.push_back(r.integer());
    while (r.eat(","));
    r.expect(";");
  }
  f.sign = static_cast<int>(r.integer());
  r.expect(")");
  return f;
}

}  // namespace

std::string to_string(const UKType& t) { return "(" + join(t.w) + ")"; }

std::string to_string(const OFactor& f) {
  return "(" + join(f.a) + ";" + (f.sign > 0 ? "+1" : "-1") + ")";
}

std::string to_string(const OKType& t) { return to_string(t.left) + "x" + to_string(t.right); }

UKType parse_uktype(std::string_view text) {
  Reader r{text};
  r.expect("(");
  UKType t;
  if (!r.eat(")")) {
    do t.w.push_back(r.integer());
    while (r.eat(","));
    r.expect(")");
  }
  r.end();
  check_uktype(t);
  return t;
}

OKType parse_oktype(std::string_view text, int p, int q) {
  Reader r{text};
  OKType t;
  t.left = read_factor(r, p);
  if (!r.eat("x") && !r.eat("⊗")) throw ParseError("expected 'x' between factors", r.pos);
  t.right = read_factor(r, q);
  r.end();
  check_oktype(t);
  return t.canonical();
}

void check_uktype(const UKType& t) {
  if (!std::is_sorted(t.w.rbegin(), t.w.rend())) throw std::invalid_argument("U(n)-type must be weakly decreasing");
}

namespace {

void check_factor(const OFactor& f) {
  if (static_cast<int>(f.a.size()) != f.p / 2)
    throw std::invalid_argument("O(" + std::to_string(f.p) + ")-type needs " + std::to_string(f.p / 2) + " entries");
  if (!std::is_sorted(f.a.rbegin(), f.a.rend())) throw std::invalid_argument("O-type entries must be weakly decreasing");
  if (!f.a.empty() && f.a.back() < 0) throw std::invalid_argument("O-type entries must be nonnegative");
  if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace

void check_oktype(const OKType& t) {
  check_factor(t.left);
  check_factor(t.right);
}

long long ktype_norm(const UKType& t) {
  long long n = static_cast<long long>(t.w.size()), s = 0;
  for (long long i = 1; i <= n; ++i) {
    long long v = t.w[i - 1] + n + 1 - 2 * i;
    s += v * v;
  }
  return s;
}

long long ktype_norm(const OKType& t) {
  long long s = 0;
  for (const OFactor* f : {&t.left, &t.right})
    for (std::size_t i = 1; i <= f->a.size(); ++i) {
      long long v = f->a[i - 1] + f->p - 2 * static_cast<long long>(i);
      s += v * v;
    }
  return s;
}

UKType u_from_o(const OFactor& sigma) {
  check_factor(sigma);
  OFactor f = sigma.canonical();
  int x = f.nonzero();
  UKType out;
  for (int i = 0; i < x; ++i) out.w.push_back(f.a[i]);
  if (f.sign < 0)
    for (int i = 0; i < f.p - 2 * x; ++i) out.w.push_back(1);
  out.w.resize(f.p, 0);
  return out;
}

OFactor o_from_u(const UKType& lambda, int p) {
  if (static_cast<int>(lambda.w.size()) != p) throw std::invalid_argument("U(p) weight has wrong length");
  check_uktype(lambda);
  if (!lambda.w.empty() && lambda.w.back() < 0) throw std::invalid_argument("weight has negative entries");
  int r = 0, s = 0;
  for (long long v : lambda.w) {
    if (v >= 2) ++r;
    else if (v == 1) ++s;
  }
  if (2 * r + s > p) throw std::invalid_argument("weight not of the form (b..>=2, 1^s, 0..) with 2r+s<=p");
  OFactor f{p, {}, 1};
  for (int i = 0; i < r; ++i) f.a.push_back(lambda.w[i]);
  if (2 * (r + s) <= p) {
    for (int i = 0; i < s; ++i) f.a.push_back(1);
  } else {
    f.sign = -1;
    for (int i = 0; i < p - 2 * r - s; ++i) f.a.push_back(1);
  }
  f.a.resize(p / 2, 0);
  return f.canonical();
}

long long degree_o(const OKType& sigma) {
  long long d = 0;
  for (const OFactor* f : {&sigma.left, &sigma.right}) {
    OFactor c = f->canonical();
    for (long long v : c.a) d += v;
    if (c.sign < 0) d += c.p - 2 * c.nonzero();
  }
  return d;
}

long long degree_u(const UKType& sigma_prime, long long p_minus_q) {
  if (p_minus_q % 2) throw std::invalid_argument("p-q must be even");
  long long d = 0;
  for (long long v : sigma_prime.w) d += std::llabs(v - p_minus_q / 2);
  return d;
}

long long occurrence_bound(const OKType& sigma) {
  OKType c = sigma.canonical();
  long long x = c.left.nonzero(), y = c.right.nonzero();
  long long need = x + y;
  if (c.left.sign < 0) need += c.left.p - 2 * x;
  if (c.right.sign < 0) need += c.right.p - 2 * y;
  return need;
}

std::optional<UKType> phi_n(const OKType& sigma, int n) {
  check_oktype(sigma);
  OKType c = sigma.canonical();
  if (n < occurrence_bound(c)) return std::nullopt;
  long long shift = (c.p() - c.q()) / 2;
  int x = c.left.nonzero(), y = c.right.nonzero();
  std::vector<long long> head, tail;
  for (int i = 0; i < x; ++i) head.push_back(c.left.a[i]);
  if (c.left.sign < 0)
    for (int i = 0; i < c.p() - 2 * x; ++i) head.push_back(1);
  if (c.right.sign < 0)
    for (int i = 0; i < c.q() - 2 * y; ++i) tail.push_back(-1);
  for (int i = y - 1; i >= 0; --i) tail.push_back(-c.right.a[i]);
  UKType out;
  out.w = head;
  out.w.resize(n - tail.size(), 0);
  out.w.insert(out.w.end(), tail.begin(), tail.end());
  for (auto& v : out.w) v += shift;
  return out;
}

std::optional<OKType> phi_pq(const UKType& sigma_prime, int p, int q) {
  if ((p + q) % 2) throw std::invalid_argument("p+q must be even");
  check_uktype(sigma_prime);
  long long shift = (p - q) / 2;
  int big_pos = 0, one_pos = 0, big_neg = 0, one_neg = 0;
  std::vector<long long> pos, neg;
  for (long long v : sigma_prime.w) {
    long long c = v - shift;
    if (c >= 2) ++big_pos;
    if (c == 1) ++one_pos;
    if (c <= -2) ++big_neg;
    if (c == -1) ++one_neg;
    if (c > 0) pos.push_back(c);
    if (c < 0) neg.push_back(-c);
  }
  if (2 * big_pos + one_pos > p || 2 * big_neg + one_neg > q) return std::nullopt;
  std::reverse(neg.begin(), neg.end());
  pos.resize(p, 0);
  neg.resize(q, 0);
  return OKType{o_from_u(UKType{pos}, p), o_from_u(UKType{neg}, q)};
}

namespace {

OFactor grow(const OFactor& f) {
  OFactor c = f.canonical();
  int x = c.nonzero();
  OFactor out{c.p + 1, {}, c.sign};
  out.a.assign(c.a.begin(), c.a.begin() + x);
  if (c.sign < 0) out.a.push_back(1);
  out.a.resize((c.p + 1) / 2, 0);
  return out.canonical();
}

}  // namespace

OKType sigma_one_one(const OKType& sigma) {
  check_oktype(sigma);
  return {grow(sigma.left), grow(sigma.right)};
}

UKType sigma_prime_add(const UKType& sigma_prime, long long half_diff) {
  UKType out = sigma_prime;
  auto it = std::find_if(out.w.begin(), out.w.end(), [&](long long v) { return v < half_diff; });
  out.w.insert(it, half_diff);
  return out;
}

}  // namespace tl
