#include "thetalift/notation.hpp"

#include <cctype>

namespace tl {

namespace {

template <class T, class F>
std::string tuple_or_zero(const std::vector<T>& v, F fmt) {
  if (v.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt(v[i]);
  }
  return out + ")";
}

std::string ints(const std::vector<long long>& v) {
  return tuple_or_zero(v, [](long long x) { return std::to_string(x); });
}

std::string scalars(const std::vector<Scalar>& v) {
  return tuple_or_zero(v, [](const Scalar& x) { return to_string(x); });
}

std::string signs(const std::vector<int>& v) {
  return tuple_or_zero(v, [](int x) { return std::to_string(x); });
}

std::string join_plain(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string render(const SpParams& x) {
  return "pi(" + ints(x.lambda_d) + "," + psi_to_string(x.psi) + "," + ints(x.mu) + "," + scalars(x.nu) + "," +
         signs(x.eps) + "," + scalars(x.kappa) + ")";
}

std::string render(const OParams& x) {
  std::string lam = x.lambda_l.empty() && x.lambda_r.empty()
                        ? "0"
                        : "(" + join_plain(x.lambda_l) + ";" + join_plain(x.lambda_r) + ")";
  return "pi_{" + std::to_string(x.zeta) + "}(" + lam + "," + std::to_string(x.xi) + "," + psi_to_string(x.psi) +
         "," + ints(x.mu) + "," + scalars(x.nu) + "," + signs(x.eps) + "," + scalars(x.kappa) + ") @ O(" +
         std::to_string(x.p) + "," + std::to_string(x.q) + ")";
}

std::string render(const AnyParams& x) {
  return std::visit([](const auto& y) { return render(y); }, x);
}

namespace {

struct Parser {
  std::string_view t;
  std::size_t pos = 0;

  void ws() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  }
  bool peek(std::string_view s) {
    ws();
    return t.substr(pos, s.size()) == s;
  }
  bool eat(std::string_view s) {
    if (!peek(s)) return false;
    pos += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!eat(s)) throw ParseError("expected '" + std::string(s) + "'", pos);
  }
  long long integer() {
    ws();
    std::size_t start = pos;
    Scalar s = parse_scalar_at(t, pos);
    if (!s.is_integer()) throw ParseError("expected integer", start);
    return s.as_int();
  }
  int sign() {
    std::size_t start = pos;
    long long v = integer();
    if (v != 1 && v != -1) throw ParseError("expected 1 or -1", start);
    return static_cast<int>(v);
  }
  // "0" (absent) or "(x,...)".
  template <class F>
  auto block(F item) -> std::vector<decltype(item())> {
    std::vector<decltype(item())> out;
    if (eat("(")) {
      if (eat(")")) return out;
      do out.push_back(item());
      while (eat(","));
      expect(")");
      return out;
    }
    std::size_t start = pos;
    if (integer() != 0) throw ParseError("expected '0' or '('", start);
    return out;
  }
  std::string_view braces() {
    ws();
    if (eat("∅")) return "{}";
    std::size_t start = pos;
    if (pos >= t.size() || t[pos] != '{') throw ParseError("expected '{'", pos);
    std::size_t end = t.find('}', pos);
    if (end == std::string_view::npos) throw ParseError("unterminated '{'", start);
    pos = end + 1;
    return t.substr(start, end + 1 - start);
  }
  PositiveSystem psi(const GroupKind& kind) {
    std::size_t start = pos;
    auto text = braces();
    try {
      return make_positive_system(kind, parse_roots(kind, text));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in root set: ") + e.what(), start);
    }
  }
  void head() {
    if (!eat("pi") && !eat("π")) throw ParseError("expected 'pi'", pos);
  }
  void end() {
    ws();
    if (pos != t.size()) throw ParseError("trailing characters", pos);
  }
};

void gl_tail(Parser& P, std::vector<long long>& mu, std::vector<Scalar>& nu, std::vector<int>& eps,
             std::vector<Scalar>& kappa) {
  P.expect(",");
  mu = P.block([&] {
    std::size_t start = P.pos;
    long long m = P.integer();
    if (m < 0) throw ParseError("mu entries must be nonnegative", start);
    return m;
  });
  P.expect(",");
  nu = P.block([&] { return parse_scalar_at(P.t, P.pos); });
  P.expect(",");
  eps = P.block([&] { return P.sign(); });
  P.expect(",");
  kappa = P.block([&] { return parse_scalar_at(P.t, P.pos); });
  P.expect(")");
  if (mu.size() != nu.size()) throw ParseError("mu and nu have different lengths", P.pos);
  if (eps.size() != kappa.size()) throw ParseError("eps and kappa have different lengths", P.pos);
}

}  // namespace

SpParams parse_sp(std::string_view text) {
  Parser P{text};
  P.head();
  P.expect("(");
  SpParams x;
  x.lambda_d = P.block([&] { return P.integer(); });
  P.expect(",");
  x.psi = P.psi(GroupKind::sp(x.v()));
  gl_tail(P, x.mu, x.nu, x.eps, x.kappa);
  P.end();
  return x;
}

OParams parse_o(std::string_view text) {
  Parser P{text};
  P.head();
  OParams x;
  P.expect("_");
  if (P.eat("{")) {
    x.zeta = P.sign();
    P.expect("}");
  } else {
    x.zeta = P.sign();
  }
  P.expect("(");
  if (P.eat("(")) {
    auto half = [&](std::vector<long long>& out, std::string_view stop) {
      if (P.peek(stop)) return;
      do out.push_back(P.integer());
      while (P.eat(","));
    };
    half(x.lambda_l, ";");
    P.expect(";");
    half(x.lambda_r, ")");
    P.expect(")");
  } else {
    std::size_t start = P.pos;
    if (P.integer() != 0) throw ParseError("expected '0' or '('", start);
  }
  P.expect(",");
  x.xi = P.sign();
  P.expect(",");
  x.psi = P.psi(GroupKind::o_even(x.a(), x.d()));
  gl_tail(P, x.mu, x.nu, x.eps, x.kappa);
  P.expect("@");
  P.expect("O");
  P.expect("(");
  x.p = static_cast<int>(P.integer());
  P.expect(",");
  x.q = static_cast<int>(P.integer());
  P.expect(")");
  P.end();
  return x;
}

AnyParams parse_params(std::string_view text) {
  Parser P{text};
  P.head();
  if (P.peek("_")) return parse_o(text);
  return parse_sp(text);
}

}  // namespace tl
