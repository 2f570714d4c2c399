#include "thetalift/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tl {

// ---- expressions ---------------------------------------------------------

struct Expr::Node {
  enum Kind { Num, Imag, Var, Neg, Add, Sub, Mul, Div } kind;
  Scalar value;
  std::string name;
  std::shared_ptr<const Node> l, r;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

NodeP make(Expr::Node::Kind k, NodeP l = nullptr, NodeP r = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}

struct ExprParser {
  std::string_view t;
  std::size_t pos = 0;

  void ws() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < t.size() && t[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  NodeP expr() {
    NodeP x = term();
    while (true) {
      if (eat('+')) x = make(Expr::Node::Add, x, term());
      else if (eat('-')) x = make(Expr::Node::Sub, x, term());
      else return x;
    }
  }
  NodeP term() {
    NodeP x = unary();
    while (true) {
      if (eat('*')) x = make(Expr::Node::Mul, x, unary());
      else if (eat('/')) x = make(Expr::Node::Div, x, unary());
      else return x;
    }
  }
  NodeP unary() {
    if (eat('-')) return make(Expr::Node::Neg, unary());
    if (eat('+')) return unary();
    return atom();
  }
  NodeP atom() {
    ws();
    if (pos >= t.size()) throw ParseError("unexpected end of expression", pos);
    if (eat('(')) {
      NodeP x = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return x;
    }
    char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) v = v * 10 + (t[pos++] - '0');
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Num;
      n->value = Scalar(v);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < t.size() && (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_')) ++pos;
      std::string name(t.substr(start, pos - start));
      auto n = std::make_shared<Expr::Node>();
      if (name == "i") {
        n->kind = Expr::Node::Imag;
        n->value = Scalar(Rational(0), Rational(1));
      } else {
        n->kind = Expr::Node::Var;
        n->name = name;
      }
      return n;
    }
    throw ParseError(std::string("unexpected '") + c + "' in expression", pos);
  }
};

Scalar eval_node(const Expr::Node& n, const Bindings& b) {
  switch (n.kind) {
    case Expr::Node::Num:
    case Expr::Node::Imag:
      return n.value;
    case Expr::Node::Var: {
      auto it = b.find(n.name);
      if (it == b.end()) throw std::out_of_range("unbound variable '" + n.name + "'");
      return it->second;
    }
    case Expr::Node::Neg:
      return -eval_node(*n.l, b);
    case Expr::Node::Add:
      return eval_node(*n.l, b) + eval_node(*n.r, b);
    case Expr::Node::Sub:
      return eval_node(*n.l, b) - eval_node(*n.r, b);
    case Expr::Node::Mul:
      return eval_node(*n.l, b) * eval_node(*n.r, b);
    case Expr::Node::Div:
      return eval_node(*n.l, b) / eval_node(*n.r, b);
  }
  throw std::logic_error("bad expression node");
}

void vars_of(const Expr::Node& n, std::set<std::string>& out) {
  if (n.kind == Expr::Node::Var) out.insert(n.name);
  if (n.l) vars_of(*n.l, out);
  if (n.r) vars_of(*n.r, out);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Split at `sep` outside (), {} nesting.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{') ++depth;
    else if (c == ')' || c == '}') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  ExprParser p{text};
  Expr e;
  e.root_ = p.expr();
  p.ws();
  if (p.pos != text.size()) throw ParseError("trailing characters in expression '" + std::string(text) + "'", p.pos);
  e.text_ = trim(text);
  return e;
}

Expr Expr::constant(const Scalar& s) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Num;
  n->value = s;
  Expr e;
  e.root_ = n;
  e.text_ = to_string(s);
  return e;
}

Scalar Expr::eval(const Bindings& b) const {
  if (!root_) throw std::logic_error("empty expression");
  return eval_node(*root_, b);
}

std::optional<std::string> Expr::bare_variable() const {
  if (root_ && root_->kind == Node::Var) return root_->name;
  return std::nullopt;
}

void Expr::collect_vars(std::set<std::string>& out) const {
  if (root_) vars_of(*root_, out);
}

// ---- conditions ----------------------------------------------------------

struct Condition::Atom {
  enum Kind { Eq, Ne, Ge, Gt, Le, Lt, Int, Even, Odd, Real } kind;
  bool negate = false;
  Expr l, r;
};

namespace {

bool eval_atom(const Condition::Atom& a, const Bindings& b) {
  bool v = false;
  Scalar x = a.l.eval(b);
  switch (a.kind) {
    case Condition::Atom::Int: v = x.is_integer(); break;
    case Condition::Atom::Even: v = x.is_integer() && x.as_int() % 2 == 0; break;
    case Condition::Atom::Odd: v = x.is_integer() && x.as_int() % 2 != 0; break;
    case Condition::Atom::Real: v = x.is_real(); break;
    default: {
      Scalar y = a.r.eval(b);
      if (a.kind == Condition::Atom::Eq) v = x == y;
      else if (a.kind == Condition::Atom::Ne) v = x != y;
      else if (!x.is_real() || !y.is_real()) v = false;
      else if (a.kind == Condition::Atom::Ge) v = x.re >= y.re;
      else if (a.kind == Condition::Atom::Gt) v = x.re > y.re;
      else if (a.kind == Condition::Atom::Le) v = x.re <= y.re;
      else v = x.re < y.re;
    }
  }
  return a.negate ? !v : v;
}

std::shared_ptr<const Condition::Atom> parse_atom(std::string text) {
  auto a = std::make_shared<Condition::Atom>();
  std::string s = trim(text);
  if (!s.empty() && s[0] == '!' && (s.size() < 2 || s[1] != '=')) {
    a->negate = true;
    s = trim(s.substr(1));
  }
  static const std::pair<const char*, Condition::Atom::Kind> preds[] = {
      {"int(", Condition::Atom::Int}, {"even(", Condition::Atom::Even},
      {"odd(", Condition::Atom::Odd}, {"real(", Condition::Atom::Real}};
  for (auto& [name, kind] : preds) {
    std::string_view n(name);
    if (s.compare(0, n.size(), n) == 0 && s.back() == ')') {
      a->kind = kind;
      a->l = Expr::parse(std::string_view(s).substr(n.size(), s.size() - n.size() - 1));
      return a;
    }
  }
  if (a->negate) throw ParseError("'!' applies only to predicates: " + text, 0);
  static const std::pair<const char*, Condition::Atom::Kind> ops[] = {
      {"!=", Condition::Atom::Ne}, {">=", Condition::Atom::Ge}, {"<=", Condition::Atom::Le},
      {"=", Condition::Atom::Eq},  {">", Condition::Atom::Gt},  {"<", Condition::Atom::Lt}};
  for (auto& [op, kind] : ops) {
    std::size_t at = s.find(op);
    if (at == std::string::npos) continue;
    a->kind = kind;
    a->l = Expr::parse(std::string_view(s).substr(0, at));
    a->r = Expr::parse(std::string_view(s).substr(at + std::string_view(op).size()));
    return a;
  }
  throw ParseError("cannot read condition atom '" + s + "'", 0);
}

}  // namespace

Condition Condition::parse(std::string_view text) {
  Condition c;
  c.text_ = trim(text);
  if (c.text_.empty()) return c;
  for (const auto& clause : split_top(c.text_, ',')) {
    std::vector<std::shared_ptr<const Atom>> alts;
    for (const auto& alt : split_top(clause, '|')) alts.push_back(parse_atom(alt));
    c.clauses_.push_back(std::move(alts));
  }
  return c;
}

bool Condition::eval(const Bindings& b) const {
  for (const auto& clause : clauses_) {
    bool any = false;
    for (const auto& a : clause)
      if (eval_atom(*a, b)) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

void Condition::collect_vars(std::set<std::string>& out) const {
  for (const auto& clause : clauses_)
    for (const auto& a : clause) {
      a->l.collect_vars(out);
      if (!a->r.empty()) a->r.collect_vars(out);
    }
}

// ---- parameter patterns --------------------------------------------------

namespace {

std::vector<Expr> parse_tuple(const std::string& field) {
  if (field == "0") return {};
  if (field.size() < 2 || field.front() != '(' || field.back() != ')')
    throw ParseError("expected 0 or (...) but got '" + field + "'", 0);
  std::string inner = field.substr(1, field.size() - 2);
  std::vector<Expr> out;
  if (trim(inner).empty()) return out;
  for (const auto& part : split_top(inner, ',')) out.push_back(Expr::parse(part));
  return out;
}

std::vector<Expr> parse_plain_list(const std::string& s) {
  std::vector<Expr> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split_top(s, ',')) out.push_back(Expr::parse(part));
  return out;
}

std::string eval_list(const std::vector<Expr>& v, const Bindings& b, bool integral) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Scalar x = v[i].eval(b);
    if (integral && !x.is_integer())
      throw std::domain_error("slot '" + v[i].text() + "' is not an integer: " + to_string(x));
    if (i) out += ",";
    out += to_string(x);
  }
  return out;
}

std::string eval_tuple(const std::vector<Expr>& v, const Bindings& b, bool integral) {
  if (v.empty()) return "0";
  return "(" + eval_list(v, b, integral) + ")";
}

void bind(Bindings& b, const Expr& e, const Scalar& value) {
  if (auto name = e.bare_variable(); name && !b.count(*name)) b[*name] = value;
}

void bind_all(Bindings& b, const std::vector<Expr>& pat, const std::vector<Scalar>& values) {
  for (std::size_t i = 0; i < pat.size(); ++i) bind(b, pat[i], values[i]);
}

template <class T>
std::vector<Scalar> as_scalars(const std::vector<T>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(Scalar(static_cast<long long>(x)));
  return out;
}

template <class T>
std::vector<T> permuted(const std::vector<T>& v, const std::vector<int>& perm) {
  std::vector<T> out;
  for (int i : perm) out.push_back(v[i]);
  return out;
}

}  // namespace

ParamPattern parse_pattern(std::string_view text) {
  ParamPattern pat;
  pat.text = trim(text);
  std::string_view s = pat.text;
  std::size_t pos = 0;
  if (s.substr(0, 3) == "pi_") {
    pat.orthogonal = true;
    pos = 3;
    std::string z;
    if (pos < s.size() && s[pos] == '{') {
      std::size_t close = s.find('}', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated pi_{", pos);
      z = std::string(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else {
      std::size_t open = s.find('(', pos);
      if (open == std::string_view::npos) throw ParseError("expected '('", pos);
      z = std::string(s.substr(pos, open - pos));
      pos = open;
    }
    pat.zeta = Expr::parse(z);
  } else if (s.substr(0, 2) == "pi") {
    pos = 2;
  } else {
    throw ParseError("pattern must start with pi", 0);
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '('", pos);
  int depth = 0;
  std::size_t close = pos;
  for (; close < s.size(); ++close) {
    if (s[close] == '(' || s[close] == '{') ++depth;
    else if (s[close] == ')' || s[close] == '}') {
      if (--depth == 0) break;
    }
  }
  if (close >= s.size()) throw ParseError("unbalanced parentheses", pos);
  auto fields = split_top(s.substr(pos + 1, close - pos - 1), ',');
  std::string tail = trim(s.substr(close + 1));

  std::size_t f = 0;
  auto need = [&](std::size_t count) {
    if (fields.size() != count)
      throw ParseError("expected " + std::to_string(count) + " fields, got " + std::to_string(fields.size()), pos);
  };
  if (pat.orthogonal) {
    need(7);
    const std::string& lam = fields[f++];
    if (lam != "0") {
      if (lam.size() < 2 || lam.front() != '(' || lam.back() != ')') throw ParseError("bad O lambda '" + lam + "'", pos);
      std::string inner = lam.substr(1, lam.size() - 2);
      std::size_t semi = inner.find(';');
      if (semi == std::string::npos) throw ParseError("O lambda needs ';'", pos);
      pat.lambda_l = parse_plain_list(inner.substr(0, semi));
      pat.lambda_r = parse_plain_list(inner.substr(semi + 1));
    }
    pat.xi = Expr::parse(fields[f++]);
  } else {
    need(6);
    pat.lambda_d = parse_tuple(fields[f++]);
  }
  pat.psi = fields[f++];
  if (pat.psi.empty() || pat.psi.front() != '{') throw ParseError("expected root set, got '" + pat.psi + "'", pos);
  pat.mu = parse_tuple(fields[f++]);
  pat.nu = parse_tuple(fields[f++]);
  pat.eps = parse_tuple(fields[f++]);
  pat.kappa = parse_tuple(fields[f++]);
  if (pat.mu.size() != pat.nu.size() || pat.eps.size() != pat.kappa.size())
    throw ParseError("paired blocks differ in length", pos);

  if (pat.orthogonal) {
    // "@ O(p,q)"
    std::string t = tail;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            t.end());
    if (t.size() < 6 || t.substr(0, 3) != "@O(" || t.back() != ')') throw ParseError("expected '@ O(p,q)'", close + 1);
    auto pq = split_top(t.substr(3, t.size() - 4), ',');
    if (pq.size() != 2) throw ParseError("expected O(p,q)", close + 1);
    pat.p = std::stoi(pq[0]);
    pat.q = std::stoi(pq[1]);
  } else if (!tail.empty()) {
    throw ParseError("trailing text '" + tail + "'", close + 1);
  }
  return pat;
}

std::set<std::string> bindable_vars(const ParamPattern& pat) {
  std::set<std::string> out;
  auto add = [&](const Expr& e) {
    if (auto n = e.bare_variable()) out.insert(*n);
  };
  if (pat.orthogonal) {
    add(pat.zeta);
    add(pat.xi);
  }
  for (const auto* v : {&pat.lambda_d, &pat.lambda_l, &pat.lambda_r, &pat.mu, &pat.nu, &pat.eps, &pat.kappa})
    for (const auto& e : *v) add(e);
  return out;
}

std::set<std::string> all_vars(const ParamPattern& pat) {
  std::set<std::string> out;
  if (pat.orthogonal) {
    pat.zeta.collect_vars(out);
    pat.xi.collect_vars(out);
  }
  for (const auto* v : {&pat.lambda_d, &pat.lambda_l, &pat.lambda_r, &pat.mu, &pat.nu, &pat.eps, &pat.kappa})
    for (const auto& e : *v) e.collect_vars(out);
  return out;
}

AnyParams instantiate(const ParamPattern& pat, const Bindings& b) {
  std::string text;
  std::string rest = "," + eval_tuple(pat.mu, b, true) + "," + eval_tuple(pat.nu, b, false) + "," +
                     eval_tuple(pat.eps, b, true) + "," + eval_tuple(pat.kappa, b, false) + ")";
  if (pat.orthogonal) {
    std::string lam = pat.lambda_l.empty() && pat.lambda_r.empty()
                          ? "0"
                          : "(" + eval_list(pat.lambda_l, b, true) + ";" + eval_list(pat.lambda_r, b, true) + ")";
    Scalar z = pat.zeta.eval(b), x = pat.xi.eval(b);
    if (!z.is_integer() || !x.is_integer()) throw std::domain_error("zeta/xi must be integers");
    text = "pi_{" + to_string(z) + "}(" + lam + "," + to_string(x) + "," + pat.psi + rest + " @ O(" +
           std::to_string(pat.p) + "," + std::to_string(pat.q) + ")";
    return canonicalize(parse_o(text));
  }
  text = "pi(" + eval_tuple(pat.lambda_d, b, true) + "," + pat.psi + rest;
  return canonicalize(parse_sp(text));
}

std::optional<Bindings> match(const ParamPattern& pat, const Condition& cond, const AnyParams& actual_in,
                              const Bindings& seed) {
  if (pat.orthogonal != std::holds_alternative<OParams>(actual_in)) return std::nullopt;

  // Normalized view of the actual parameters.
  int zeta = 1, xi = 1;
  std::vector<std::vector<Scalar>> lam;
  std::vector<long long> mu;
  std::vector<Scalar> nu, kappa;
  std::vector<int> eps;
  AnyParams actual;
  if (pat.orthogonal) {
    OParams o = canonicalize(std::get<OParams>(actual_in));
    if (o.p != pat.p || o.q != pat.q) return std::nullopt;
    if (o.lambda_l.size() != pat.lambda_l.size() || o.lambda_r.size() != pat.lambda_r.size()) return std::nullopt;
    zeta = o.zeta;
    xi = o.xi;
    lam = {as_scalars(o.lambda_l), as_scalars(o.lambda_r)};
    mu = o.mu, nu = o.nu, eps = o.eps, kappa = o.kappa;
    actual = o;
  } else {
    SpParams x = canonicalize(std::get<SpParams>(actual_in));
    if (x.lambda_d.size() != pat.lambda_d.size()) return std::nullopt;
    lam = {as_scalars(x.lambda_d)};
    mu = x.mu, nu = x.nu, eps = x.eps, kappa = x.kappa;
    actual = x;
  }
  if (mu.size() != pat.mu.size() || eps.size() != pat.eps.size()) return std::nullopt;

  std::vector<int> pmu(mu.size()), peps(eps.size());
  std::iota(pmu.begin(), pmu.end(), 0);
  do {
    std::iota(peps.begin(), peps.end(), 0);
    do {
      Bindings b = seed;
      if (pat.orthogonal) {
        bind(b, pat.zeta, Scalar(zeta));
        bind(b, pat.xi, Scalar(xi));
        bind_all(b, pat.lambda_l, lam[0]);
        bind_all(b, pat.lambda_r, lam[1]);
      } else {
        bind_all(b, pat.lambda_d, lam[0]);
      }
      bind_all(b, pat.mu, as_scalars(permuted(mu, pmu)));
      bind_all(b, pat.nu, permuted(nu, pmu));
      bind_all(b, pat.eps, as_scalars(permuted(eps, peps)));
      bind_all(b, pat.kappa, permuted(kappa, peps));
      try {
        if (!cond.eval(b)) continue;
        if (instantiate(pat, b) == actual) return b;
      } catch (const std::exception&) {
        // wrong slot types under this binding
      }
    } while (std::next_permutation(peps.begin(), peps.end()));
  } while (std::next_permutation(pmu.begin(), pmu.end()));
  return std::nullopt;
}

std::vector<UKTypePattern> parse_uktype_set(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("expected {...} of K-types", 0);
  std::vector<UKTypePattern> out;
  std::string inner = trim(std::string_view(s).substr(1, s.size() - 2));
  if (inner.empty()) return out;
  for (const auto& t : split_top(inner, ',')) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("expected (...) K-type: " + t, 0);
    out.push_back(parse_plain_list(t.substr(1, t.size() - 2)));
  }
  return out;
}

std::vector<UKType> instantiate_uktypes(const std::vector<UKTypePattern>& pats, const Bindings& b) {
  std::vector<UKType> out;
  for (const auto& p : pats) {
    UKType t;
    for (const auto& e : p) {
      Scalar x = e.eval(b);
      if (!x.is_integer()) throw std::domain_error("K-type entry '" + e.text() + "' is not an integer");
      t.w.push_back(x.as_int());
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tl
