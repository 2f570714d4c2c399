#include "thetalift/exact.hpp"

#include <algorithm>
#include <cctype>

namespace tl {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long long Scalar::as_int() const {
  if (!is_integer()) throw std::logic_error("scalar " + to_string(*this) + " is not an integer");
  return re.numerator();
}

Scalar Scalar::normalized() const { return is_normalized() ? *this : -*this; }

bool Scalar::is_normalized() const { return re > 0 || (re == 0 && im >= 0); }

Scalar operator/(const Scalar& a, const Scalar& b) {
  Rational d = b.re * b.re + b.im * b.im;
  if (d == 0) throw std::domain_error("division by zero scalar");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  auto c = compare(a.re, b.re);
  return c != 0 ? c : compare(a.im, b.im);
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return to_string(s.re);
  std::string out = to_string(s.re);
  out += s.im < 0 ? "-" : "+";
  out += to_string(s.im < 0 ? -s.im : s.im);
  out += "*i";
  return out;
}

namespace {

void skip_ws(std::string_view t, std::size_t& pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

bool read_uint(std::string_view t, std::size_t& pos, long long& out) {
  std::size_t start = pos;
  long long v = 0;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
    if (v > (INT64_MAX - 9) / 10) throw ParseError("integer too large", start);
    v = v * 10 + (t[pos] - '0');
    ++pos;
  }
  out = v;
  return pos > start;
}

// Unsigned rational magnitude: INT or INT/INT.
bool read_urational(std::string_view t, std::size_t& pos, Rational& out) {
  long long num = 0;
  if (!read_uint(t, pos, num)) return false;
  long long den = 1;
  skip_ws(t, pos);
  if (pos < t.size() && t[pos] == '/') {
    std::size_t at = pos++;
    skip_ws(t, pos);
    if (!read_uint(t, pos, den)) throw ParseError("expected denominator", at);
    if (den == 0) throw ParseError("zero denominator", at);
  }
  out = Rational(num, den);
  return true;
}

// After a magnitude: optional "*i" or "i". Returns true if imaginary.
bool read_imag_suffix(std::string_view t, std::size_t& pos) {
  std::size_t save = pos;
  skip_ws(t, pos);
  if (pos < t.size() && t[pos] == '*') {
    ++pos;
    skip_ws(t, pos);
    if (pos < t.size() && t[pos] == 'i') {
      ++pos;
      return true;
    }
    pos = save;
    return false;
  }
  if (pos < t.size() && t[pos] == 'i') {
    ++pos;
    return true;
  }
  pos = save;
  return false;
}

// One signed term: [+-] (rational [*i] | i).
bool read_term(std::string_view t, std::size_t& pos, bool first, Scalar& out) {
  skip_ws(t, pos);
  std::size_t start = pos;
  int sign = 1;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    sign = t[pos] == '-' ? -1 : 1;
    ++pos;
    skip_ws(t, pos);
  } else if (!first) {
    return false;
  }
  Rational mag;
  if (read_urational(t, pos, mag)) {
    if (read_imag_suffix(t, pos)) {
      out = Scalar(Rational(0), sign * mag);
    } else {
      out = Scalar(sign * mag);
    }
    return true;
  }
  if (pos < t.size() && t[pos] == 'i' &&
      (pos + 1 >= t.size() || !std::isalnum(static_cast<unsigned char>(t[pos + 1])))) {
    ++pos;
    out = Scalar(Rational(0), Rational(sign));
    return true;
  }
  pos = start;
  return false;
}

}  // namespace

Scalar parse_scalar_at(std::string_view text, std::size_t& pos) {
  Scalar total;
  Scalar term;
  std::size_t start = pos;
  if (!read_term(text, pos, true, term)) throw ParseError("expected scalar", start);
  total += term;
  bool seen_im = term.im != 0;
  bool seen_re = !seen_im;
  // A second term is only taken if it supplies the missing component.
  std::size_t save = pos;
  if (read_term(text, pos, false, term)) {
    bool term_im = term.im != 0 || (term.re == 0 && term.im == 0 && false);
    if ((term_im && !seen_im) || (!term_im && !seen_re)) {
      total += term;
    } else {
      pos = save;
    }
  }
  return total;
}

Scalar parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  Scalar s = parse_scalar_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after scalar", pos);
  return s;
}

HalfInt HalfInt::from_rational(const Rational& r) {
  Rational t = r * 2;
  if (t.denominator() != 1) throw std::domain_error("value " + to_string(r) + " is not in Z/2");
  return {t.numerator()};
}

std::string to_string(const HalfInt& h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

InfChar canonical_infchar(std::vector<Scalar> raw) {
  for (auto& s : raw) s = s.normalized();
  std::sort(raw.begin(), raw.end());
  return InfChar{std::move(raw)};
}

std::string to_string(const InfChar& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    if (i) out += ",";
    out += to_string(x.entries[i]);
  }
  return out + ")";
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<Scalar> out;
  skip_ws(text, pos);
  if (paren && pos < text.size() && text[pos] == ')') {
    ++pos;
  } else if (pos < text.size()) {
    while (true) {
      out.push_back(parse_scalar_at(text, pos));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (paren) {
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
    }
  }
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in scalar list", pos);
  return out;
}

Scalar generic_scalar() { return {Rational(13, 7), Rational(5, 11)}; }

bool is_generic(const Scalar& s) { return s == generic_scalar() || s == -generic_scalar(); }

}  // namespace tl
