#pragma once
// Exact scalars: Gaussian rationals, half-integers and infinitesimal
// characters up to permutation and sign change.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Boost 1.74 defines `int == rational` by flipping the operands, which
// C++20 rewrites back into itself.  Exact non-template overloads win; they
// sit in boost so that argument-dependent lookup finds them from any caller.
namespace boost {
#define TL_MIXED_CMP(OP) \
  inline bool operator OP(const rational<long long>& a, int b) { return a OP rational<long long>(b); } \
  inline bool operator OP(const rational<long long>& a, long long b) { return a OP rational<long long>(b); } \
  inline bool operator OP(int a, const rational<long long>& b) { return rational<long long>(a) OP b; } \
  inline bool operator OP(long long a, const rational<long long>& b) { return rational<long long>(a) OP b; }
TL_MIXED_CMP(==)
TL_MIXED_CMP(!=)
TL_MIXED_CMP(<)
TL_MIXED_CMP(>)
TL_MIXED_CMP(<=)
TL_MIXED_CMP(>=)
#undef TL_MIXED_CMP
}  // namespace boost

namespace tl {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
std::strong_ordering compare(const Rational& a, const Rational& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// a + b*i with a, b rational.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long long v) : re(v) {}  // NOLINT: integers are scalars
  Scalar(Rational r) : re(r) {}   // NOLINT
  Scalar(Rational r, Rational i) : re(r), im(i) {}

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_integer() const { return im == 0 && re.denominator() == 1; }
  // Only meaningful when is_integer().
  long long as_int() const;

  // Representative of {x, -x}: re > 0, or re == 0 and im >= 0.
  Scalar normalized() const;
  bool is_normalized() const;

  Scalar operator-() const { return {-re, -im}; }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  // Lexicographic on (re, im).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);
};

std::string to_string(const Scalar& s);

// Stand-in for a free parameter beta: non-real, so every specialness test
// (beta in Z, beta = 0, +-1, ...) fails exactly.
Scalar generic_scalar();
bool is_generic(const Scalar& s);
// INT, INT/INT, a+b*i, a-b*i; also accepts bare i, -i, 2*i.
Scalar parse_scalar(std::string_view text);
// Parses a scalar starting at text[pos]; advances pos past it.
Scalar parse_scalar_at(std::string_view text, std::size_t& pos);

// Values in (1/2)Z stored as twice the value.
struct HalfInt {
  long long twice = 0;

  static HalfInt from_int(long long v) { return {2 * v}; }
  static HalfInt half(long long numerator) { return {numerator}; }
  static HalfInt from_rational(const Rational& r);

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(twice, 2); }
  HalfInt operator-() const { return {-twice}; }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

std::string to_string(const HalfInt& h);

// Multiset of scalars modulo permutations and sign changes, stored as its
// canonical representative.
struct InfChar {
  std::vector<Scalar> entries;
  friend bool operator==(const InfChar&, const InfChar&) = default;
  std::size_t size() const { return entries.size(); }
};

InfChar canonical_infchar(std::vector<Scalar> raw);
std::string to_string(const InfChar& x);
// "(a,b,...)" or "a,b,..." of scalars.
std::vector<Scalar> parse_scalar_list(std::string_view text);

}  // namespace tl
