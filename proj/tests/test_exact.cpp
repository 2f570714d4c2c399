#include "thetalift/exact.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tl;

namespace {

Scalar S(long long a, long long b = 1) { return Scalar(Rational(a, b)); }
Scalar C(Rational re, Rational im) { return Scalar(re, im); }

InfChar ic(std::vector<Scalar> v) { return canonical_infchar(std::move(v)); }

}  // namespace

TEST_CASE("scalar text round trip") {
  for (const char* t : {"0", "7", "-3", "3/2", "-5/4", "3/2-1*i", "1+2*i", "-1/3+5/7*i"}) {
    Scalar s = parse_scalar(t);
    CHECK(to_string(s) == t);
    CHECK(parse_scalar(to_string(s)) == s);
  }
  CHECK(parse_scalar("i") == C(0, 1));
  CHECK(parse_scalar("-i") == C(0, -1));
  CHECK(parse_scalar("2*i") == C(0, 2));
  CHECK(parse_scalar("6/4") == S(3, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = parse_scalar("1/3+1/2*i"), b = parse_scalar("2-1*i");
  CHECK(a + b == parse_scalar("7/3-1/2*i"));
  CHECK(a * b == parse_scalar("7/6+2/3*i"));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
  CHECK(Scalar(4).is_integer());
  CHECK_FALSE(S(1, 2).is_integer());
  CHECK_FALSE(C(1, 1).is_integer());
}

TEST_CASE("sign representative") {
  CHECK(S(-3).normalized() == S(3));
  CHECK(C(0, -1).normalized() == C(0, 1));
  CHECK(C(-1, 5).normalized() == C(1, -5));
  CHECK(S(0).is_normalized());
  CHECK(generic_scalar().is_normalized());
  CHECK(is_generic(-generic_scalar()));
  CHECK_FALSE(is_generic(S(2)));
}

TEST_CASE("canonical infinitesimal character examples") {
  // sorted version of (1,2,0,1)
  CHECK(ic({S(1), S(2), S(0), S(1)}) == ic({S(0), S(1), S(1), S(2)}));
  CHECK(to_string(ic({S(1), S(2), S(0), S(1)})) == "(0,1,1,2)");
  CHECK(ic({S(0), S(0), S(0)}).entries == std::vector<Scalar>{S(0), S(0), S(0)});
  // (-3, 1/2, -i): flip signs, then sort by (re, im)
  InfChar x = ic({S(-3), S(1, 2), C(0, -1)});
  CHECK(x.entries == std::vector<Scalar>{C(0, 1), S(1, 2), S(3)});
}

TEST_CASE("canonical form is invariant under permutations and sign changes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4), len(0, 6), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Scalar> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) v.push_back(C(Rational(d(rng), 1 + coin(rng)), Rational(coin(rng) ? d(rng) : 0)));
    InfChar base = ic(v);
    CHECK(ic(base.entries) == base);
    for (const auto& e : base.entries) CHECK(e.is_normalized());
    CHECK(std::is_sorted(base.entries.begin(), base.entries.end()));
    auto w = v;
    std::shuffle(w.begin(), w.end(), rng);
    for (auto& e : w)
      if (coin(rng)) e = -e;
    CHECK(ic(w) == base);
  }
}

TEST_CASE("half integers") {
  HalfInt h = HalfInt::half(3);
  CHECK(h.value() == Rational(3, 2));
  CHECK_FALSE(h.is_integer());
  CHECK((h + HalfInt::half(1)).is_integer());
  CHECK((h + HalfInt::half(1)).value() == Rational(2));
  CHECK(HalfInt::from_rational(Rational(-1, 2)) == HalfInt::half(-1));
  CHECK(to_string(HalfInt::half(-1)) == "-1/2");
}

TEST_CASE("mixed rational and integer comparisons") {
  Rational r(1, 2);
  CHECK(r > 0);
  CHECK(0 < r);
  CHECK(r != 0);
  CHECK(Rational(0) == 0);
  CHECK(0 == Rational(0));
  CHECK(r <= 1LL);
}
