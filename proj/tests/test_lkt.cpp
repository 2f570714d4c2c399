#include "thetalift/lkt.hpp"
#include "thetalift/notation.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tl;

namespace {

std::vector<UKType> sp(const char* t) { return lowest_ktypes_sp(parse_sp(t)); }
std::vector<OKType> o(const char* t) { return lowest_ktypes_o(parse_o(t)); }
UKType U(std::vector<long long> w) { return {std::move(w)}; }

}  // namespace

TEST_CASE("Sp lowest K-types") {
  CHECK(sp("pi((1,0,0),{e1+-e2,e2+-e3,e1+-e3,2e1,2e2,-2e3},0,0,0,0)") == std::vector{U({2, 2, 1})});
  CHECK(sp("pi(0,{},(1),(1),(1),(5))") == std::vector{U({1, 0, -1})});
  CHECK(sp("pi(0,{},0,0,(1,1,1),(5,1,0))") == std::vector{U({0, 0, 0})});
  CHECK(sp("pi(0,{},0,0,0,0)") == std::vector{U({})});
  CHECK(sp("pi(0,{},(1,1),(1,3),0,0)") == std::vector{U({1, 1, -1, -1})});
  CHECK(sp("pi((2,1,0),{e1+-e2,e2+-e3,e1+-e3,2e1,2e2,2e3},0,0,(-1),(1))") == std::vector{U({3, 3, 3, 3})});
}

TEST_CASE("intermediate data") {
  auto m = lkt_intermediate(parse_sp("pi(0,{},0,0,0,0)"));
  CHECK(m.lambda_a.empty());
  CHECK(m.blocks.empty());
  auto a = lkt_intermediate(parse_sp("pi((1,0),{e1+-e2,2e1,2e2},(1),(3),0,0)"));
  std::vector<Rational> got;
  for (auto h : a.lambda_a) got.push_back(h.value());
  CHECK(got == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(0), Rational(-1, 2)});
  std::vector<Rational> base;
  for (auto h : lkt_base(a)) base.push_back(h.value());
  CHECK(base == std::vector<Rational>{Rational(2), Rational(2), Rational(1), Rational(0)});

  auto b = lkt_intermediate(parse_sp("pi((2,1,0),{e1+-e2,e2+-e3,e1+-e3,2e1,2e2,2e3},0,0,(-1),(1))"));
  CHECK(b.u == 2);
  CHECK(b.w == 2);
  CHECK(b.r == 0);
  CHECK(b.z == 1);
  CHECK(b.h == 2);
}

TEST_CASE("O lowest K-types") {
  CHECK(o("pi_{-1}(0,1,{},0,0,(1,1),(0,1)) @ O(2,2)") == std::vector{parse_oktype("(0;-1)x(0;-1)", 2, 2)});
  auto two = o("pi_{-1}(0,1,{},0,0,(1,-1),(0,2)) @ O(2,2)");
  std::vector<OKType> want{parse_oktype("(1;1)x(0;-1)", 2, 2), parse_oktype("(0;-1)x(1;1)", 2, 2)};
  std::sort(want.begin(), want.end());
  CHECK(two == want);
  for (const char* b : {"5", "1/2", "2", "3"}) {
    std::string t = std::string("pi_{1}((0;),-1,{},0,0,(-1),(") + b + ")) @ O(3,1)";
    CHECK(o(t.c_str()) == std::vector{parse_oktype("(0;-1)x(;1)", 3, 1)});
  }
}

TEST_CASE("lowest K-types have minimal norm among the set") {
  for (const char* t : {"pi(0,{},(1),(1),(1),(5))", "pi(0,{},(1,1),(1,3),0,0)", "pi(0,{},0,0,(1,-1),(1,0))"}) {
    auto s = sp(t);
    REQUIRE_FALSE(s.empty());
    for (const auto& k : s) CHECK(ktype_norm(k) == ktype_norm(s.front()));
  }
}
