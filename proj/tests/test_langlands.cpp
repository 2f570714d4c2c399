#include "thetalift/enumerate.hpp"
#include "thetalift/langlands.hpp"
#include "thetalift/notation.hpp"

#include <doctest.h>

using namespace tl;

namespace {

std::string canon(const char* t) { return render(canonicalize(parse_sp(t))); }

}  // namespace

TEST_CASE("validity") {
  CHECK(validate(parse_sp("pi((1,0),{e1+-e2,2e1,2e2},(1),(3),0,0)")).empty());
  auto bad = validate(parse_sp("pi(0,{},(2),(0),0,0)"));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad[0].find("(F-2)") != std::string::npos);
  CHECK(validate(parse_o("pi_{-1}(0,1,{},0,0,(1,1),(0,2)) @ O(2,2)")).empty());
  CHECK(validate(parse_sp("pi(0,{},0,0,0,0)")).empty());
  CHECK_FALSE(validate(parse_sp("pi((0,1),{e1+-e2,2e1,2e2},0,0,0,0)")).empty());
}

TEST_CASE("canonical forms") {
  CHECK(canon("pi(0,{},0,0,(1),(-3))") == "pi(0,{},0,0,(1),(3))");
  const char* fixed = "pi((1,0),{e1+-e2,2e1,2e2},(1),(3),0,0)";
  CHECK(canon(fixed) == render(parse_sp(fixed)));
  CHECK(canon("pi(0,{},(1,0),(1,6),0,0)") == canon("pi(0,{},(0,1),(6,1),0,0)"));
  auto x = canonicalize(parse_sp("pi(0,{},(1,0),(1,6),(1,-1),(2,-5))"));
  CHECK(canonicalize(x) == x);
}

TEST_CASE("infinitesimal characters") {
  CHECK(to_string(infchar_of(parse_sp("pi(0,{},(1,1),(1,3),0,0)"))) == "(0,1,1,2)");
  CHECK(infchar_of(parse_sp("pi(0,{},0,0,0,0)")).size() == 0);
  CHECK(to_string(infchar_of(parse_o("pi_{1}((0;),-1,{},0,0,(1),(5)) @ O(3,1)"))) == "(0,5)");
  CHECK(to_string(infchar_of(parse_sp("pi((2,1,0),{e1+-e2,e2+-e3,e1+-e3,2e1,2e2,2e3},0,0,(-1),(1))"))) == "(0,1,1,2)");
}

TEST_CASE("contragredient") {
  auto x = parse_sp("pi((1,0),{e1+-e2,2e1,2e2},0,0,0,0)");
  auto y = contragredient_sp(x);
  CHECK(y.lambda_d == std::vector<long long>{0, -1});
  CHECK(validate(y).empty());
  CHECK(contragredient_sp(y) == canonicalize(x));
  auto e = parse_sp("pi(0,{},(1),(1),(1),(2))");
  CHECK(contragredient_sp(e) == canonicalize(e));
  auto chars = canonicalize(parse_sp("pi(0,{},0,0,(1,-1,1),(2,1/2,0))"));
  CHECK(contragredient_sp(chars) == chars);
  auto mixed = canonicalize(parse_sp("pi(0,{},(2),(1/2),(-1),(3))"));
  CHECK(contragredient_sp(mixed) == mixed);
  // with lambda_d = (1,0,-1) the root 2e2 or -2e2 is flipped, so no fixed point
  int seen = 0;
  for (auto& x : enumerate_sp_reps(3, canonical_infchar({1, 0, 1})))
    if (x.lambda_d == std::vector<long long>{1, 0, -1}) {
      ++seen;
      CHECK_FALSE(contragredient_sp(x) == x);
      CHECK(contragredient_sp(contragredient_sp(x)) == x);
    }
  CHECK(seen == 4);
}

TEST_CASE("swapping p and q") {
  for (int m = 1; m <= 4; ++m) {
    auto ms = std::to_string(m);
    auto x = parse_o(("pi_{1}((" + ms + ";0),-1,{e1+-f1},0,0,0,0) @ O(2,2)").c_str());
    auto y = parse_o(("pi_{1}((0;" + ms + "),-1,{-e1+f1,e1+f1},0,0,0,0) @ O(2,2)").c_str());
    REQUIRE(validate(x).empty());
    CHECK(swap_pq(x) == canonicalize(y));
    CHECK(swap_pq(swap_pq(x)) == canonicalize(x));
  }
  auto t = parse_o("pi_{1}(0,1,{},(0),(1),0,0) @ O(2,2)");
  CHECK(swap_pq(t) == canonicalize(t));
}

TEST_CASE("parameter text") {
  for (const char* t : {"pi((1,0),{e1+-e2,2e1,2e2},(1),(3),0,0)", "pi(0,{},0,0,0,0)",
                        "pi_{-1}(0,1,{},0,0,(1,1),(0,2)) @ O(2,2)"}) {
    auto x = parse_params(t);
    CHECK(render(parse_params(render(x))) == render(x));
  }
  auto a = parse_sp("pi((1,0),{e1+e2,e1-e2,2e1,2e2},(1),(3),0,0)");
  CHECK(a == parse_sp("pi((1,0),{e1+-e2,2e1,2e2},(1),(3),0,0)"));
  CHECK(render(parse_sp("pi(0,{},(1),(1),0,0)")).find(",0,0)") != std::string::npos);
  CHECK(render(parse_sp("pi(0,{},0,0,(1),(3/2))")) == "pi(0,{},0,0,(1),(3/2))");
  CHECK_THROWS_AS(parse_sp("pi((1,0),{e1+-e2"), ParseError);
  CHECK_THROWS_AS(parse_sp("sigma(0,{},0,0,0,0)"), ParseError);
}
