#include "thetalift/ktypes.hpp"

#include <doctest.h>

using namespace tl;

namespace {

UKType U(std::vector<long long> w) { return {std::move(w)}; }

}  // namespace

TEST_CASE("norms") {
  CHECK(ktype_norm(U({1, 0, -1})) == 18);
  CHECK(ktype_norm(parse_oktype("(0;-1)x(0;-1)", 2, 2)) == 0);
  CHECK(ktype_norm(U({1, 1, -1, -1})) == 40);
  // independent: |w + 2rho_c|^2 with 2rho_c = (n-1, n-3, ...)
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= a; ++b) CHECK(ktype_norm(U({a, b})) == (a + 1) * (a + 1) + (b - 1) * (b - 1));
}

TEST_CASE("orthogonal to unitary weights") {
  CHECK(u_from_o(OFactor{2, {0}, -1}) == U({1, 1}));
  CHECK(u_from_o(OFactor{4, {0, 0}, -1}) == U({1, 1, 1, 1}));
  CHECK(u_from_o(OFactor{2, {3}, 1}) == U({3, 0}));
  CHECK(u_from_o(OFactor{3, {2}, -1}) == U({2, 1, 0}));
  for (int p = 1; p <= 5; ++p)
    for (long long a = 0; a <= 3; ++a)
      for (int s : {1, -1}) {
        OFactor f{p, std::vector<long long>(p / 2, 0), s};
        if (!f.a.empty()) f.a[0] = a;
        if (p == 1 && a) continue;
        f = f.canonical();
        CHECK(o_from_u(u_from_o(f), p).canonical() == f);
      }
}

TEST_CASE("degrees") {
  CHECK(degree_o(parse_oktype("(0;-1)x(0;-1)", 2, 2)) == 4);
  CHECK(degree_o(parse_oktype("(0;1)x(0;1)", 2, 2)) == 0);
  CHECK(degree_o(parse_oktype("(0,0;1)x(;1)", 4, 0)) == 0);
  for (long long m = 1; m <= 5; ++m) CHECK(degree_o(make_oktype(3, 1, {m}, -1, {}, -1)) == m + 2);
  // m = 0 is det of O(3) times det of O(1)
  CHECK(degree_o(make_oktype(3, 1, {0}, -1, {}, -1)) == 4);
  CHECK(degree_u(U({3, 3, 3, 3}), 4) == 4);
  CHECK(degree_u(U({2, 2, 2}), 4) == 0);
  CHECK(degree_u(U({1, 1, -1, -1}), 0) == 4);
}

TEST_CASE("joint harmonics correspondence examples") {
  auto det22 = parse_oktype("(0;-1)x(0;-1)", 2, 2);
  CHECK(phi_n(det22, 4) == U({1, 1, -1, -1}));
  CHECK_FALSE(phi_n(det22, 3).has_value());
  CHECK(occurrence_bound(det22) == 4);
  CHECK(phi_n(parse_oktype("(0,0;-1)x(;1)", 4, 0), 4) == U({3, 3, 3, 3}));
  CHECK(phi_pq(U({1, 1, -1, -1}), 2, 2) == det22);
  CHECK(phi_pq(U({0, 0, 0}), 2, 2) == parse_oktype("(0;1)x(0;1)", 2, 2));
  CHECK(phi_pq(U({2, 2, 2, 0}), 3, 1) == parse_oktype("(0;-1)x(;-1)", 3, 1));
}

TEST_CASE("phi round trip and degree preservation on small shapes") {
  for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {4, 0}, {1, 3}, {0, 4}})
    for (int n = 0; n <= 5; ++n)
      for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b)
          for (int e : {1, -1})
            for (int h : {1, -1}) {
              std::vector<long long> l(p / 2, 0), r(q / 2, 0);
              if (!l.empty()) l[0] = a;
              else if (a) continue;
              if (!r.empty()) r[0] = b;
              else if (b) continue;
              OKType s = make_oktype(p, q, l, e, r, h).canonical();
              auto u = phi_n(s, n);
              if (!u) {
                CHECK(occurrence_bound(s) > n);
                continue;
              }
              CHECK(u->w.size() == static_cast<std::size_t>(n));
              CHECK(phi_pq(*u, p, q) == s);
              CHECK(degree_u(*u, p - q) == degree_o(s));
            }
}

TEST_CASE("stable range maps") {
  CHECK(sigma_one_one(parse_oktype("(1;-1)x(;1)", 3, 1)) == parse_oktype("(1,1;1)x(0;1)", 4, 2));
  CHECK(sigma_one_one(parse_oktype("(0;1)x(0;1)", 2, 2)) == parse_oktype("(0;1)x(0;1)", 3, 3));
  CHECK(sigma_one_one(parse_oktype("(0;-1)x(0;-1)", 2, 2)) == parse_oktype("(1;-1)x(1;-1)", 3, 3));
  CHECK(sigma_prime_add(U({1, 1, -1, -1}), 0) == U({1, 1, 0, -1, -1}));
  CHECK(sigma_prime_add(U({}), 7) == U({7}));
  CHECK(sigma_prime_add(U({3, 3, 3, 3}), 2) == U({3, 3, 3, 3, 2}));
}

TEST_CASE("stable range map agrees with phi") {
  // phi_{n+1}(sigma^{1,1}) is phi_n(sigma) with (p-q)/2 inserted
  for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {4, 0}, {1, 1}, {2, 0}})
    for (long long a = 0; a <= 4; ++a)
      for (int e : {1, -1})
        for (int h : {1, -1}) {
          std::vector<long long> l(p / 2, 0), r(q / 2, 0);
          if (!l.empty()) l[0] = a;
          else if (a) continue;
          OKType s = make_oktype(p, q, l, e, r, h).canonical();
          int n = static_cast<int>(occurrence_bound(s)) + 1;
          auto u = phi_n(s, n);
          REQUIRE(u);
          auto up = phi_pq(sigma_prime_add(*u, (p - q) / 2), p + 1, q + 1);
          REQUIRE(up);
          INFO(to_string(s));
          CHECK(sigma_one_one(s) == *up);
        }
}

TEST_CASE("ktype text") {
  CHECK(to_string(U({2, 0, -1})) == "(2,0,-1)");
  CHECK(parse_uktype("(2,0,-1)") == U({2, 0, -1}));
  CHECK_THROWS(check_uktype(U({0, 1})));
  auto t = parse_oktype("(2,0;-1)x(0;-1)", 5, 2);
  CHECK(parse_oktype(to_string(t), 5, 2) == t);
  CHECK_THROWS(parse_oktype("(2;-1)x(0;-1)", 5, 2));
}
