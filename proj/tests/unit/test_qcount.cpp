#include "../support/naive.hpp"
#include "doctest.h"
#include "qdiam/errors.hpp"
#include "qdiam/qcount.hpp"

using namespace qdiam;

namespace {

BigCount gb(int n, int k, int q) { return gauss_binom(n, k, q); }
BigCount u(unsigned long long v) { return BigCount(v); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("Gaussian binomials") {
  for (int q : {2, 3, 4, 5}) {
    CHECK(gb(7, 0, q) == u(1));
    CHECK(gb(3, 5, q) == u(0));
    CHECK(gb(3, -1, q) == u(0));
  }
  CHECK(gb(4, 2, 2) == u(35));
  CHECK(gb(3, 1, 3) == u(13));
  for (int q : {2, 3, 4, 5, 7})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(gb(n, k, q) == gb(n, n - k, q));
        if (q <= 3 || n <= 7) CHECK(gb(n, k, q) == u(naive::gauss_product(n, k, q)));
      }
  // far beyond 64 bits
  CHECK(gb(40, 20, 4).str().size() > 200);
  CHECK(gb(3, 1, 6) == u(43));  // any integer q >= 2 is accepted
}

TEST_CASE("BigCount arithmetic") {
  CHECK((u(3) + u(4)) == u(7));
  CHECK((u(3) * u(4)) == u(12));
  CHECK(u(3) < u(4));
  CHECK(u(12).str() == "12");
  CHECK(u(12).to_u64() == 12);
  CHECK(code_of([] { BigCount(BigInt(-1)); }) == Errc::ParameterOutOfRange);
  CHECK(code_of([] { (void)gb(100, 50, 2).to_u64(); }) == Errc::ParameterOutOfRange);
}

TEST_CASE("intersection profiles") {
  CHECK(count_profile(2, 1, 1, 0, 2) == u(2));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(count_profile(n, k, k, k, 3) == u(1));
  CHECK(count_profile(4, 2, 2, 0, 2) == u(16));
  CHECK(count_profile(4, 2, 2, 3, 2) == u(0));
  CHECK(count_profile(4, 2, 2, -1, 2) == u(0));
  for (int q : {2, 3, 4})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          BigCount total;
          for (int j = 0; j <= std::min(k, l); ++j) total += count_profile(n, k, l, j, q);
          CHECK(total == gb(n, l, q));
        }
}

TEST_CASE("diameter bound") {
  CHECK(kleitman_bound(4, 2, 2).value == u(16));
  CHECK(kleitman_bound(4, 3, 2).value == u(23));
  CHECK(kleitman_bound(5, 4, 2).value == u(187));
  CHECK(kleitman_bound(3, 2, 2).value == u(8));
  CHECK(kleitman_bound(3, 2, 3).value == u(14));
  CHECK(kleitman_bound(5, 3, 2).value == u(47));
  CHECK(kleitman_bound(4, 3, 2).in_hypothesis_range);
  CHECK(code_of([] { kleitman_bound(3, 3, 2); }) == Errc::ParameterOutOfRange);
  CHECK(code_of([] { kleitman_bound(5, 1, 2); }) == Errc::ParameterOutOfRange);
}

TEST_CASE("stability bounds") {
  auto g = typeA_even_bound(7, 2, 2);
  CHECK(g.value == u(842));
  CHECK_FALSE(g.in_hypothesis_range);
  CHECK(typeA_even_bound(19, 2, 2).in_hypothesis_range);
  CHECK(hm_excess(7, 2, 2) == u(211));
  auto odd = odd_stability_bound(7, 2, 2);
  CHECK(odd.value == u(1 + 127 + 2667 + 211));
  CHECK_FALSE(odd.in_hypothesis_range);
  CHECK(odd_stability_bound(13, 2, 2).in_hypothesis_range);
  CHECK(code_of([] { hm_excess(4, 2, 2); }) == Errc::ParameterOutOfRange);

  auto b = typeB_even_bound(12, 2, 2);
  CHECK(b.value == u(1 + 4095 + 20ull * 651 * 4095));
  CHECK(b.in_hypothesis_range);
  CHECK_FALSE(typeB_even_bound(11, 2, 2).in_hypothesis_range);

  for (int q : {2, 3})
    for (int t = 2; t <= 4; ++t)
      for (int n = 2 * t + 1; n <= 30; ++n) {
        CAPTURE(q);
        CAPTURE(t);
        CAPTURE(n);
        CHECK(typeA_even_bound(n, t, q).value < kleitman_bound(n, 2 * t, q).value);
        if (n >= 5 * t + 3) CHECK(odd_stability_bound(n, t, q).value < kleitman_bound(n, 2 * t + 1, q).value);
      }
}

TEST_CASE("typeA at n = t+2 is the ball around a line") {
  // ball(X,t) in F_q^{t+2}: all of dim < t, and the t- and (t+1)-spaces through X
  for (int q : {2, 3})
    for (int t = 1; t <= 4; ++t) {
      const int n = t + 2;
      BigCount expected;
      for (int i = 0; i < t; ++i) expected += gb(n, i, q);
      expected += gb(n - 1, t - 1, q) + gb(n - 1, t, q);
      CHECK(typeA_even_bound(n, t, q).value == expected);
    }
}

TEST_CASE("intersecting family bounds") {
  CHECK(ekr_bound(7, 3, 1, 2).value == u(651));
  CHECK(ekr_bound(5, 3, 1, 2).value == gb(5, 2, 2));  // at n = 2k-s every k-space qualifies
  CHECK(ekr_bound(6, 4, 4, 2).value == u(1));
  CHECK(code_of([] { ekr_bound(4, 3, 1, 2); }) == Errc::ParameterOutOfRange);

  auto hm = nontrivial_intersecting_bound(7, 3, 1, 2);
  CHECK(hm.value == u(211));
  CHECK_FALSE(hm.in_hypothesis_range);
  CHECK(nontrivial_intersecting_bound(8, 3, 1, 2).in_hypothesis_range);
  // second case: [s+2 1][n-s-1 k-s-1] - q[s+1 1][n-s-2 k-s-2]
  CHECK(nontrivial_intersecting_bound(10, 4, 2, 2).value == u(15 * 127 - 2 * 7 * 1));
  CHECK(nontrivial_intersecting_bound(10, 4, 2, 2).value == u(1891));
  CHECK(code_of([] { nontrivial_intersecting_bound(10, 3, 2, 2); }) == Errc::ParameterOutOfRange);
  CHECK(code_of([] { nontrivial_intersecting_bound(5, 3, 1, 2); }) == Errc::ParameterOutOfRange);

  for (int q : {2, 3, 4})
    for (int k = 3; k <= 8; ++k)
      for (int s = 1; s <= k - 2; ++s)
        for (int n = 2 * k; n <= 24; ++n) {
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(s);
          CHECK(nontrivial_intersecting_bound(n, k, s, q).value < ekr_bound(n, k, s, q).value);
        }
  // s = 1 at k = 3: both case formulas agree
  for (int n = 6; n <= 12; ++n) {
    BigInt second = gb(3, 1, 2).value() * gb(n - 2, 1, 2).value() - 2 * gb(2, 1, 2).value() * gb(n - 3, 0, 2).value();
    CHECK(nontrivial_intersecting_bound(n, 3, 1, 2).value == BigCount(second));
  }
}

TEST_CASE("complementary pairs") {
  CHECK(complementary_pair_bound(4, 1, 2).value == u(8));
  CHECK(complementary_pair_bound(5, 2, 2).value == u(92));
  for (int q : {2, 3})
    for (int n = 3; n <= 12; ++n)
      for (int k = 1; 2 * k < n; ++k) {
        CHECK(complementary_pair_bound(n, k, q).value < gb(n, k, q));
        // the general cross-intersecting bound with a=k, b=n-k, t=1
        CHECK(cross_intersecting_sum_bound(n, k, n - k, 1, q).value == complementary_pair_bound(n, k, q).value);
      }
  CHECK(code_of([] { complementary_pair_bound(4, 2, 2); }) == Errc::ParameterOutOfRange);
}

TEST_CASE("nontrivial comparison on a small grid") {
  for (int q : {2, 3})
    for (int k = 4; k <= 7; ++k)
      for (int s = 1; s <= k - 3; ++s)
        for (int n = 2 * k; n <= 20; ++n) {
          auto c = nontrivial_comparison(n, k, s, q);
          CHECK(c.lhs <= c.rhs);
          CHECK(c.margin() == c.rhs - c.lhs);
        }
}

TEST_CASE("bounds are nondecreasing in n") {
  for (int q : {2, 3})
    for (int n = 4; n < 30; ++n) {
      for (int d = 2; d + 1 <= n; ++d) CHECK(kleitman_bound(n, d, q).value <= kleitman_bound(n + 1, d, q).value);
      for (int t = 1; t + 1 <= n; ++t) {
        CHECK(typeA_even_bound(n, t, q).value <= typeA_even_bound(n + 1, t, q).value);
        CHECK(typeB_even_bound(n, t, q).value <= typeB_even_bound(n + 1, t, q).value);
      }
      for (int t = 2; 5 * t + 3 <= n; ++t) {
        CHECK(hm_excess(n, t, q) <= hm_excess(n + 1, t, q));
        CHECK(odd_stability_bound(n, t, q).value <= odd_stability_bound(n + 1, t, q).value);
      }
      for (int k = 1; 2 * k < n; ++k)
        CHECK(complementary_pair_bound(n, k, q).value <= complementary_pair_bound(n + 1, k, q).value);
      for (int k = 3; 2 * k + 2 <= n; ++k)
        CHECK(nontrivial_intersecting_bound(n, k, 1, q).value <= nontrivial_intersecting_bound(n + 1, k, 1, q).value);
    }
}
