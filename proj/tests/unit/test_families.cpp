#include <random>
#include <sstream>

#include "doctest.h"
#include "qdiam/errors.hpp"
#include "qdiam/families.hpp"
#include "qdiam/qcount.hpp"

using namespace qdiam;

namespace {

Subspace coords(int q, int n, std::vector<int> idx) { return coordinate_subspace(field_new(q), n, idx); }
BigCount sz(const SubspaceFamily& f) { return BigCount(f.size()); }
BigCount gb(int n, int k, int q) { return gauss_binom(n, k, q); }

BigCount lower_sum(int n, int t, int q) {
  BigCount s;
  for (int i = 0; i <= t; ++i) s += gb(n, i, q);
  return s;
}

// Pairwise maximum without any pruning.
int slow_diameter(const SubspaceFamily& f) {
  int best = 0;
  for (const auto& a : f)
    for (const auto& b : f) best = std::max(best, delta(a, b));
  return best;
}

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

TEST_CASE("balls") {
  auto c = coords(2, 4, {0, 2});
  auto b0 = ball(c, 0);
  CHECK(b0.size() == 1);
  CHECK(b0.contains(c));
  auto f = field_new(2);
  CHECK(ball(Subspace::zero(f, 5), 2) == lower_family(f, 5, 2));
  CHECK(double_ball(c, c, 1) == ball(c, 1));
  auto x = coords(2, 4, {0});
  CHECK(double_ball(Subspace::zero(f, 4), x, 1) == canonical_double_ball(x, 1));
  CHECK(sz(canonical_double_ball(x, 1)) == BigCount(23));
  CHECK(sz(canonical_double_ball(x, 1)) == kleitman_bound(4, 3, 2).value);
  CHECK(code_of([&] { ball(c, -1); }) == Errc::ParameterOutOfRange);
}

TEST_CASE("ball around a line, membership by dimension") {
  // A in B(X,t) iff dim A <= t-1, or dim A in {t, t+1} and X <= A
  const int n = 6, t = 2;
  auto x = coords(2, n, {3});
  auto b = ball(x, t);
  LatticeIndex idx(field_new(2), n);
  for (const auto& a : idx.all()) {
    const bool expected = a.dim() <= t - 1 || ((a.dim() == t || a.dim() == t + 1) && contains(a, x));
    CHECK(b.contains(a) == expected);
  }
  CHECK(sz(b) == typeA_even_bound(n, t, 2).value);
}

TEST_CASE("canonical families") {
  auto f2 = field_new(2);
  CHECK(sz(lower_family(f2, 5, 2)) == BigCount(187));
  for (int q : {2, 3})
    for (int n = 2; n <= 5; ++n)
      for (int t = 0; 2 * t + 1 <= n; ++t) {
        auto f = field_new(q);
        auto l = canonical_family(f, n, t, CanonicalKind::Lower);
        auto u = canonical_family(f, n, t, CanonicalKind::Upper);
        CHECK(perp_family(l) == u);
        CHECK(sz(l) == lower_sum(n, t, q));
        for (const auto& s : l) CHECK_FALSE(u.contains(s));
        if (n >= 2 * t) CHECK(diameter(l).diameter == 2 * t);
        if (t >= 1 && n >= 2 * t + 2) {
          auto d = canonical_family(f, n, t, CanonicalKind::DoubleBall, coordinate_subspace(f, n, std::vector{1}));
          CHECK(sz(d) == kleitman_bound(n, 2 * t + 1, q).value);
          CHECK(diameter(d).diameter == 2 * t + 1);
        }
      }
  CHECK(code_of([&] { canonical_family(f2, 4, 1, CanonicalKind::DoubleBall); }) == Errc::InvalidConfiguration);
  CHECK(code_of([&] { canonical_double_ball(coords(2, 4, {0, 1}), 1); }) == Errc::InvalidConfiguration);
}

TEST_CASE("stars") {
  auto x = coords(2, 4, {0});
  CHECK(star(2, x).size() == 7);
  CHECK(star(1, x).size() == 1);
  CHECK(star(4, x).layer(4).size() == 1);
  for (int q : {2, 3})
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        auto s = star(k, coords(q, n, {n - 1}));
        CHECK(sz(s) == gb(n - 1, k - 1, q));
        CHECK(is_s_intersecting(s.members(), 1));
      }
  auto f = field_new(2);
  CHECK_FALSE(is_s_intersecting(enumerate_layer(f, 4, 2), 1));
  CHECK(is_s_intersecting(enumerate_layer(f, 5, 3), 1));
}

TEST_CASE("Hilton-Milner families") {
  auto x = coords(2, 7, {0});
  auto y = coords(2, 7, {1, 2, 3});
  auto hm = hm_family(3, x, y);
  CHECK(hm.size() == 211);
  CHECK(sz(hm) == nontrivial_intersecting_bound(7, 3, 1, 2).value);
  CHECK(is_s_intersecting(hm.members(), 1));
  CHECK(common_intersection(hm.field(), 7, hm.members()).dim() == 0);  // nontrivial

  auto k = k_family(3, x, y);
  CHECK(k.size() == 3006);
  CHECK(sz(k) == odd_stability_bound(7, 2, 2).value);
  CHECK(diameter(k).diameter <= 5);

  auto hs = hm_star3(y);
  CHECK(hs.contains(y));
  CHECK(sz(hs) == BigCount(1 + 2 * 15 * 7));  // Y plus q[n-3 1] further 3-spaces per plane of Y
  auto ks = k_star3(y);
  CHECK(lower_family(x.field(), 7, 2).is_subfamily_of(ks));
  CHECK(diameter(ks).diameter <= 5);

  for (int q : {2, 3})
    for (int n = 6; n <= (q == 2 ? 8 : 6); ++n) {
      auto hq = hm_family(3, coords(q, n, {0}), coords(q, n, {1, 2, 3}));
      CHECK(sz(hq) == nontrivial_intersecting_bound(n, 3, 1, q).value);
      auto sq = hm_star3(coords(q, n, {0, 1, 2}));
      CHECK(sz(sq) == BigCount(1) + BigCount(q) * gb(3, 1, q) * gb(n - 3, 1, q));
    }
  CHECK(sz(hm_family(4, coords(2, 8, {0}), coords(2, 8, {1, 2, 3, 4}))) == nontrivial_intersecting_bound(8, 4, 1, 2).value);

  CHECK(code_of([&] { hm_family(3, x, coords(2, 7, {0, 1, 2})); }) == Errc::InvalidConfiguration);
  CHECK(code_of([&] { hm_family(3, x, coords(2, 7, {1, 2})); }) == Errc::InvalidConfiguration);
  CHECK(code_of([&] { hm_star3(coords(2, 7, {1, 2})); }) == Errc::InvalidConfiguration);
}

TEST_CASE("measures") {
  auto f = field_new(2);
  SubspaceFamily single(f, 3, {coords(2, 3, {1})});
  CHECK(diameter(single).diameter == 0);
  SubspaceFamily ends(f, 3, {Subspace::zero(f, 3), Subspace::full(f, 3)});
  CHECK(diameter(ends).diameter == 3);
  CHECK(dim_spread(ends) == 3);
  CHECK(min_supp_norm(ends) == 0);
  CHECK(code_of([&] { diameter(SubspaceFamily(f, 3)); }) == Errc::EmptyFamily);
  CHECK(code_of([&] { is_s_intersecting({}, 1); }) == Errc::EmptyFamily);
  CHECK(diameter(lower_family(f, 5, 2), 1).diameter > 1);  // early exit still exceeds the threshold
}

TEST_CASE("perp preserves diameter and mirrors the support") {
  auto f = field_new(2);
  std::vector<SubspaceFamily> fams{
      lower_family(f, 5, 2),
      canonical_double_ball(coords(2, 5, {4}), 1),
      ball(coords(2, 5, {0, 1}), 2),
      star(3, coords(2, 5, {2})),
      k_family(3, coords(2, 7, {0}), coords(2, 7, {1, 2, 3})),
  };
  for (const auto& fam : fams) {
    auto p = perp_family(fam);
    CHECK(p.size() == fam.size());
    CHECK(perp_family(p) == fam);
    CHECK(diameter(p).diameter == diameter(fam).diameter);
    std::vector<int> mirrored;
    for (int k : fam.support()) mirrored.insert(mirrored.begin(), fam.ambient_dim() - k);
    CHECK(p.support() == mirrored);
  }
}

TEST_CASE("random subfamilies of balls: layer cross-intersection and support bound") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 300; ++round) {
    const int q = round % 3 == 0 ? 3 : 2;
    const int n = q == 2 ? 3 + static_cast<int>(rng() % 4) : 3 + static_cast<int>(rng() % 2);
    auto f = field_new(q);
    auto c = random_subspace(f, n, static_cast<int>(rng() % (n + 1)), rng);
    auto b = ball(c, 1 + static_cast<int>(rng() % 2));
    std::vector<Subspace> pick;
    for (const auto& s : b)
      if (rng() % 3 == 0) pick.push_back(s);
    if (pick.empty()) continue;
    SubspaceFamily fam(f, n, pick);
    const int d = diameter(fam).diameter;
    CHECK(d == slow_diameter(fam));
    CHECK(dim_spread(fam) <= d);
    CHECK_FALSE(find_layer_intersection_violation(fam, d).has_value());
    for (int i : fam.support())
      for (int j : fam.support()) {
        const int need = (i + j - d + 1) / 2;
        if (i + j - d > 0) CHECK(is_cross_intersecting(fam.layer(i), fam.layer(j), need));
      }
    CHECK(2 * min_supp_norm(fam) <= n - dim_spread(fam));
  }
}

TEST_CASE("layer violation names a pair") {
  auto f = field_new(2);
  SubspaceFamily two_planes(f, 4, {coords(2, 4, {0, 1}), coords(2, 4, {2, 3})});
  auto v = find_layer_intersection_violation(two_planes, 3);
  REQUIRE(v.has_value());
  CHECK(v->i == 2);
  CHECK(v->j == 2);
  CHECK(v->required == 1);
}

TEST_CASE("admissibility") {
  auto f2 = field_new(2);
  {
    auto x = coords(2, 6, {0});
    auto b = ball(x, 2);
    CHECK(is_admissible(b, ForbiddenClass::AEven, 2).admissible);
    auto r = is_admissible(b, ForbiddenClass::BEven, 2);
    CHECK_FALSE(r.admissible);
    REQUIRE(r.witness_centers.size() == 1);
    CHECK(ball(r.witness_centers[0], 2).size() == b.size());
  }
  {
    auto l = lower_family(f2, 4, 1);
    auto r = is_admissible(l, ForbiddenClass::AEven, 1);
    CHECK_FALSE(r.admissible);
    CHECK(r.witness_kind == "L_t");
    CHECK_FALSE(is_admissible(upper_family(f2, 4, 1), ForbiddenClass::AEven, 1).admissible);
    auto wide = is_admissible(lower_family(f2, 4, 2), ForbiddenClass::AEven, 1);
    CHECK_FALSE(wide.diameter_ok);
    CHECK_FALSE(wide.admissible);
  }
  {
    auto x = coords(2, 7, {0});
    auto y = coords(2, 7, {1, 2, 3});
    for (const auto& fam : {k_family(3, x, y), k_star3(y)}) {
      CHECK(is_admissible(fam, ForbiddenClass::AOdd, 2).admissible);
      CHECK(is_admissible(fam, ForbiddenClass::BOdd, 2).admissible);
    }
    auto d = canonical_double_ball(x, 2);
    auto ra = is_admissible(d, ForbiddenClass::AOdd, 2);
    CHECK_FALSE(ra.admissible);
    CHECK(ra.witness_kind == "D_t(X)");
    CHECK_FALSE(is_admissible(perp_family(d), ForbiddenClass::AOdd, 2).admissible);
    CHECK_FALSE(is_admissible(d, ForbiddenClass::BOdd, 2).admissible);
  }
  CHECK_FALSE(is_admissible(SubspaceFamily(f2, 3), ForbiddenClass::AEven, 1).admissible);
  CHECK(class_diameter(ForbiddenClass::BOdd, 2) == 5);
  CHECK(parse_forbidden_class("a-odd") == ForbiddenClass::AOdd);
  CHECK(parse_forbidden_class("B_EVEN") == ForbiddenClass::BEven);
  CHECK_THROWS_AS(parse_forbidden_class("C_odd"), Error);
}

TEST_CASE("B_odd admissibility implies A_odd admissibility") {
  auto f = field_new(2);
  std::mt19937_64 rng(5);
  std::vector<SubspaceFamily> fams{
      canonical_double_ball(coords(2, 5, {0}), 1), k_family(2, coords(2, 5, {0}), coords(2, 5, {1, 2})),
      lower_family(f, 5, 1), ball(coords(2, 5, {0, 1}), 1), star(2, coords(2, 5, {4}))};
  for (int i = 0; i < 40; ++i) {
    auto b = ball(random_subspace(f, 5, static_cast<int>(rng() % 6), rng), 2);
    std::vector<Subspace> pick;
    for (const auto& s : b)
      if (rng() % 2) pick.push_back(s);
    if (!pick.empty()) fams.emplace_back(f, 5, pick);
  }
  for (const auto& fam : fams)
    for (int t = 1; t <= 2; ++t)
      if (is_admissible(fam, ForbiddenClass::BOdd, t).admissible)
        CHECK(is_admissible(fam, ForbiddenClass::AOdd, t).admissible);
}

TEST_CASE("family files") {
  auto fam = canonical_double_ball(coords(3, 3, {0}), 1);
  std::stringstream ss;
  write_family(ss, fam);
  CHECK(ss.str().rfind("family 3 3 " + std::to_string(fam.size()) + "\n", 0) == 0);
  CHECK(read_family(ss) == fam);

  std::istringstream empty("family 2 3 0\n");
  CHECK(read_family(empty).empty());

  std::istringstream bad_row("family 2 3 2\n2:3:0:\n2:3:1:120\n");
  try {
    read_family(bad_row);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream not_rref("family 2 3 1\n2:3:2:010,100\n");
  try {
    read_family(not_rref);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream wrong_count("family 2 3 3\n2:3:0:\n");
  CHECK_THROWS_AS(read_family(wrong_count), ParseError);
  std::istringstream wrong_space("family 2 3 1\n2:4:0:\n");
  CHECK_THROWS_AS(read_family(wrong_space), Error);
  std::istringstream header("famly 2 3 1\n2:3:0:\n");
  CHECK_THROWS_AS(read_family(header), ParseError);
}
