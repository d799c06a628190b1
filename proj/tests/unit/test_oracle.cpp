#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qdiam/errors.hpp"
#include "qdiam/oracle.hpp"

using namespace qdiam;

namespace {

SearchOptions all_witnesses(int threads = 1) {
  SearchOptions o;
  o.enumerate_all = true;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("maximum bounded-diameter families match the bound") {
  struct Case {
    int q, n, d;
    unsigned long long optimum;
  };
  for (auto c : {Case{2, 3, 2, 8}, Case{2, 4, 2, 16}, Case{2, 4, 3, 23}, Case{3, 3, 2, 14}}) {
    CAPTURE(c.q);
    CAPTURE(c.n);
    CAPTURE(c.d);
    auto r = max_diameter_family(c.q, c.n, c.d, all_witnesses());
    CHECK(r.proven_optimal);
    CHECK(r.optimum == BigCount(c.optimum));
    CHECK(r.bound_name == "kleitman_bound");
    CHECK(r.bound_match);
    CHECK(r.witnesses_complete);
    for (const auto& w : r.witnesses) {
      CHECK(BigCount(w.size()) == r.optimum);
      CHECK(diameter(w).diameter <= c.d);
    }
    auto ch = verify_characterization(r);
    CHECK(ch.ok);
    CHECK(ch.expected_count == r.witness_count);
  }
}

TEST_CASE("census values") {
  CHECK(max_diameter_family(2, 4, 2, all_witnesses()).witness_count == 2);
  CHECK(max_diameter_family(2, 3, 2, all_witnesses()).witness_count == 4);
  CHECK(max_diameter_family(2, 4, 3, all_witnesses()).witness_count == 120);
  CHECK(count_max_intersecting_layers(2, 4, 2) == 30);
}

TEST_CASE("the n = d+2 even case is exactly L_t and U_t") {
  auto r = max_diameter_family(2, 4, 2, all_witnesses());
  REQUIRE(r.witnesses.size() == 1);
  auto l = lower_family(field_new(2), 4, 1);
  CHECK((r.witnesses[0] == l || r.witnesses[0] == upper_family(field_new(2), 4, 1)));
}

TEST_CASE("every diameter at small parameters") {
  for (int n = 3; n <= 4; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      auto r = max_diameter_family(2, n, d);
      CHECK(r.optimum == kleitman_bound(n, d, 2).value);
    }
  auto full = max_diameter_family(3, 3, 3);
  CHECK(full.optimum == BigCount(28));
  CHECK(full.bound_name == "lattice_size");
  CHECK(full.bound_match);
  CHECK(max_diameter_family(2, 4, 4).optimum == BigCount(67));
}

TEST_CASE("greedy constructions never beat the oracle") {
  for (int n = 3; n <= 5; ++n)
    for (int d = 2; d + 1 <= n; ++d) {
      auto r = max_diameter_family(2, n, d);
      const int t = d / 2;
      auto f = field_new(2);
      auto lower = d % 2 == 0 ? lower_family(f, n, t) : canonical_double_ball(coordinate_subspace(f, n, std::vector{0}), t);
      CHECK(BigCount(lower.size()) <= r.optimum);
      CHECK(BigCount(lower.size()) == r.optimum);
    }
}

TEST_CASE("results do not depend on threads or the layer cap") {
  auto a = max_diameter_family(2, 4, 3, all_witnesses(1));
  auto b = max_diameter_family(2, 4, 3, all_witnesses(4));
  SearchOptions nocap = all_witnesses(2);
  nocap.layer_cap = false;
  auto c = max_diameter_family(2, 4, 3, nocap);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.witnesses == c.witnesses);
  CHECK(a.witness_count == c.witness_count);
}

TEST_CASE("characterization negative control") {
  auto r = max_diameter_family(2, 4, 2, all_witnesses());
  REQUIRE(!r.witnesses.empty());
  CHECK_FALSE(equality_case_violation(r.witnesses[0], 2).has_value());

  // swap one line of L_1 for a plane: same size, but the plane misses most lines
  auto f = field_new(2);
  auto l = lower_family(f, 4, 1);
  std::vector<Subspace> members(l.begin(), l.end());
  members.back() = coordinate_subspace(f, 4, std::vector{0, 1});
  SubspaceFamily corrupted(f, 4, members);
  REQUIRE(corrupted.size() == l.size());
  auto why = equality_case_violation(corrupted, 2);
  REQUIRE(why.has_value());
  CHECK(why->find("diameter") != std::string::npos);

  SearchReport forged = r;
  forged.witnesses[0] = corrupted;
  auto ch = verify_characterization(forged);
  CHECK_FALSE(ch.ok);
  CHECK_FALSE(ch.diagnostics.empty());

  auto partial = max_diameter_family(2, 4, 2);
  CHECK_THROWS_AS(verify_characterization(partial), Error);
}

TEST_CASE("resource caps") {
  try {
    max_diameter_family(2, 9, 2);
    FAIL("no budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.would_be_count() == "8283458");
  }
  SearchOptions small;
  small.max_lattice = 10;
  CHECK_THROWS_AS(max_diameter_family(2, 3, 2, small), BudgetExceeded);
  CHECK_THROWS_AS(max_diameter_family(6, 3, 2), Error);
}

TEST_CASE("admissible searches") {
  auto a = max_admissible_family(2, 4, 3, ForbiddenClass::AOdd);
  CHECK(a.proven_optimal);
  CHECK(a.bound_name == "odd_stability_bound");
  CHECK_FALSE(a.bound_in_range);
  CHECK(a.optimum == BigCount(23));
  REQUIRE(!a.witnesses.empty());
  auto chk = is_admissible(a.witnesses[0], ForbiddenClass::AOdd, 1);
  CHECK(chk.admissible);

  auto e = max_admissible_family(2, 4, 2, ForbiddenClass::AEven, all_witnesses());
  CHECK(e.optimum == BigCount(9));
  for (const auto& w : e.witnesses) {
    CHECK(BigCount(w.size()) == e.optimum);
    CHECK(is_admissible(w, ForbiddenClass::AEven, 1).admissible);
  }

  auto b = max_admissible_family(2, 4, 2, ForbiddenClass::BEven);
  CHECK(b.bound_relation == "<");
  REQUIRE(!b.witnesses.empty());
  CHECK(is_admissible(b.witnesses[0], ForbiddenClass::BEven, 1).admissible);

  auto none = max_admissible_family(2, 3, 1, ForbiddenClass::BOdd);
  CHECK(none.infeasible);
  CHECK(none.optimum == BigCount(0));
  CHECK(none.witnesses.empty());

  CHECK_THROWS_AS(max_admissible_family(2, 4, 3, ForbiddenClass::AEven), Error);
}

TEST_CASE("sweeps") {
  auto l = inequality_sweep(nontrivial_grid());
  CHECK(l.pass);
  CHECK(l.rows.size() > 5000);
  auto h = inequality_sweep(hpositive_grid());
  CHECK(h.pass);
  SweepSpec profile;
  profile.kind = SweepKind::ProfileTotal;
  profile.qs = {2, 3};
  profile.n_max = 10;
  CHECK(inequality_sweep(profile).pass);

  SweepSpec empty;
  empty.kind = SweepKind::HPositive;
  empty.t_min = 3;
  empty.t_max = 2;
  auto v = inequality_sweep(empty);
  CHECK(v.rows.empty());
  CHECK(v.pass);

  // typeB < typeA only from a crossover point on; the crossover is reported
  auto tb = inequality_sweep(typeb_grid());
  CHECK(tb.failures > 0);
  bool mentions = false;
  for (const auto& note : tb.notes) mentions |= note.find("q=2 t=2: typeB < typeA from n = 19") != std::string::npos;
  CHECK(mentions);

  CHECK(parse_sweep_kind("nontrivial") == SweepKind::Nontrivial);
  CHECK(parse_sweep_kind("H-positive") == SweepKind::HPositive);
  CHECK_THROWS_AS(parse_sweep_kind("nope"), Error);
}

TEST_CASE("CSV and JSON output") {
  SweepSpec s = hpositive_grid();
  s.n_max = 14;
  auto r = inequality_sweep(s);
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "q,n,t,lhs,rhs,margin,pass");

  auto js = nlohmann::json::parse(sweep_to_json(r));
  CHECK(js["kind"] == "hpos");
  CHECK(js["rows"].size() == r.rows.size());

  auto rep = max_diameter_family(2, 3, 2, all_witnesses());
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["optimum"] == "8");
  CHECK(j["witness_count"] == "4");
  CHECK(j["bound"]["value"] == "8");
  CHECK(j["bound_match"] == true);
  CHECK(j["class"].is_null());
  REQUIRE(j["witnesses"].size() == rep.witnesses.size());
  std::istringstream fam(j["witnesses"][0].get<std::string>());
  CHECK(read_family(fam) == rep.witnesses[0]);
}
