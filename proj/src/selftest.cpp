#include "qdiam/selftest.hpp"

#include <random>

#include "qdiam/families.hpp"
#include "qdiam/grassmann.hpp"
#include "qdiam/oracle.hpp"
#include "qdiam/subspace.hpp"

namespace qdiam {

namespace {

constexpr int kFieldOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

SelftestCheck field_axioms() {
  for (int q : kFieldOrders) {
    const auto f = field_new(q);
    for (int a = 0; a < q; ++a) {
      if (f->add(a, f->neg(a)) != 0) return {"field_axioms", false, "additive inverse, q=" + std::to_string(q)};
      if (a != 0 && f->mul(a, f->inv(a)) != 1) return {"field_axioms", false, "inverse, q=" + std::to_string(q)};
      for (int b = 0; b < q; ++b) {
        if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a))
          return {"field_axioms", false, "commutativity, q=" + std::to_string(q)};
        for (int c = 0; c < q; ++c) {
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c)))
            return {"field_axioms", false, "distributivity, q=" + std::to_string(q)};
          if (f->mul(a, f->mul(b, c)) != f->mul(f->mul(a, b), c) || f->add(a, f->add(b, c)) != f->add(f->add(a, b), c))
            return {"field_axioms", false, "associativity, q=" + std::to_string(q)};
        }
      }
    }
  }
  return {"field_axioms", true, "q in {2,3,4,5,7,8,9,11,13,16}"};
}

std::string metric_violation(const Subspace& a, const Subspace& b, const Subspace& c) {
  const int ab = delta(a, b);
  if ((ab == 0) != (a == b)) return "identity of indiscernibles";
  if (ab != delta(b, a)) return "symmetry";
  if (ab > delta(a, c) + delta(c, b)) return "triangle inequality";
  if (ab != delta(perp(a), perp(b))) return "perp isometry";
  if (perp(perp(a)) != a) return "perp involution";
  if (ab != delta_via_intersection(a, b)) return "sum/intersection formulas disagree";
  if (contains(a, b) && ab != a.dim() - b.dim()) return "distance of nested pair";
  return {};
}

SelftestCheck metric_exhaustive() {
  for (int n = 1; n <= 3; ++n) {
    LatticeIndex idx(field_new(2), n);
    for (const auto& a : idx.all())
      for (const auto& b : idx.all())
        for (const auto& c : idx.all())
          if (auto bad = metric_violation(a, b, c); !bad.empty())
            return {"metric_exhaustive", false, bad + " at " + to_string(a) + ", " + to_string(b)};
  }
  return {"metric_exhaustive", true, "q=2, n<=3, all triples"};
}

SelftestCheck metric_random(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int q = i % 2 == 0 ? 2 : 3;
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto f = field_new(q);
    auto pick = [&]() { return random_subspace(f, n, static_cast<int>(rng() % (n + 1)), rng); };
    const auto a = pick(), b = pick(), c = pick();
    if (auto bad = metric_violation(a, b, c); !bad.empty())
      return {"metric_random", false, bad + " at " + to_string(a) + ", " + to_string(b)};
  }
  return {"metric_random", true, std::to_string(samples) + " triples, seed " + std::to_string(seed)};
}

SelftestCheck layer_counts() {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        if (BigCount(enumerate_layer(field_new(q), n, k).size()) != gauss_binom(n, k, q))
          return {"layer_counts", false, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k)};
  return {"layer_counts", true, "q in {2,3}, n<=4"};
}

SelftestCheck constructions() {
  const auto f = field_new(2);
  const int zero[] = {0};
  const auto x = coordinate_subspace(f, 5, zero);
  if (BigCount(canonical_double_ball(coordinate_subspace(f, 4, zero), 1).size()) != kleitman_bound(4, 3, 2).value)
    return {"constructions", false, "|D_1(X)| at n=4"};
  if (BigCount(lower_family(f, 4, 1).size()) != kleitman_bound(4, 2, 2).value)
    return {"constructions", false, "|L_1| at n=4"};
  if (BigCount(ball(x, 2).size()) != typeA_even_bound(5, 2, 2).value)
    return {"constructions", false, "|ball(X,2)| at n=5"};
  return {"constructions", true, "D_1, L_1 at n=4; ball(X,2) at n=5"};
}

SelftestCheck oracle_small() {
  SearchOptions opts;
  opts.enumerate_all = true;
  for (auto [q, n, d] : {std::tuple{2, 3, 2}, {2, 4, 2}, {2, 4, 3}, {3, 3, 2}}) {
    const auto r = max_diameter_family(q, n, d, opts);
    const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
    if (!r.bound_match) return {"oracle_small", false, "optimum " + r.optimum.str() + " != bound at " + where};
    if (!verify_characterization(r).ok) return {"oracle_small", false, "characterization at " + where};
  }
  return {"oracle_small", true, "(2,3,2) (2,4,2) (2,4,3) (3,3,2)"};
}

SelftestCheck sweep(const char* name, SweepSpec spec) {
  const auto r = inequality_sweep(spec);
  return {name, r.pass, std::to_string(r.rows.size()) + " tuples, " + std::to_string(r.failures) + " failures"};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, int samples) {
  std::vector<SelftestCheck> out;
  out.push_back(field_axioms());
  out.push_back(metric_exhaustive());
  out.push_back(metric_random(seed, samples));
  out.push_back(layer_counts());
  out.push_back(constructions());
  out.push_back(oracle_small());
  out.push_back(sweep("sweep_nontrivial", nontrivial_grid()));
  out.push_back(sweep("sweep_hpos", hpositive_grid()));
  return out;
}

}  // namespace qdiam
