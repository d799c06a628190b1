#include "qdiam/oracle.hpp"

#include <algorithm>
#include <set>

#include "qdiam/clique.hpp"
#include "qdiam/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qdiam {

namespace {

using Clock = std::chrono::steady_clock;

// The subspace lattice as a graph on internal vertex numbers (degeneracy order).
struct LatticeGraph {
  LatticeIndex index;
  std::vector<std::size_t> to_lattice;    // internal -> lattice index
  std::vector<std::size_t> to_internal;   // lattice index -> internal
  std::vector<Bits> adjacency;            // internal numbering
  std::vector<Bits> layer_masks;          // internal numbering, per dimension
  std::vector<std::size_t> layer_sizes;   // [n k]

  LatticeGraph(int q, int n, int d, const SearchOptions& options)
      : index(field_new(q), n, EnumerationBudget{options.max_lattice, EnumerationBudget::kDefaultMemoryBytes, 1}) {
    index.materialize_distances();
    const std::size_t v = index.size();
    std::vector<Bits> adj(v, Bits(v));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if (i != j && index.distance(i, j) <= d) adj[i].set(j);
    to_lattice = degeneracy_order(adj);
    to_internal.assign(v, 0);
    for (std::size_t i = 0; i < v; ++i) to_internal[to_lattice[i]] = i;
    adjacency.assign(v, Bits(v));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j : adj[to_lattice[i]].indices()) adjacency[i].set(to_internal[j]);
    layer_masks.assign(n + 1, Bits(v));
    layer_sizes.assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      const auto [b, e] = index.layer_range(k);
      for (std::size_t i = b; i < e; ++i) layer_masks[k].set(to_internal[i]);
      layer_sizes[k] = e - b;
    }
  }

  std::size_t size() const { return index.size(); }
  int n() const { return index.ambient_dim(); }

  Bits internal_mask(const std::function<bool(std::size_t lattice_idx)>& pred) const {
    Bits m(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (pred(i)) m.set(to_internal[i]);
    return m;
  }

  // For a family of diameter <= d < n the layers k and n-k form a
  // cross-1-intersecting pair. The k-spaces and (n-k)-spaces meeting
  // trivially form a regular bipartite graph with sides of equal size
  // [n k], so any such pair has at most [n k] members in total.
  std::size_t layer_cap(const Bits& cand) const {
    const int nn = n();
    std::size_t bound = 0;
    for (int k = 0; 2 * k < nn; ++k) {
      const std::size_t c = cand.count_and(layer_masks[k]) + cand.count_and(layer_masks[nn - k]);
      bound += std::min(c, layer_sizes[k]);
    }
    if (nn % 2 == 0) bound += cand.count_and(layer_masks[nn / 2]);
    return bound;
  }

  Bits to_lattice_bits(const Bits& internal) const {
    Bits out(size());
    for (std::size_t i : internal.indices()) out.set(to_lattice[i]);
    return out;
  }

  Bits perp_bits(const Bits& lattice_bits) const {
    Bits out(size());
    for (std::size_t i : lattice_bits.indices()) out.set(index.perp_index(i));
    return out;
  }

  SubspaceFamily family(const Bits& lattice_bits) const {
    std::vector<Subspace> members;
    for (std::size_t i : lattice_bits.indices()) members.push_back(index[i]);
    return SubspaceFamily(index.field(), n(), std::move(members));
  }
};

void fill_witnesses(SearchReport& report, const LatticeGraph& graph, const CliqueResult& result,
                    const SearchOptions& options) {
  report.witness_count = result.clique_count;
  std::set<Bits> classes;
  for (const auto& c : result.cliques) {
    Bits lat = graph.to_lattice_bits(c);
    Bits dual = graph.perp_bits(lat);
    classes.insert(std::min(lat, dual));
  }
  for (const auto& b : classes) report.witnesses.push_back(graph.family(b));
  report.witnesses_complete =
      options.enumerate_all && result.proven_optimal && result.cliques.size() == result.clique_count;
}

CliqueProblem base_problem(const LatticeGraph& graph, int d, const SearchOptions& options) {
  CliqueProblem problem;
  problem.adjacency = graph.adjacency;
  problem.collect_all = options.enumerate_all;
  problem.max_collected = options.enumerate_all ? options.max_witnesses : 1;
  problem.threads = options.threads;
  problem.timeout = std::chrono::duration_cast<std::chrono::milliseconds>(options.timeout);
  if (options.layer_cap && graph.n() >= d + 1)
    problem.extra_bound = [&graph](const Bits& cand) { return graph.layer_cap(cand); };
  return problem;
}

void check_params(int q, int n, int d) {
  if (n < 0 || d < 0)
    throw Error(Errc::ParameterOutOfRange, "n and d must be nonnegative");
  (void)field_new(q);
}

}  // namespace

SearchReport max_diameter_family(int q, int n, int d, const SearchOptions& options) {
  check_params(q, n, d);
  const auto start = Clock::now();
  const LatticeGraph graph(q, n, d, options);

  const CliqueResult result = max_clique(base_problem(graph, d, options));

  SearchReport report;
  report.q = q;
  report.n = n;
  report.d = d;
  report.enumerate_all = options.enumerate_all;
  report.threads = options.threads;
  report.optimum = BigCount(result.best_size);
  report.proven_optimal = result.proven_optimal;
  report.nodes_explored = result.nodes;
  fill_witnesses(report, graph, result, options);

  if (n >= d + 1 && d >= 2) {
    const auto kb = kleitman_bound(n, d, q);
    report.bound_name = "kleitman_bound";
    report.bound_value = kb.value;
    report.bound_in_range = kb.in_hypothesis_range;
  } else if (d >= n) {
    report.bound_name = "lattice_size";
    report.bound_value = BigCount(graph.size());
    report.bound_in_range = true;
    report.notes.push_back("d >= n: every pair is within distance d");
  } else {
    report.notes.push_back("no closed form for d < 2");
  }
  if (report.bound_value) {
    report.bound_relation = "==";
    report.bound_match = report.proven_optimal && report.optimum == *report.bound_value;
  }
  if (!report.proven_optimal) report.notes.push_back("timeout: optimum is a lower bound only");
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

SearchReport max_admissible_family(int q, int n, int d, ForbiddenClass cls, const SearchOptions& options) {
  check_params(q, n, d);
  const bool even = cls == ForbiddenClass::AEven || cls == ForbiddenClass::BEven;
  if (even != (d % 2 == 0))
    throw Error(Errc::ParameterOutOfRange, std::string(forbidden_class_name(cls)) + " needs " +
                                               (even ? "an even" : "an odd") + " diameter, got d = " + std::to_string(d));
  const int t = d / 2;
  const auto start = Clock::now();
  const LatticeGraph graph(q, n, d, options);
  const LatticeIndex& idx = graph.index;

  std::vector<Bits> forbidden;
  switch (cls) {
    case ForbiddenClass::AEven:
      forbidden.push_back(graph.internal_mask([&](std::size_t i) { return idx[i].dim() <= t; }));
      forbidden.push_back(graph.internal_mask([&](std::size_t i) { return idx[i].dim() >= n - t; }));
      break;
    case ForbiddenClass::AOdd: {
      if (n >= 1) {
        for (const auto& x : idx.layer(1)) {
          auto in_d = [&](std::size_t i) {
            const auto& a = idx[i];
            return a.dim() <= t || (a.dim() == t + 1 && contains(a, x));
          };
          forbidden.push_back(graph.internal_mask(in_d));
          forbidden.push_back(graph.internal_mask([&](std::size_t i) { return in_d(idx.perp_index(i)); }));
        }
      }
      break;
    }
    case ForbiddenClass::BEven:
      for (std::size_t c = 0; c < idx.size(); ++c)
        forbidden.push_back(graph.internal_mask([&](std::size_t i) { return idx.distance(i, c) <= t; }));
      break;
    case ForbiddenClass::BOdd:
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
          if (idx[b].dim() == idx[a].dim() + 1 && idx.distance(a, b) == 1)
            forbidden.push_back(graph.internal_mask(
                [&](std::size_t i) { return idx.distance(i, a) <= t || idx.distance(i, b) <= t; }));
      break;
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  CliqueProblem problem = base_problem(graph, d, options);
  problem.accept = [&forbidden](const Bits& r) {
    if (r.none()) return false;
    return std::none_of(forbidden.begin(), forbidden.end(), [&r](const Bits& h) { return r.subset_of(h); });
  };
  problem.dead_end = [&forbidden](const Bits&, const Bits& cand) {
    return std::any_of(forbidden.begin(), forbidden.end(), [&cand](const Bits& h) { return cand.subset_of(h); });
  };
  const CliqueResult result = max_clique(problem);

  SearchReport report;
  report.q = q;
  report.n = n;
  report.d = d;
  report.forbidden = cls;
  report.enumerate_all = options.enumerate_all;
  report.threads = options.threads;
  report.optimum = BigCount(result.best_size);
  report.proven_optimal = result.proven_optimal;
  report.infeasible = result.proven_optimal && result.best_size == 0;
  report.nodes_explored = result.nodes;
  fill_witnesses(report, graph, result, options);
  report.notes.push_back(std::to_string(forbidden.size()) + " distinct forbidden configurations");
  if (report.infeasible) report.notes.push_back("Infeasible: every family of diameter <= d lies in a forbidden configuration");

  try {
    BoundValue bv;
    if (cls == ForbiddenClass::AEven) {
      bv = typeA_even_bound(n, t, q);
      report.bound_name = "typeA_even_bound";
      report.bound_relation = "==";
    } else if (cls == ForbiddenClass::BEven) {
      bv = typeB_even_bound(n, t, q);
      report.bound_name = "typeB_even_bound";
      report.bound_relation = "<";
    } else {
      bv = odd_stability_bound(n, t, q);
      report.bound_name = "odd_stability_bound";
      report.bound_relation = "==";
    }
    report.bound_value = bv.value;
    report.bound_in_range = bv.in_hypothesis_range;
    report.bound_match = report.proven_optimal && (report.bound_relation == "<" ? report.optimum < bv.value
                                                                                 : report.optimum == bv.value);
    const bool below = report.optimum <= bv.value;
    report.notes.push_back("observation: optimum " + report.optimum.str() + (below ? " <= " : " > ") +
                           report.bound_name + " = " + bv.value.str() +
                           (bv.in_hypothesis_range ? " (inside the proved range)"
                                                   : " (below the proved range " + bv.hypothesis + "; not a theorem check)"));
  } catch (const Error& e) {
    report.notes.push_back(std::string("no stability formula at these parameters: ") + e.what());
  }
  if (!report.proven_optimal) report.notes.push_back("timeout: optimum is a lower bound only");
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------- characterization

std::optional<std::string> equality_case_violation(const SubspaceFamily& f, int d) {
  const int n = f.ambient_dim();
  const int q = f.q();
  const int t = d / 2;
  if (d < 2 || n < d + 1) return "parameters outside n >= d+1 >= 3";
  const BigCount bound = kleitman_bound(n, d, q).value;
  if (BigCount(f.size()) != bound) return "size " + std::to_string(f.size()) + " != bound " + bound.str();
  if (diameter(f).diameter > d) return "diameter exceeds d";

  auto full = [&](const SubspaceFamily& g, int k) { return BigCount(g.layer_size(k)) == gauss_binom(n, k, q); };
  auto split_ok = [&](const SubspaceFamily& g) -> std::optional<std::string> {
    for (int k = 0; k <= t; ++k) {
      const bool low = full(g, k) && g.layer_size(n - k) == 0;
      const bool high = g.layer_size(k) == 0 && full(g, n - k);
      if (!low && !high)
        return "layers " + std::to_string(k) + "/" + std::to_string(n - k) + " do not split completely";
    }
    return std::nullopt;
  };

  auto match = [&](const SubspaceFamily& g) -> std::optional<std::string> {
    if (n >= d + 2) {
      for (int k = 0; k <= t; ++k)
        if (!full(g, k)) return "layer " + std::to_string(k) + " is not complete";
      if (d % 2 == 0) return std::nullopt;  // size forces nothing else
      const auto top = g.layer(t + 1);
      if (BigCount(top.size()) != gauss_binom(n - 1, t, q))
        return "layer " + std::to_string(t + 1) + " has the wrong size";
      if (common_intersection(g.field(), n, top).dim() < 1)
        return "layer " + std::to_string(t + 1) + " is not a star";
      return std::nullopt;
    }
    if (auto bad = split_ok(g)) return bad;
    if (d % 2 == 0) return std::nullopt;
    const auto mid = g.layer(t + 1);
    if (BigCount(mid.size()) != gauss_binom(n - 1, t, q))
      return "middle layer " + std::to_string(t + 1) + " has the wrong size";
    if (!is_s_intersecting(mid, 1)) return "middle layer is not 1-intersecting";
    return std::nullopt;
  };

  const auto direct = match(f);
  if (!direct) return std::nullopt;
  const auto dual = match(perp_family(f));
  if (!dual) return std::nullopt;
  return *direct + " (perp: " + *dual + ")";
}

std::uint64_t count_max_intersecting_layers(int q, int n, int k, const SearchOptions& options) {
  const Field field = field_new(q);
  const auto layer = enumerate_layer(field, n, k, EnumerationBudget{options.max_lattice});
  const std::size_t v = layer.size();
  std::vector<Bits> adj(v, Bits(v));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j && intersection_dim(layer[i], layer[j]) >= 1) adj[i].set(j);
  const auto order = degeneracy_order(adj);
  std::vector<std::size_t> pos(v);
  for (std::size_t i = 0; i < v; ++i) pos[order[i]] = i;
  CliqueProblem problem;
  problem.adjacency.assign(v, Bits(v));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j : adj[order[i]].indices()) problem.adjacency[i].set(pos[j]);
  problem.collect_all = true;
  problem.max_collected = 0;
  problem.threads = options.threads;
  const auto result = max_clique(problem);
  if (BigCount(result.best_size) != gauss_binom(n - 1, k - 1, q)) return 0;
  return result.clique_count;
}

CharacterizationResult verify_characterization(const SearchReport& report) {
  if (report.forbidden || !report.enumerate_all || !report.witnesses_complete || !report.proven_optimal)
    throw Error(Errc::NotExhaustive, "characterization needs a complete enumerate_all diameter search");
  CharacterizationResult res;
  const int n = report.n, d = report.d, q = report.q, t = d / 2;
  if (d < 2 || n < d + 1) {
    res.diagnostics.push_back("parameters outside n >= d+1 >= 3; no characterization");
    return res;
  }
  if (!report.bound_match) res.diagnostics.push_back("optimum does not match kleitman_bound");

  if (n >= d + 2) {
    res.pattern = d % 2 == 0 ? "L_t" : "D_t(X)";
    res.expected_count = d % 2 == 0 ? 2 : 2 * gauss_binom(n, 1, q).to_u64();
  } else {
    res.pattern = d % 2 == 0 ? "split" : "split+intersecting";
    res.expected_count = std::uint64_t{1} << (t + 1);
    if (d % 2 == 1) res.expected_count *= count_max_intersecting_layers(q, n, t + 1);
  }
  for (std::size_t i = 0; i < report.witnesses.size(); ++i)
    if (auto bad = equality_case_violation(report.witnesses[i], d))
      res.diagnostics.push_back("witness " + std::to_string(i) + ": " + *bad);
  if (report.witness_count != res.expected_count)
    res.diagnostics.push_back("census: found " + std::to_string(report.witness_count) + " maximum families, expected " +
                              std::to_string(res.expected_count));
  res.ok = res.diagnostics.empty();
  return res;
}

}  // namespace qdiam

// ---------------------------------------------------------------- sweeps

namespace qdiam {

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Nontrivial: return "nontrivial";
    case SweepKind::HPositive: return "hpos";
    case SweepKind::TypeBBelowTypeA: return "typeb";
    case SweepKind::ProfileTotal: return "profile";
  }
  return "?";
}

SweepKind parse_sweep_kind(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "nontrivial") return SweepKind::Nontrivial;
  if (s == "hpos" || s == "hpositive") return SweepKind::HPositive;
  if (s == "typeb" || s == "typebbelowtypea") return SweepKind::TypeBBelowTypeA;
  if (s == "profile" || s == "profiletotal") return SweepKind::ProfileTotal;
  throw Error(Errc::ParameterOutOfRange, "unknown sweep kind '" + text + "' (nontrivial, hpos, typeb, profile)");
}

SweepSpec nontrivial_grid() {
  SweepSpec s;
  s.kind = SweepKind::Nontrivial;
  s.qs = {2, 3, 4};
  s.n_max = 40;
  s.k_max = 20;
  return s;
}

SweepSpec hpositive_grid() {
  SweepSpec s;
  s.kind = SweepKind::HPositive;
  s.qs = {2, 3};
  s.n_max = 40;
  s.t_min = 2;
  s.t_max = 4;
  return s;
}

SweepSpec typeb_grid() {
  SweepSpec s;
  s.kind = SweepKind::TypeBBelowTypeA;
  s.qs = {2, 3};
  s.n_max = 0;  // 12t
  s.t_min = 2;
  s.t_max = 3;
  return s;
}

namespace {

BigInt gbi(int n, int k, int q) { return gauss_binom(n, k, q).value(); }

SweepRow make_row(std::vector<std::pair<std::string, int>> params, BigInt lhs, BigInt rhs, bool pass) {
  SweepRow row;
  row.params = std::move(params);
  row.margin = rhs - lhs;
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  row.pass = pass;
  return row;
}

}  // namespace

SweepReport inequality_sweep(const SweepSpec& spec) {
  SweepReport rep;
  rep.kind = spec.kind;
  for (int q : spec.qs) {
    (void)field_new(q);
    switch (spec.kind) {
      case SweepKind::Nontrivial:
        for (int k = 4; k <= spec.k_max; ++k)
          for (int s = 1; s <= k - 3; ++s)
            for (int n = std::max(2 * k, spec.n_min); n <= spec.n_max; ++n) {
              auto c = nontrivial_comparison(n, k, s, q);
              const bool ok = c.lhs <= c.rhs;
              rep.rows.push_back(make_row({{"q", q}, {"n", n}, {"k", k}, {"s", s}}, c.lhs, c.rhs, ok));
            }
        break;
      case SweepKind::HPositive:
        for (int t = spec.t_min; t <= spec.t_max; ++t)
          for (int n = std::max(5 * t + 3, spec.n_min); n <= spec.n_max; ++n) {
            // signed: a negative value must show up as a failure, not an exception
            BigInt h = gbi(n - 1, t, q) - q_pow(q, static_cast<long long>(t) * (t + 1)) * gbi(n - t - 2, t, q) +
                       q_pow(q, t + 1);
            const bool ok = h > 0;
            rep.rows.push_back(make_row({{"q", q}, {"n", n}, {"t", t}}, BigInt(0), h, ok));
          }
        break;
      case SweepKind::TypeBBelowTypeA:
        for (int t = spec.t_min; t <= spec.t_max; ++t) {
          const int hi = spec.n_max > 0 ? spec.n_max : 12 * t;
          int crossover = -1;  // first n of the final passing run
          for (int n = std::max(6 * t, spec.n_min); n <= hi; ++n) {
            BigInt b = typeB_even_bound(n, t, q).value.value();
            BigInt a = typeA_even_bound(n, t, q).value.value();
            const bool ok = b < a;
            if (ok && crossover < 0) crossover = n;
            if (!ok) crossover = -1;
            rep.rows.push_back(make_row({{"q", q}, {"n", n}, {"t", t}}, b, a, ok));
          }
          rep.notes.push_back("q=" + std::to_string(q) + " t=" + std::to_string(t) + ": " +
                              (crossover >= 0 ? "typeB < typeA from n = " + std::to_string(crossover) + " on"
                                         : std::string("typeB >= typeA on the whole range")));
        }
        break;
      case SweepKind::ProfileTotal: {
        const int hi = spec.n_max > 0 ? spec.n_max : 10;
        for (int n = std::max(0, spec.n_min); n <= hi; ++n)
          for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
              BigInt sum = 0;
              for (int j = 0; j <= std::min(k, l); ++j) sum += count_profile(n, k, l, j, q).value();
              BigInt total = gbi(n, l, q);
              rep.rows.push_back(make_row({{"q", q}, {"n", n}, {"k", k}, {"l", l}}, sum, total, sum == total));
            }
        break;
      }
    }
  }
  for (const auto& r : rep.rows)
    if (!r.pass) ++rep.failures;
  rep.pass = rep.failures == 0;
  if (rep.rows.empty()) rep.notes.push_back("empty grid: vacuous pass");
  return rep;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  if (report.rows.empty()) {
    out << "lhs,rhs,margin,pass\n";
    return;
  }
  for (const auto& [name, _] : report.rows.front().params) out << name << ',';
  out << "lhs,rhs,margin,pass\n";
  for (const auto& r : report.rows) {
    for (const auto& [_, v] : r.params) out << v << ',';
    out << r.lhs.str() << ',' << r.rhs.str() << ',' << r.margin.str() << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

// ---------------------------------------------------------------- JSON

std::string report_to_json(const SearchReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["d"] = r.d;
  j["class"] = r.forbidden ? ordered_json(forbidden_class_name(*r.forbidden)) : ordered_json(nullptr);
  j["optimum"] = r.optimum.str();
  j["proven_optimal"] = r.proven_optimal;
  j["infeasible"] = r.infeasible;
  j["enumerate_all"] = r.enumerate_all;
  j["threads"] = r.threads;
  j["witness_count"] = std::to_string(r.witness_count);
  j["witnesses_complete"] = r.witnesses_complete;
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.witnesses) {
    std::ostringstream os;
    write_family(os, w);
    ws.push_back(os.str());
  }
  j["witnesses"] = std::move(ws);
  j["nodes_explored"] = std::to_string(r.nodes_explored);
  j["elapsed_ms"] = r.elapsed_ms;
  ordered_json b;
  b["name"] = r.bound_name.empty() ? ordered_json(nullptr) : ordered_json(r.bound_name);
  b["value"] = r.bound_value ? ordered_json(r.bound_value->str()) : ordered_json(nullptr);
  b["in_hypothesis_range"] = r.bound_in_range;
  b["relation"] = r.bound_relation.empty() ? ordered_json(nullptr) : ordered_json(r.bound_relation);
  j["bound"] = std::move(b);
  j["bound_match"] = r.bound_match;
  j["characterization_match"] = r.characterization_match ? ordered_json(*r.characterization_match) : ordered_json(nullptr);
  j["notes"] = r.notes;
  return j.dump(indent);
}

std::string sweep_to_json(const SweepReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["kind"] = sweep_kind_name(r.kind);
  j["tuples"] = r.rows.size();
  j["failures"] = r.failures;
  j["pass"] = r.pass;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    for (const auto& [name, v] : row.params) o[name] = v;
    o["lhs"] = row.lhs.str();
    o["rhs"] = row.rhs.str();
    o["margin"] = row.margin.str();
    o["pass"] = row.pass;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["notes"] = r.notes;
  return j.dump(indent);
}

}  // namespace qdiam
