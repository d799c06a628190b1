#include "qdiam/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdiam/errors.hpp"
#include "qdiam/families.hpp"
#include "qdiam/grassmann.hpp"
#include "qdiam/oracle.hpp"
#include "qdiam/qcount.hpp"
#include "qdiam/selftest.hpp"
#include "qdiam/subspace.hpp"

namespace qdiam {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string what;  // bound name, construction kind, oracle mode or sweep kind
  int q = 2;
  std::optional<int> n, d, t, k, s, l, j, r;
  std::optional<std::string> x, y, center, center2, cls;
  std::string format = "text";
  std::string out_path, in_path;
  bool all = false, count_only = false, no_layer_cap = false;
  int threads = 1;
  std::uint64_t max_lattice = SearchOptions::kDefaultMaxLattice;
  std::uint64_t max_items = EnumerationBudget::kDefaultMaxItems;
  std::uint64_t memory_mb = EnumerationBudget::kDefaultMemoryBytes >> 20;
  long timeout_secs = 600;
  std::size_t max_witnesses = 100000;
  std::uint64_t seed = 1;
  int samples = 2000;
  int qmin = 2, qmax = 0;
  std::optional<int> nmin, nmax, kmax, tmin, tmax;
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::ParameterOutOfRange, what); }

int need(const std::optional<int>& v, const char* flag) {
  if (!v) usage(std::string("missing --") + flag);
  return *v;
}

template <class T>
T env_number(const char* name, T fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return static_cast<T>(x);
  } catch (const std::exception&) {
    usage(std::string(name) + " must be a nonnegative integer, got '" + v + "'");
  }
}

EnumerationBudget budget_of(const Config& c) {
  EnumerationBudget b;
  b.max_items = c.max_items;
  b.memory_bytes = c.memory_mb << 20;
  b.threads = c.threads;
  return b;
}

Subspace subspace_arg(const std::optional<std::string>& text, const Field& field, int n, std::vector<int> fallback) {
  if (!text) return coordinate_subspace(field, n, fallback);
  Subspace s = parse_subspace(*text);
  if (s.q() != field->q() || s.ambient_dim() != n)
    throw Error(Errc::AmbientMismatch, "subspace '" + *text + "' is not in F_" + std::to_string(field->q()) + "^" +
                                           std::to_string(n));
  return s;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

std::string support_str(const SubspaceFamily& f) {
  std::string s;
  for (int k : f.support()) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const Config& c, std::ostream& out) {
  const int q = c.q;
  std::string name = c.what;
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
  std::replace(name.begin(), name.end(), '_', '-');
  BoundValue bv;
  bv.in_hypothesis_range = true;
  if (name == "kleitman") {
    bv = kleitman_bound(need(c.n, "n"), need(c.d, "d"), q);
  } else if (name == "typea-even" || name == "g") {
    bv = typeA_even_bound(need(c.n, "n"), need(c.t, "t"), q);
  } else if (name == "typeb-even") {
    bv = typeB_even_bound(need(c.n, "n"), need(c.t, "t"), q);
  } else if (name == "odd-stability") {
    bv = odd_stability_bound(need(c.n, "n"), need(c.t, "t"), q);
  } else if (name == "h" || name == "hm-excess") {
    bv.value = hm_excess(need(c.n, "n"), need(c.t, "t"), q);
  } else if (name == "ekr") {
    bv = ekr_bound(need(c.n, "n"), need(c.k, "k"), need(c.s, "s"), q);
  } else if (name == "nontrivial") {
    bv = nontrivial_intersecting_bound(need(c.n, "n"), need(c.k, "k"), c.s.value_or(1), q);
  } else if (name == "complementary") {
    bv = complementary_pair_bound(need(c.n, "n"), need(c.k, "k"), q);
  } else if (name == "gauss") {
    bv.value = gauss_binom(need(c.n, "n"), need(c.k, "k"), q);
  } else if (name == "profile") {
    bv.value = count_profile(need(c.n, "n"), need(c.k, "k"), need(c.l, "l"), need(c.j, "j"), q);
  } else {
    usage("unknown bound '" + c.what +
          "' (kleitman, typeA-even, typeB-even, odd-stability, H, ekr, nontrivial, complementary, gauss, profile)");
  }
  if (c.format == "json") {
    ordered_json j;
    j["bound"] = name;
    j["q"] = q;
    for (auto [key, v] : {std::pair{"n", c.n}, {"d", c.d}, {"t", c.t}, {"k", c.k}, {"s", c.s}, {"l", c.l}, {"j", c.j}})
      if (v) j[key] = *v;
    j["value"] = bv.value.str();
    j["in_hypothesis_range"] = bv.in_hypothesis_range;
    j["hypothesis"] = bv.hypothesis;
    out << j.dump(2) << '\n';
  } else {
    out << bv.value.str() << '\n';
    out << "in_hypothesis_range " << (bv.in_hypothesis_range ? "true" : "false");
    if (!bv.hypothesis.empty()) out << " (" << bv.hypothesis << ")";
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- construct

SubspaceFamily build_family(const Config& c) {
  std::string kind = c.what;
  std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto budget = budget_of(c);
  if (kind == "ball" || kind == "double-ball") {
    const int r = need(c.r, "r");
    if (!c.center) usage("missing --center");
    const Subspace c1 = parse_subspace(*c.center);
    if (kind == "ball") return ball(c1, r, budget);
    if (!c.center2) usage("missing --center2");
    return double_ball(c1, parse_subspace(*c.center2), r, budget);
  }
  const Field field = field_new(c.q);
  const int n = need(c.n, "n");
  const Subspace x = subspace_arg(c.x, field, n, {0});
  if (kind == "l") return canonical_family(field, n, need(c.t, "t"), CanonicalKind::Lower, std::nullopt, budget);
  if (kind == "u") return canonical_family(field, n, need(c.t, "t"), CanonicalKind::Upper, std::nullopt, budget);
  if (kind == "d") return canonical_family(field, n, need(c.t, "t"), CanonicalKind::DoubleBall, x, budget);
  if (kind == "star") return star(need(c.k, "k"), x, budget);
  if (kind == "hm" || kind == "k") {
    const int k = kind == "hm" ? need(c.k, "k") : (c.k ? *c.k : need(c.t, "t") + 1);
    const Subspace y = subspace_arg(c.y, field, n, range(1, k + 1));
    return kind == "hm" ? hm_family(k, x, y, budget) : k_family(k, x, y, budget);
  }
  if (kind == "hmstar" || kind == "kstar") {
    const Subspace y = subspace_arg(c.y, field, n, {0, 1, 2});
    return kind == "hmstar" ? hm_star3(y, budget) : k_star3(y, budget);
  }
  usage("unknown construction '" + c.what + "' (L, U, D, ball, double-ball, star, HM, K, HMstar, Kstar)");
}

int cmd_construct(const Config& c, std::ostream& out, std::ostream& err) {
  const SubspaceFamily f = build_family(c);
  const bool to_file = !c.out_path.empty();
  std::ostream& summary = to_file ? out : err;
  if (to_file) {
    std::ofstream file(c.out_path);
    if (!file) usage("cannot write " + c.out_path);
    write_family(file, f);
  } else {
    write_family(out, f);
  }
  summary << "size " << f.size() << '\n';
  summary << "diameter " << (f.empty() ? std::string("-") : std::to_string(diameter(f).diameter)) << '\n';
  summary << "support " << support_str(f) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const Config& c, std::ostream& out) {
  SubspaceFamily f = [&] {
    if (c.in_path.empty() || c.in_path == "-") return read_family(std::cin);
    std::ifstream in(c.in_path);
    if (!in) usage("cannot read " + c.in_path);
    return read_family(in);
  }();
  ordered_json j;
  j["q"] = f.q();
  j["n"] = f.ambient_dim();
  j["size"] = std::to_string(f.size());
  const int diam = f.empty() ? 0 : diameter(f).diameter;
  j["diameter"] = f.empty() ? ordered_json(nullptr) : ordered_json(diam);
  ordered_json layers = ordered_json::object();
  for (int k = 0; k <= f.ambient_dim(); ++k) layers[std::to_string(k)] = std::to_string(f.layer_size(k));
  j["layers"] = layers;
  bool ok = true;

  const int d = c.d ? *c.d : (c.cls && c.t ? class_diameter(parse_forbidden_class(*c.cls), *c.t) : diam);
  j["d"] = d;
  if (!f.empty()) {
    j["diameter_ok"] = diam <= d;
    ok = ok && diam <= d;
    // cross-intersection of layer pairs forced by diameter <= d
    auto v = find_layer_intersection_violation(f, d);
    j["layer_intersection_ok"] = !v;
    if (v) {
      j["layer_intersection_violation"] = {{"i", v->i}, {"j", v->j}, {"required", v->required},
                                           {"a", to_string(v->a)}, {"b", to_string(v->b)}};
      ok = false;
    }
  }
  if (c.cls) {
    const auto cls = parse_forbidden_class(*c.cls);
    const int t = c.t ? *c.t : d / 2;
    const auto a = is_admissible(f, cls, t, budget_of(c));
    ordered_json adm;
    adm["class"] = forbidden_class_name(cls);
    adm["t"] = t;
    adm["admissible"] = a.admissible;
    adm["reason"] = a.reason;
    adm["witness_kind"] = a.witness_kind;
    ordered_json centers = ordered_json::array();
    for (const auto& s : a.witness_centers) centers.push_back(to_string(s));
    adm["witness_centers"] = centers;
    j["admissibility"] = adm;
    ok = ok && a.admissible;
  }
  j["verdict"] = ok ? "ok" : "fail";

  if (c.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "family q=" << f.q() << " n=" << f.ambient_dim() << " size " << f.size() << '\n';
    out << "diameter " << (f.empty() ? std::string("-") : std::to_string(diam)) << " (d = " << d << ")\n";
    out << "layers";
    for (int k = 0; k <= f.ambient_dim(); ++k) out << ' ' << f.layer_size(k);
    out << '\n';
    if (j.contains("layer_intersection_violation")) {
      const auto& v = j["layer_intersection_violation"];
      out << "layer pair " << v["i"] << "/" << v["j"] << " not cross-" << v["required"] << "-intersecting: "
          << v["a"].get<std::string>() << " " << v["b"].get<std::string>() << '\n';
    } else if (!f.empty()) {
      out << "layer pairs cross-intersecting as required\n";
    }
    if (j.contains("admissibility")) {
      const auto& a = j["admissibility"];
      out << a["class"].get<std::string>() << " t=" << a["t"] << ": "
          << (a["admissible"].get<bool>() ? "admissible" : "inadmissible");
      if (!a["reason"].get<std::string>().empty()) out << " (" << a["reason"].get<std::string>() << ")";
      if (!a["witness_kind"].get<std::string>().empty()) {
        out << " witness " << a["witness_kind"].get<std::string>();
        for (const auto& s : a["witness_centers"]) out << ' ' << s.get<std::string>();
      }
      out << '\n';
    }
    out << "verdict " << j["verdict"].get<std::string>() << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Config& c, std::ostream& out) {
  const Field field = field_new(c.q);
  const int n = need(c.n, "n");
  const auto budget = budget_of(c);
  std::vector<int> dims = c.k ? std::vector<int>{*c.k} : range(0, n + 1);
  BigCount total;
  for (int k : dims) total += gauss_binom(n, k, c.q);
  if (c.count_only) {
    if (c.format == "json") {
      out << ordered_json{{"q", c.q}, {"n", n}, {"k", c.k ? ordered_json(*c.k) : ordered_json(nullptr)},
                          {"count", total.str()}}
                 .dump(2)
          << '\n';
    } else {
      out << total.str() << '\n';
    }
    return kExitOk;
  }
  if (total > BigCount(budget.max_items))
    throw BudgetExceeded("enumeration exceeds --max-items " + std::to_string(budget.max_items), total.str());
  for (int k : dims) for_each_in_layer(field, n, k, [&out](const Subspace& s) { out << to_string(s) << '\n'; }, budget);
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

SearchOptions search_options(const Config& c) {
  SearchOptions o;
  o.max_lattice = c.max_lattice;
  o.enumerate_all = c.all;
  o.max_witnesses = c.max_witnesses;
  o.threads = c.threads;
  o.timeout = std::chrono::seconds(c.timeout_secs);
  o.layer_cap = !c.no_layer_cap;
  return o;
}

void print_report_text(const SearchReport& r, std::ostream& out) {
  out << "q=" << r.q << " n=" << r.n << " d=" << r.d;
  if (r.forbidden) out << " class=" << forbidden_class_name(*r.forbidden);
  out << '\n';
  out << "optimum " << r.optimum.str() << (r.proven_optimal ? "" : " (lower bound, search cut short)") << '\n';
  if (r.infeasible) out << "Infeasible\n";
  if (!r.bound_name.empty())
    out << "bound " << r.bound_name << " = " << r.bound_value->str() << " relation " << r.bound_relation
        << " match " << (r.bound_match ? "true" : "false") << " in_hypothesis_range "
        << (r.bound_in_range ? "true" : "false") << '\n';
  out << "witnesses " << r.witness_count << " (" << r.witnesses.size() << " up to perp"
      << (r.witnesses_complete ? ", complete" : "") << ")\n";
  if (r.characterization_match) out << "characterization_match " << (*r.characterization_match ? "true" : "false") << '\n';
  out << "nodes " << r.nodes_explored << " elapsed_ms " << r.elapsed_ms << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

int cmd_oracle(const Config& c, std::ostream& out) {
  const auto opts = search_options(c);
  const int n = need(c.n, "n"), d = need(c.d, "d");
  SearchReport r;
  bool mismatch = false;
  if (c.what == "max") {
    r = max_diameter_family(c.q, n, d, opts);
    if (c.all && r.proven_optimal && d >= 2 && n >= d + 1) {
      const auto ch = verify_characterization(r);
      r.characterization_match = ch.ok;
      r.notes.push_back("characterization pattern " + ch.pattern + ", expected census " +
                        std::to_string(ch.expected_count));
      for (const auto& diag : ch.diagnostics) r.notes.push_back(diag);
      mismatch = !ch.ok;
    }
    if (r.bound_value && r.proven_optimal && !r.bound_match) mismatch = true;
  } else if (c.what == "admissible") {
    if (!c.cls) usage("missing --class");
    r = max_admissible_family(c.q, n, d, parse_forbidden_class(*c.cls), opts);
    // below-threshold comparisons are observations, never a failure
  } else {
    usage("unknown oracle mode '" + c.what + "' (max, admissible)");
  }
  if (c.format == "json") {
    out << report_to_json(r) << '\n';
  } else {
    print_report_text(r, out);
  }
  if (!r.proven_optimal) return kExitResourceCap;
  return mismatch ? kExitMismatch : kExitOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const Config& c, std::ostream& out) {
  const SweepKind kind = parse_sweep_kind(c.what);
  SweepSpec spec;
  switch (kind) {
    case SweepKind::Nontrivial: spec = nontrivial_grid(); break;
    case SweepKind::HPositive: spec = hpositive_grid(); break;
    case SweepKind::TypeBBelowTypeA: spec = typeb_grid(); break;
    case SweepKind::ProfileTotal: spec.kind = kind; spec.n_max = 10; break;
  }
  if (c.qmax > 0) {
    spec.qs.clear();
    for (int q = std::max(2, c.qmin); q <= c.qmax; ++q)
      if (is_prime_power(q) && q <= FieldSpec::kMaxOrder) spec.qs.push_back(q);
  }
  if (c.nmin) spec.n_min = *c.nmin;
  if (c.nmax) spec.n_max = *c.nmax;
  if (c.kmax) spec.k_max = *c.kmax;
  if (c.tmin) spec.t_min = *c.tmin;
  if (c.tmax) spec.t_max = *c.tmax;
  const auto r = inequality_sweep(spec);
  if (c.format == "json") {
    out << sweep_to_json(r) << '\n';
  } else if (c.format == "csv") {
    write_sweep_csv(out, r);
  } else {
    out << sweep_kind_name(kind) << ": " << r.rows.size() << " tuples, " << r.failures << " failures\n";
    std::size_t shown = 0;
    for (const auto& row : r.rows) {
      if (row.pass || shown++ >= 20) continue;
      out << "fail";
      for (const auto& [name, v] : row.params) out << ' ' << name << '=' << v;
      out << " lhs=" << row.lhs.str() << " rhs=" << row.rhs.str() << '\n';
    }
    for (const auto& note : r.notes) out << "note: " << note << '\n';
    out << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return r.pass ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const Config& c, std::ostream& out) {
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& check : run_selftest(c.seed, c.samples)) {
    ok = ok && check.pass;
    if (c.format == "json")
      arr.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    else
      out << (check.pass ? "PASS " : "FAIL ") << check.name << "  " << check.detail << '\n';
  }
  if (c.format == "json") out << ordered_json{{"pass", ok}, {"checks", arr}}.dump(2) << '\n';
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- wiring

void add_params(CLI::App* app, Config& c, std::initializer_list<const char*> names) {
  static const std::map<std::string, std::string> help = {
      {"n", "ambient dimension"}, {"d", "diameter"},       {"t", "radius"},
      {"k", "layer dimension"},   {"s", "intersection"},   {"l", "second layer"},
      {"j", "intersection dim"},  {"r", "ball radius"},
  };
  for (const char* name : names) {
    std::optional<int>* slot = nullptr;
    switch (name[0]) {
      case 'n': slot = &c.n; break;
      case 'd': slot = &c.d; break;
      case 't': slot = &c.t; break;
      case 'k': slot = &c.k; break;
      case 's': slot = &c.s; break;
      case 'l': slot = &c.l; break;
      case 'j': slot = &c.j; break;
      case 'r': slot = &c.r; break;
    }
    app->add_option(std::string("--") + name, *slot, help.at(name));
  }
}

void add_format(CLI::App* app, Config& c, std::vector<std::string> allowed) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

int dispatch(CLI::App& app, const Config& c, std::ostream& out, std::ostream& err) {
  if (app.got_subcommand("bound")) return cmd_bound(c, out);
  if (app.got_subcommand("construct")) return cmd_construct(c, out, err);
  if (app.got_subcommand("check")) return cmd_check(c, out);
  if (app.got_subcommand("enumerate")) return cmd_enumerate(c, out);
  if (app.got_subcommand("oracle")) return cmd_oracle(c, out);
  if (app.got_subcommand("sweep")) return cmd_sweep(c, out);
  if (app.got_subcommand("selftest")) return cmd_selftest(c, out);
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  try {
    c.max_lattice = env_number<std::uint64_t>("QDIAM_MAX_LATTICE", c.max_lattice);
    c.timeout_secs = env_number<long>("QDIAM_TIMEOUT_SECS", c.timeout_secs);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Exact toolkit for bounded-diameter families in the subspace lattice of F_q^n", "qdiam"};
  app.require_subcommand(1);
  app.add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 1024));

  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound exactly");
  bound->add_option("name", c.what, "kleitman, typeA-even, typeB-even, odd-stability, H, ekr, nontrivial, "
                                    "complementary, gauss, profile")
      ->required();
  bound->add_option("--q", c.q, "field order");
  add_params(bound, c, {"n", "d", "t", "k", "s", "l", "j"});
  add_format(bound, c, {"text", "json"});

  auto* construct = app.add_subcommand("construct", "build a family and write it in family file format");
  construct->add_option("kind", c.what, "L, U, D, ball, double-ball, star, HM, K, HMstar, Kstar")->required();
  construct->add_option("--q", c.q, "field order");
  add_params(construct, c, {"n", "t", "k", "r"});
  construct->add_option("--x", c.x, "line X (default span(e_0))");
  construct->add_option("--y", c.y, "subspace Y (default span(e_1..e_k), or span(e_0,e_1,e_2) for the 3-stars)");
  construct->add_option("--center", c.center, "ball center");
  construct->add_option("--center2", c.center2, "second ball center");
  construct->add_option("--out,-o", c.out_path, "output file (default stdout)");
  construct->add_option("--max-items", c.max_items, "enumeration budget");
  construct->add_option("--memory-mb", c.memory_mb, "memory budget");

  auto* check = app.add_subcommand("check", "diameter, layer intersection and admissibility of a family file");
  check->add_option("file", c.in_path, "family file ('-' for stdin)")->required();
  check->add_option("--class", c.cls, "A_even, B_even, A_odd, B_odd");
  add_params(check, c, {"d", "t"});
  check->add_option("--max-items", c.max_items, "enumeration budget for center scans");
  add_format(check, c, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "list the subspaces of F_q^n (or one layer)");
  enumerate->add_option("--q", c.q, "field order");
  add_params(enumerate, c, {"n", "k"});
  enumerate->add_flag("--count", c.count_only, "print the count only");
  enumerate->add_option("--max-items", c.max_items, "enumeration budget");
  add_format(enumerate, c, {"text", "json"});

  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum-family search");
  oracle->add_option("mode", c.what, "max or admissible")->required()->check(CLI::IsMember({"max", "admissible"}));
  oracle->add_option("--q", c.q, "field order");
  add_params(oracle, c, {"n", "d"});
  oracle->add_option("--class", c.cls, "forbidden class for admissible mode");
  oracle->add_flag("--all", c.all, "collect every maximum family and check the characterization");
  oracle->add_option("--max-lattice", c.max_lattice, "lattice size cap (env QDIAM_MAX_LATTICE)");
  oracle->add_option("--timeout", c.timeout_secs, "wall-clock cap in seconds (env QDIAM_TIMEOUT_SECS)");
  oracle->add_option("--max-witnesses", c.max_witnesses, "witnesses kept");
  oracle->add_flag("--no-layer-cap", c.no_layer_cap, "disable the complementary-layer bound");
  oracle->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 1024));
  add_format(oracle, c, {"text", "json"});

  auto* sweep = app.add_subcommand("sweep", "exact inequality sweep");
  sweep->add_option("kind", c.what, "nontrivial, hpos, typeb, profile")->required();
  sweep->add_option("--qmin", c.qmin, "smallest field order");
  sweep->add_option("--qmax", c.qmax, "largest field order (prime powers in range)");
  sweep->add_option("--nmin", c.nmin, "smallest n");
  sweep->add_option("--nmax", c.nmax, "largest n");
  sweep->add_option("--kmax", c.kmax, "largest k (nontrivial)");
  sweep->add_option("--tmin", c.tmin, "smallest t");
  sweep->add_option("--tmax", c.tmax, "largest t");
  add_format(sweep, c, {"text", "csv", "json"});

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--seed", c.seed, "random seed");
  selftest->add_option("--samples", c.samples, "random samples");
  add_format(selftest, c, {"text", "json"});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return dispatch(app, c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::BudgetExceeded:
      case Errc::TimeoutExceeded: return kExitResourceCap;
      default: return kExitUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qdiam
