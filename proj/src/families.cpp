#include "qdiam/families.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "qdiam/errors.hpp"

namespace qdiam {

// ---------------------------------------------------------------- SubspaceFamily

SubspaceFamily::SubspaceFamily(Field field, int n, std::vector<Subspace> members)
    : field_(std::move(field)), n_(n), members_(std::move(members)) {
  for (const auto& s : members_)
    if (s.field() != field_ || s.ambient_dim() != n_)
      throw Error(Errc::AmbientMismatch, "family member " + to_string(s) + " does not live in F_" +
                                             std::to_string(field_->q()) + "^" + std::to_string(n_));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_layers();
}

void SubspaceFamily::index_layers() {
  offsets_.assign(n_ + 2, 0);
  for (const auto& s : members_) ++offsets_[s.dim() + 1];
  for (int k = 0; k <= n_; ++k) offsets_[k + 1] += offsets_[k];
  support_.clear();
  for (int k = 0; k <= n_; ++k)
    if (offsets_[k + 1] > offsets_[k]) support_.push_back(k);
}

bool SubspaceFamily::contains(const Subspace& s) const {
  const auto lay = layer(s.dim());
  return std::binary_search(lay.begin(), lay.end(), s);
}

bool SubspaceFamily::is_subfamily_of(const SubspaceFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::span<const Subspace> SubspaceFamily::layer(int k) const {
  if (k < 0 || k > n_) return {};
  return std::span<const Subspace>(members_).subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
}

SubspaceFamily family_union(const SubspaceFamily& a, const SubspaceFamily& b) {
  std::vector<Subspace> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return SubspaceFamily(a.field(), a.ambient_dim(), std::move(all));
}

// ---------------------------------------------------------------- constructors

namespace {

std::vector<Subspace> collect_layer_if(const Field& field, int n, int k, const EnumerationBudget& budget,
                                       const std::function<bool(const Subspace&)>& keep) {
  std::vector<Subspace> out;
  for_each_in_layer(
      field, n, k,
      [&](const Subspace& s) {
        if (keep(s)) out.push_back(s);
      },
      budget);
  return out;
}

std::vector<Subspace> layers(const Field& field, int n, int lo, int hi, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for (int k = std::max(lo, 0); k <= std::min(hi, n); ++k) {
    auto lay = enumerate_layer(field, n, k, budget);
    std::move(lay.begin(), lay.end(), std::back_inserter(out));
  }
  return out;
}

void require_line(const Subspace& x, const char* what) {
  if (x.dim() != 1)
    throw Error(Errc::InvalidConfiguration,
                std::string(what) + " must be 1-dimensional, got dimension " + std::to_string(x.dim()));
}

void require_same(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::AmbientMismatch, "configuration subspaces live in different spaces");
}

}  // namespace

SubspaceFamily ball(const Subspace& center, int r, const EnumerationBudget& budget) {
  const int n = center.ambient_dim();
  if (r < 0) throw Error(Errc::ParameterOutOfRange, "negative radius");
  std::vector<Subspace> out;
  for (int k = std::max(0, center.dim() - r); k <= std::min(n, center.dim() + r); ++k) {
    auto lay = collect_layer_if(center.field(), n, k, budget,
                                [&](const Subspace& a) { return delta(a, center) <= r; });
    std::move(lay.begin(), lay.end(), std::back_inserter(out));
  }
  return SubspaceFamily(center.field(), n, std::move(out));
}

SubspaceFamily double_ball(const Subspace& c1, const Subspace& c2, int r, const EnumerationBudget& budget) {
  require_same(c1, c2);
  if (c1 == c2) return ball(c1, r, budget);
  return family_union(ball(c1, r, budget), ball(c2, r, budget));
}

SubspaceFamily lower_family(const Field& field, int n, int t, const EnumerationBudget& budget) {
  if (t < 0) throw Error(Errc::ParameterOutOfRange, "negative radius");
  return SubspaceFamily(field, n, layers(field, n, 0, t, budget));
}

SubspaceFamily upper_family(const Field& field, int n, int t, const EnumerationBudget& budget) {
  if (t < 0) throw Error(Errc::ParameterOutOfRange, "negative radius");
  return SubspaceFamily(field, n, layers(field, n, n - t, n, budget));
}

SubspaceFamily star(int k, const Subspace& x, const EnumerationBudget& budget) {
  require_line(x, "star center");
  const int n = x.ambient_dim();
  if (k < 1 || k > n) throw Error(Errc::ParameterOutOfRange, "star dimension outside 1..n");
  return SubspaceFamily(x.field(), n,
                        collect_layer_if(x.field(), n, k, budget, [&](const Subspace& a) { return contains(a, x); }));
}

SubspaceFamily canonical_double_ball(const Subspace& x, int t, const EnumerationBudget& budget) {
  require_line(x, "double ball center");
  const int n = x.ambient_dim();
  auto members = layers(x.field(), n, 0, t, budget);
  if (t + 1 <= n) {
    auto top = star(t + 1, x, budget);
    members.insert(members.end(), top.begin(), top.end());
  }
  return SubspaceFamily(x.field(), n, std::move(members));
}

SubspaceFamily canonical_family(const Field& field, int n, int t, CanonicalKind kind, const std::optional<Subspace>& x,
                                const EnumerationBudget& budget) {
  if (t < 0 || t > n) throw Error(Errc::ParameterOutOfRange, "radius outside 0..n");
  switch (kind) {
    case CanonicalKind::Lower: return lower_family(field, n, t, budget);
    case CanonicalKind::Upper: return upper_family(field, n, t, budget);
    case CanonicalKind::DoubleBall:
      if (!x) throw Error(Errc::InvalidConfiguration, "D_t(X) needs a line X");
      if (x->field() != field || x->ambient_dim() != n)
        throw Error(Errc::AmbientMismatch, "X does not live in the requested space");
      return canonical_double_ball(*x, t, budget);
  }
  return SubspaceFamily(field, n);
}

SubspaceFamily hm_family(int k, const Subspace& x, const Subspace& y, const EnumerationBudget& budget) {
  require_same(x, y);
  require_line(x, "X");
  if (y.dim() != k)
    throw Error(Errc::InvalidConfiguration,
                "Y must have dimension k = " + std::to_string(k) + ", got " + std::to_string(y.dim()));
  if (contains(y, x)) throw Error(Errc::InvalidConfiguration, "X must not lie in Y");
  const Subspace xy = sum(x, y);
  return SubspaceFamily(x.field(), x.ambient_dim(),
                        collect_layer_if(x.field(), x.ambient_dim(), k, budget, [&](const Subspace& a) {
                          return (contains(a, x) && intersection_dim(a, y) >= 1) || contains(xy, a);
                        }));
}

SubspaceFamily hm_star3(const Subspace& y, const EnumerationBudget& budget) {
  if (y.dim() != 3) throw Error(Errc::InvalidConfiguration, "Y must be 3-dimensional");
  return SubspaceFamily(y.field(), y.ambient_dim(),
                        collect_layer_if(y.field(), y.ambient_dim(), 3, budget,
                                         [&](const Subspace& a) { return intersection_dim(a, y) >= 2; }));
}

SubspaceFamily k_family(int k, const Subspace& x, const Subspace& y, const EnumerationBudget& budget) {
  auto top = hm_family(k, x, y, budget);
  auto members = layers(x.field(), x.ambient_dim(), 0, k - 1, budget);
  members.insert(members.end(), top.begin(), top.end());
  return SubspaceFamily(x.field(), x.ambient_dim(), std::move(members));
}

SubspaceFamily k_star3(const Subspace& y, const EnumerationBudget& budget) {
  auto top = hm_star3(y, budget);
  auto members = layers(y.field(), y.ambient_dim(), 0, 2, budget);
  members.insert(members.end(), top.begin(), top.end());
  return SubspaceFamily(y.field(), y.ambient_dim(), std::move(members));
}

SubspaceFamily perp_family(const SubspaceFamily& f) {
  std::vector<Subspace> out;
  out.reserve(f.size());
  for (const auto& s : f) out.push_back(perp(s));
  return SubspaceFamily(f.field(), f.ambient_dim(), std::move(out));
}

// ---------------------------------------------------------------- measures

DiameterResult diameter(const SubspaceFamily& f, std::optional<int> stop_above) {
  if (f.empty()) throw Error(Errc::EmptyFamily, "diameter of an empty family");
  const int n = f.ambient_dim();
  const auto& supp = f.support();
  // Layer pairs sorted by the largest distance they can realize,
  // min(i + j, 2n - i - j); pairs that cannot beat the running maximum are skipped.
  struct Pair {
    int i, j, cap;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = a; b < supp.size(); ++b) {
      const int i = supp[a], j = supp[b];
      int cap = std::min(i + j, 2 * n - i - j);
      if (i == j) cap = std::min(cap, 2 * std::min(i, n - i));
      pairs.push_back({i, j, cap});
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.cap > y.cap; });

  DiameterResult best;
  best.diameter = -1;
  const auto base = f.members().data();
  for (const auto& p : pairs) {
    if (p.cap <= best.diameter) break;
    const auto li = f.layer(p.i);
    const auto lj = f.layer(p.j);
    for (std::size_t a = 0; a < li.size(); ++a) {
      for (std::size_t b = (p.i == p.j ? a : 0); b < lj.size(); ++b) {
        const int d = delta(li[a], lj[b]);
        if (d > best.diameter) {
          best.diameter = d;
          best.first = static_cast<std::size_t>(&li[a] - base);
          best.second = static_cast<std::size_t>(&lj[b] - base);
          if (stop_above && d > *stop_above) return best;
          if (d == p.cap) break;
        }
      }
      if (best.diameter == p.cap) break;
    }
  }
  return best;
}

int dim_spread(const SubspaceFamily& f) {
  if (f.empty()) throw Error(Errc::EmptyFamily, "dimension spread of an empty family");
  return f.support().back() - f.support().front();
}

int min_supp_norm(const SubspaceFamily& f) {
  if (f.empty()) throw Error(Errc::EmptyFamily, "support of an empty family");
  return std::min(f.support().front(), f.ambient_dim() - f.support().back());
}

bool is_s_intersecting(std::span<const Subspace> members, int s) {
  if (members.empty()) throw Error(Errc::EmptyFamily, "intersection property of an empty layer");
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (intersection_dim(members[a], members[b]) < s) return false;
  // a single member must itself have dimension >= s
  return std::all_of(members.begin(), members.end(), [s](const Subspace& m) { return m.dim() >= s; });
}

bool is_cross_intersecting(std::span<const Subspace> a, std::span<const Subspace> b, int s) {
  if (a.empty() || b.empty()) throw Error(Errc::EmptyFamily, "cross-intersection with an empty layer");
  for (const auto& x : a)
    for (const auto& y : b)
      if (intersection_dim(x, y) < s) return false;
  return true;
}

Subspace common_intersection(const Field& field, int n, std::span<const Subspace> members) {
  Subspace acc = Subspace::full(field, n);
  for (const auto& m : members) {
    acc = intersect(acc, m);
    if (acc.dim() == 0) break;
  }
  return acc;
}

std::optional<LayerViolation> find_layer_intersection_violation(const SubspaceFamily& f, int d) {
  const auto& supp = f.support();
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = a; b < supp.size(); ++b) {
      const int i = supp[a], j = supp[b];
      const int num = i + j - d;
      const int required = num <= 0 ? -((-num) / 2) : (num + 1) / 2;  // ceil(num / 2)
      if (required <= 0) continue;
      const auto li = f.layer(i);
      const auto lj = f.layer(j);
      for (const auto& x : li)
        for (const auto& y : lj)
          if (intersection_dim(x, y) < required) return LayerViolation{i, j, required, x, y};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- admissibility

const char* forbidden_class_name(ForbiddenClass c) {
  switch (c) {
    case ForbiddenClass::AEven: return "A_even";
    case ForbiddenClass::BEven: return "B_even";
    case ForbiddenClass::AOdd: return "A_odd";
    case ForbiddenClass::BOdd: return "B_odd";
  }
  return "?";
}

ForbiddenClass parse_forbidden_class(const std::string& text) {
  std::string t;
  for (char c : text) t += c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "a_even") return ForbiddenClass::AEven;
  if (t == "b_even") return ForbiddenClass::BEven;
  if (t == "a_odd") return ForbiddenClass::AOdd;
  if (t == "b_odd") return ForbiddenClass::BOdd;
  throw Error(Errc::ParameterOutOfRange, "unknown class '" + text + "' (expected A_even, B_even, A_odd, B_odd)");
}

int class_diameter(ForbiddenClass c, int t) {
  return (c == ForbiddenClass::AEven || c == ForbiddenClass::BEven) ? 2 * t : 2 * t + 1;
}

namespace {

// Line inside the common intersection of F's (t+1)-layer, if F ⊆ D_t(X) for some X.
std::optional<Subspace> double_ball_center(const SubspaceFamily& f, int t) {
  const int n = f.ambient_dim();
  if (n < 1) return std::nullopt;
  if (!f.empty() && f.support().back() > t + 1) return std::nullopt;
  const auto top = f.layer(t + 1);
  if (top.empty()) return Subspace::from_generators(f.field(), n, std::vector<Vector>{unit_vector(n, 0)});
  const Subspace common = common_intersection(f.field(), n, top);
  if (common.dim() == 0) return std::nullopt;
  const std::vector<Vector> gen{Vector(common.row(0).begin(), common.row(0).end())};
  return Subspace::from_generators(f.field(), n, gen);
}

// Members ordered so that the ones most likely to fall outside a ball (extreme
// dimensions) are checked first.
std::vector<const Subspace*> probe_order(const SubspaceFamily& f) {
  std::vector<const Subspace*> out;
  out.reserve(f.size());
  for (const auto& s : f) out.push_back(&s);
  const double mid = f.ambient_dim() / 2.0;
  std::stable_sort(out.begin(), out.end(), [mid](const Subspace* a, const Subspace* b) {
    return std::abs(a->dim() - mid) > std::abs(b->dim() - mid);
  });
  return out;
}

// Covers of p: p + <v> for v normalized with zeros on p's pivot columns.
void for_each_cover(const Subspace& p, const std::function<bool(const Subspace&)>& visit) {
  const int n = p.ambient_dim();
  const int q = p.q();
  std::vector<int> free_cols;
  std::vector<bool> piv(n, false);
  for (int c : p.pivots()) piv[c] = true;
  for (int c = 0; c < n; ++c)
    if (!piv[c]) free_cols.push_back(c);
  const int m = static_cast<int>(free_cols.size());
  for (int lead = 0; lead < m; ++lead) {
    // v[free_cols[lead]] = 1, earlier free entries 0, later ones arbitrary
    std::vector<int> tail(m - lead - 1, 0);
    while (true) {
      Vector v(n, 0);
      v[free_cols[lead]] = 1;
      for (int i = 0; i < m - lead - 1; ++i) v[free_cols[lead + 1 + i]] = static_cast<Elem>(tail[i]);
      std::vector<Vector> gens;
      gens.reserve(p.dim() + 1);
      for (int r = 0; r < p.dim(); ++r) gens.emplace_back(p.row(r).begin(), p.row(r).end());
      gens.push_back(std::move(v));
      if (!visit(Subspace::from_generators(p.field(), n, gens))) return;
      int i = static_cast<int>(tail.size()) - 1;
      while (i >= 0 && tail[i] == q - 1) tail[i--] = 0;
      if (i < 0) break;
      ++tail[i];
    }
  }
}

}  // namespace

AdmissibilityResult is_admissible(const SubspaceFamily& f, ForbiddenClass cls, int t,
                                  const EnumerationBudget& budget) {
  if (t < 0) throw Error(Errc::ParameterOutOfRange, "negative radius");
  const int n = f.ambient_dim();
  const int d = class_diameter(cls, t);
  AdmissibilityResult res;
  if (!f.empty()) {
    const auto dr = diameter(f, d);
    res.diameter = dr.diameter;
    if (dr.diameter > d) {
      res.reason = "diameter exceeds " + std::to_string(d) + ": delta(" + to_string(f.members()[dr.first]) + ", " +
                   to_string(f.members()[dr.second]) + ") = " + std::to_string(dr.diameter);
      return res;
    }
  }
  res.diameter_ok = true;
  const Subspace zero = Subspace::zero(f.field(), n);
  const int lo = f.empty() ? 0 : f.support().front();
  const int hi = f.empty() ? 0 : f.support().back();

  auto contained = [&](std::string kind, std::vector<Subspace> centers, std::string reason) {
    res.admissible = false;
    res.witness_kind = std::move(kind);
    res.witness_centers = std::move(centers);
    res.reason = std::move(reason);
    return res;
  };

  switch (cls) {
    case ForbiddenClass::AEven: {
      if (hi <= t) return contained("L_t", {zero}, "contained in L_" + std::to_string(t));
      if (lo >= n - t)
        return contained("U_t", {Subspace::full(f.field(), n)}, "contained in U_" + std::to_string(t));
      break;
    }
    case ForbiddenClass::AOdd: {
      if (auto x = double_ball_center(f, t))
        return contained("D_t(X)", {*x}, "contained in D_" + std::to_string(t) + "(" + to_string(*x) + ")");
      if (auto x = double_ball_center(perp_family(f), t))
        return contained("D_t(X)^perp", {*x},
                         "contained in D_" + std::to_string(t) + "(" + to_string(*x) + ")^perp");
      break;
    }
    case ForbiddenClass::BEven: {
      const auto probes = probe_order(f);
      std::optional<Subspace> found;
      for (int c = std::max(0, hi - t); c <= std::min(n, lo + t) && !found; ++c) {
        for_each_in_layer(
            f.field(), n, c,
            [&](const Subspace& center) {
              if (found) return;
              for (const Subspace* a : probes)
                if (delta(*a, center) > t) return;
              found = center;
            },
            budget);
      }
      if (found) return contained("B(X,t)", {*found}, "contained in B(" + to_string(*found) + ", " + std::to_string(t) + ")");
      break;
    }
    case ForbiddenClass::BOdd: {
      const auto probes = probe_order(f);
      std::optional<std::pair<Subspace, Subspace>> found;
      for (int a = std::max(0, hi - t - 1); a <= std::min(n - 1, lo + t) && !found; ++a) {
        for_each_in_layer(
            f.field(), n, a,
            [&](const Subspace& p) {
              if (found) return;
              std::vector<const Subspace*> outside;
              for (const Subspace* m : probes) {
                const int dist = delta(*m, p);
                if (dist > t + 1) return;  // then delta(m, Q) >= dist - 1 > t for every cover Q
                if (dist == t + 1) outside.push_back(m);
              }
              for_each_cover(p, [&](const Subspace& cover) {
                for (const Subspace* m : outside)
                  if (delta(*m, cover) > t) return true;
                found.emplace(p, cover);
                return false;
              });
            },
            budget);
      }
      if (found)
        return contained("B(X,Y,t)", {found->first, found->second},
                         "contained in B(" + to_string(found->first) + ", " + to_string(found->second) + ", " +
                             std::to_string(t) + ")");
      break;
    }
  }
  res.admissible = !f.empty();
  if (f.empty()) res.reason = "the empty family lies in every configuration";
  return res;
}

// ---------------------------------------------------------------- file format

void write_family(std::ostream& out, const SubspaceFamily& f) {
  out << "family " << f.q() << ' ' << f.ambient_dim() << ' ' << f.size() << '\n';
  write_subspaces(out, f.members());
}

SubspaceFamily read_family(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "missing 'family q n count' header");
  std::istringstream header(line);
  std::string tag;
  long long q = 0, n = 0, count = 0;
  if (!(header >> tag >> q >> n >> count) || tag != "family" || q < 2 || n < 0 || count < 0)
    throw ParseError(lineno, "malformed header, expected 'family q n count'");
  std::string extra;
  if (header >> extra) throw ParseError(lineno, "trailing text after header");
  Field field;
  try {
    field = field_new(static_cast<int>(q));
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
  std::vector<Subspace> members;
  members.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!next_line()) throw ParseError(lineno + 1, "expected " + std::to_string(count) + " members, found " + std::to_string(i));
    try {
      Subspace s = parse_subspace(line);
      if (s.q() != q || s.ambient_dim() != n) throw ParseError(0, "member does not match header q/n");
      members.push_back(std::move(s));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      const std::string prefix = "ParseError: ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      throw ParseError(lineno, msg);
    }
  }
  if (next_line()) throw ParseError(lineno, "more members than the header count");
  SubspaceFamily fam(field, static_cast<int>(n), std::move(members));
  if (fam.size() != static_cast<std::size_t>(count)) throw ParseError(0, "duplicate members in family file");
  return fam;
}

}  // namespace qdiam
