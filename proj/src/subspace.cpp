#include "qdiam/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "qdiam/errors.hpp"

namespace qdiam {

namespace {

// Reduces the rows x n matrix `m` in place to RREF and returns its rank; rows
// [rank, rows) end up zero.
int rref_generic(std::vector<Elem>& m, int rows, int n, const FieldSpec& f) {
  auto at = [&](int r, int c) -> Elem& { return m[static_cast<std::size_t>(r) * n + c]; };
  int rank = 0;
  for (int c = 0; c < n && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv) * n,
                       m.begin() + static_cast<std::ptrdiff_t>(piv + 1) * n,
                       m.begin() + static_cast<std::ptrdiff_t>(rank) * n);
    const Elem scale = f.inv(at(rank, c));
    if (scale != 1)
      for (int j = c; j < n; ++j) at(rank, j) = f.mul(at(rank, j), scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem coef = at(r, c);
      if (coef == 0) continue;
      for (int j = c; j < n; ++j) at(r, j) = f.sub(at(r, j), f.mul(coef, at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

// GF(2) version on packed rows. The first `rank` words are the RREF rows.
int rref_words(std::vector<std::uint64_t>& rows, int n) {
  int rank = 0;
  const int count = static_cast<int>(rows.size());
  for (int c = 0; c < n && rank < count; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    int piv = -1;
    for (int r = rank; r < count; ++r) {
      if (rows[r] & bit) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < count; ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Rank of an arbitrary list of packed rows (echelon only, no back-substitution).
int rank_words(std::uint64_t* rows, int count) {
  int rank = 0;
  for (int i = 0; i < count; ++i) {
    std::uint64_t v = rows[i];
    for (int j = 0; j < rank && v; ++j) {
      const std::uint64_t low = rows[j] & (~rows[j] + 1);
      if (v & low) v ^= rows[j];
    }
    if (v) {
      // keep the basis sorted so that each basis row's lowest bit is unique and
      // cleared in the later rows
      for (int j = 0; j < rank; ++j) {
        const std::uint64_t low = v & (~v + 1);
        if (rows[j] & low) rows[j] ^= v;
      }
      rows[rank++] = v;
    }
  }
  return rank;
}

void require_same_ambient(const Subspace& s, const Subspace& t) {
  if (s.field() != t.field() || s.ambient_dim() != t.ambient_dim())
    throw Error(Errc::AmbientMismatch,
                "subspaces of F_" + std::to_string(s.q()) + "^" + std::to_string(s.ambient_dim()) +
                    " and F_" + std::to_string(t.q()) + "^" + std::to_string(t.ambient_dim()));
}

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

class SubspaceBuilder {
 public:
  static Subspace make(Field field, int n, int dim, std::vector<Elem> entries) {
    Subspace s(std::move(field), n);
    s.dim_ = dim;
    s.entries_ = std::move(entries);
    s.entries_.resize(static_cast<std::size_t>(dim) * n);
    s.finish();
    return s;
  }

  static Subspace from_words(Field field, int n, std::vector<std::uint64_t> rows) {
    const int rank = rref_words(rows, n);
    std::vector<Elem> entries(static_cast<std::size_t>(rank) * n, 0);
    for (int r = 0; r < rank; ++r)
      for (int c = 0; c < n; ++c) entries[static_cast<std::size_t>(r) * n + c] = (rows[r] >> c) & 1u;
    return make(std::move(field), n, rank, std::move(entries));
  }

  static Subspace from_matrix(Field field, int n, int rows, std::vector<Elem> m) {
    const int rank = rref_generic(m, rows, n, *field);
    return make(std::move(field), n, rank, std::move(m));
  }
};

void Subspace::finish() {
  pivots_.clear();
  pivots_.reserve(dim_);
  for (int r = 0; r < dim_; ++r) {
    const auto rw = row(r);
    const auto it = std::find_if(rw.begin(), rw.end(), [](Elem x) { return x != 0; });
    pivots_.push_back(static_cast<int>(it - rw.begin()));
  }
  words_.clear();
  if (packable()) {
    words_.resize(dim_);
    for (int r = 0; r < dim_; ++r) {
      std::uint64_t w = 0;
      const auto rw = row(r);
      for (int c = 0; c < n_; ++c)
        if (rw[c]) w |= std::uint64_t{1} << c;
      words_[r] = w;
    }
  }
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(field_->q()));
  mix(static_cast<std::size_t>(n_));
  mix(static_cast<std::size_t>(dim_));
  for (Elem e : entries_) mix(e);
  hash_ = h;
}

Subspace Subspace::zero(Field field, int n) {
  if (n < 0) throw Error(Errc::DimensionMismatch, "negative ambient dimension");
  return SubspaceBuilder::make(std::move(field), n, 0, {});
}

Subspace Subspace::full(Field field, int n) {
  if (n < 0) throw Error(Errc::DimensionMismatch, "negative ambient dimension");
  std::vector<Elem> id(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
  return SubspaceBuilder::make(std::move(field), n, n, std::move(id));
}

Subspace Subspace::from_generators(Field field, int n, std::span<const Vector> gens) {
  if (n < 0) throw Error(Errc::DimensionMismatch, "negative ambient dimension");
  const int q = field->q();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].size()) != n)
      throw Error(Errc::DimensionMismatch, "generator " + std::to_string(i) + " has length " +
                                               std::to_string(gens[i].size()) + ", expected " +
                                               std::to_string(n));
    for (Elem x : gens[i])
      if (x >= q)
        throw Error(Errc::DimensionMismatch,
                    "generator " + std::to_string(i) + " has an entry outside GF(" + std::to_string(q) + ")");
  }
  if (field->is_binary() && n <= kMaxPackedDim) {
    std::vector<std::uint64_t> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
      std::uint64_t w = 0;
      for (int c = 0; c < n; ++c)
        if (g[c]) w |= std::uint64_t{1} << c;
      rows.push_back(w);
    }
    return SubspaceBuilder::from_words(std::move(field), n, std::move(rows));
  }
  std::vector<Elem> m;
  m.reserve(gens.size() * n);
  for (const auto& g : gens) m.insert(m.end(), g.begin(), g.end());
  return SubspaceBuilder::from_matrix(std::move(field), n, static_cast<int>(gens.size()), std::move(m));
}

Subspace Subspace::from_rref(Field field, int n, int dim, std::vector<Elem> entries) {
  if (dim < 0 || dim > n || entries.size() != static_cast<std::size_t>(dim) * n)
    throw ParseError(0, "matrix shape does not match dimension " + std::to_string(dim));
  const int q = field->q();
  int last_pivot = -1;
  for (int r = 0; r < dim; ++r) {
    const Elem* rw = entries.data() + static_cast<std::size_t>(r) * n;
    int pivot = -1;
    for (int c = 0; c < n; ++c) {
      if (rw[c] >= q) throw ParseError(0, "entry outside GF(" + std::to_string(q) + ")");
      if (pivot < 0 && rw[c] != 0) pivot = c;
    }
    if (pivot < 0) throw ParseError(0, "row " + std::to_string(r) + " is zero");
    if (rw[pivot] != 1) throw ParseError(0, "row " + std::to_string(r) + " has pivot entry != 1");
    if (pivot <= last_pivot) throw ParseError(0, "pivot columns are not strictly increasing");
    for (int o = 0; o < dim; ++o)
      if (o != r && entries[static_cast<std::size_t>(o) * n + pivot] != 0)
        throw ParseError(0, "pivot column " + std::to_string(pivot) + " is not cleared");
    last_pivot = pivot;
  }
  return SubspaceBuilder::make(std::move(field), n, dim, std::move(entries));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != n_)
    throw Error(Errc::DimensionMismatch, "vector length does not match ambient dimension");
  if (packable()) {
    std::uint64_t w = 0;
    for (int c = 0; c < n_; ++c)
      if (v[c]) w |= std::uint64_t{1} << c;
    for (int r = 0; r < dim_; ++r)
      if (w >> pivots_[r] & 1u) w ^= words_[r];
    return w == 0;
  }
  const FieldSpec& f = *field_;
  Vector rest(v.begin(), v.end());
  for (int r = 0; r < dim_; ++r) {
    const Elem coef = rest[pivots_[r]];
    if (coef == 0) continue;
    const auto rw = row(r);
    for (int c = 0; c < n_; ++c) rest[c] = f.sub(rest[c], f.mul(coef, rw[c]));
  }
  return std::all_of(rest.begin(), rest.end(), [](Elem x) { return x == 0; });
}

bool operator==(const Subspace& a, const Subspace& b) noexcept {
  return a.hash_ == b.hash_ && a.field_->q() == b.field_->q() && a.n_ == b.n_ && a.dim_ == b.dim_ &&
         a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.field_->q() <=> b.field_->q(); c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

int sum_dim(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  if (t.dim() == 0) return s.dim();
  if (s.dim() == 0) return t.dim();
  const int n = s.ambient_dim();
  if (s.packed()) {
    // reduce T's rows against the RREF rows of S, then take the rank of what is left
    const auto sw = s.words();
    const auto& sp = s.pivots();
    std::uint64_t rest[Subspace::kMaxPackedDim];
    int count = 0;
    for (std::uint64_t w : t.words()) {
      for (int r = 0; r < s.dim(); ++r)
        if (w >> sp[r] & 1u) w ^= sw[r];
      if (w) rest[count++] = w;
    }
    return s.dim() + rank_words(rest, count);
  }
  const FieldSpec& f = *s.field();
  std::vector<Elem> rest;
  rest.reserve(static_cast<std::size_t>(t.dim()) * n);
  int count = 0;
  for (int i = 0; i < t.dim(); ++i) {
    Vector v(t.row(i).begin(), t.row(i).end());
    for (int r = 0; r < s.dim(); ++r) {
      const Elem coef = v[s.pivots()[r]];
      if (coef == 0) continue;
      const auto rw = s.row(r);
      for (int c = 0; c < n; ++c) v[c] = f.sub(v[c], f.mul(coef, rw[c]));
    }
    if (std::any_of(v.begin(), v.end(), [](Elem x) { return x != 0; })) {
      rest.insert(rest.end(), v.begin(), v.end());
      ++count;
    }
  }
  if (count == 0) return s.dim();
  return s.dim() + rref_generic(rest, count, n, f);
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  const int n = s.ambient_dim();
  if (s.packed()) {
    std::vector<std::uint64_t> rows(s.words().begin(), s.words().end());
    rows.insert(rows.end(), t.words().begin(), t.words().end());
    return SubspaceBuilder::from_words(s.field(), n, std::move(rows));
  }
  std::vector<Elem> m(s.entries().begin(), s.entries().end());
  m.insert(m.end(), t.entries().begin(), t.entries().end());
  return SubspaceBuilder::from_matrix(s.field(), n, s.dim() + t.dim(), std::move(m));
}

Subspace perp(const Subspace& s) {
  const int n = s.ambient_dim();
  const FieldSpec& f = *s.field();
  std::vector<bool> is_pivot(n, false);
  for (int p : s.pivots()) is_pivot[p] = true;
  // For each free column c the vector with 1 at c and -R[i][c] at pivot p_i is
  // orthogonal to every row; these n - dim vectors span the complement.
  std::vector<Elem> m;
  m.reserve(static_cast<std::size_t>(n - s.dim()) * n);
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vector v(n, 0);
    v[c] = 1;
    for (int r = 0; r < s.dim(); ++r) v[s.pivots()[r]] = f.neg(s.row(r)[c]);
    m.insert(m.end(), v.begin(), v.end());
  }
  const int rows = n - s.dim();
  if (s.packed()) {
    std::vector<std::uint64_t> w(rows, 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < n; ++c)
        if (m[static_cast<std::size_t>(r) * n + c]) w[r] |= std::uint64_t{1} << c;
    return SubspaceBuilder::from_words(s.field(), n, std::move(w));
  }
  return SubspaceBuilder::from_matrix(s.field(), n, rows, std::move(m));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  return perp(sum(perp(s), perp(t)));
}

bool contains(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  if (t.dim() > s.dim()) return false;
  for (int i = 0; i < t.dim(); ++i)
    if (!s.contains_vector(t.row(i))) return false;
  return true;
}

int delta(const Subspace& s, const Subspace& t) {
  const int sd = sum_dim(s, t);
  const int d = 2 * sd - s.dim() - t.dim();
  assert(d == delta_via_intersection(s, t));
  return d;
}

int delta_via_intersection(const Subspace& s, const Subspace& t) {
  return s.dim() + t.dim() - 2 * intersect(s, t).dim();
}

std::string to_string(const Subspace& s) {
  std::string out = std::to_string(s.q()) + ':' + std::to_string(s.ambient_dim()) + ':' +
                    std::to_string(s.dim()) + ':';
  for (int r = 0; r < s.dim(); ++r) {
    if (r) out += ',';
    for (Elem x : s.row(r)) out += digit_char(x);
  }
  return out;
}

Subspace parse_subspace(std::string_view text) {
  auto next_field = [&text](const char* what) {
    const auto pos = text.find(':');
    if (pos == std::string_view::npos) throw ParseError(0, std::string("missing ':' after ") + what);
    auto head = text.substr(0, pos);
    text.remove_prefix(pos + 1);
    if (head.empty()) throw ParseError(0, std::string("empty ") + what);
    int v = 0;
    for (char c : head) {
      if (c < '0' || c > '9') throw ParseError(0, std::string("non-numeric ") + what);
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw ParseError(0, std::string(what) + " too large");
    }
    return v;
  };
  const int q = next_field("q");
  const int n = next_field("n");
  const int d = next_field("d");
  Field field;
  try {
    field = field_new(q);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  if (d > n) throw ParseError(0, "dimension exceeds ambient dimension");
  std::vector<Elem> entries;
  entries.reserve(static_cast<std::size_t>(d) * n);
  int rows = 0;
  while (!text.empty() || (rows == 0 && d > 0)) {
    const auto pos = text.find(',');
    const auto row = text.substr(0, pos);
    if (static_cast<int>(row.size()) != n)
      throw ParseError(0, "row " + std::to_string(rows) + " has " + std::to_string(row.size()) +
                              " digits, expected " + std::to_string(n));
    for (char c : row) {
      const int v = digit_value(c);
      if (v < 0 || v >= q) throw ParseError(0, std::string("invalid digit '") + c + "'");
      entries.push_back(static_cast<Elem>(v));
    }
    ++rows;
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
    if (text.empty()) throw ParseError(0, "trailing ','");
  }
  if (rows != d)
    throw ParseError(0, "expected " + std::to_string(d) + " rows, found " + std::to_string(rows));
  return Subspace::from_rref(std::move(field), n, d, std::move(entries));
}

Vector unit_vector(int n, int i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

Subspace coordinate_subspace(const Field& field, int n, std::span<const int> idx) {
  std::vector<Vector> gens;
  for (int i : idx) {
    if (i < 0 || i >= n) throw Error(Errc::DimensionMismatch, "coordinate " + std::to_string(i) + " outside 0..n-1");
    gens.push_back(unit_vector(n, i));
  }
  return Subspace::from_generators(field, n, gens);
}

Subspace random_subspace(const Field& field, int n, int k, std::mt19937_64& rng) {
  if (k < 0 || k > n) throw Error(Errc::DimensionMismatch, "random_subspace needs 0 <= k <= n");
  std::uniform_int_distribution<int> pick(0, field->q() - 1);
  std::vector<Vector> gens(k, Vector(n));
  while (true) {
    for (auto& g : gens)
      for (auto& e : g) e = static_cast<Elem>(pick(rng));
    Subspace s = Subspace::from_generators(field, n, gens);
    if (s.dim() == k) return s;
  }
}

}  // namespace qdiam
