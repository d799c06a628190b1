#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdiam/field.hpp"

namespace qdiam {

using Vector = std::vector<Elem>;

/// A subspace of F_q^n held in reduced row echelon form. The representation is
/// canonical, so equality, ordering and hashing are structural.
///
/// Over GF(2) with n <= 64 every row is additionally kept as a machine word
/// (bit j = column j) and all elimination runs word-parallel.
class Subspace {
 public:
  static constexpr int kMaxPackedDim = 64;

  /// The zero subspace of F_q^n.
  static Subspace zero(Field field, int n);
  /// F_q^n itself.
  static Subspace full(Field field, int n);

  /// Canonical RREF of the span of `gens`. Throws DimensionMismatch on ragged
  /// input or entries outside 0..q-1.
  static Subspace from_generators(Field field, int n, std::span<const Vector> gens);

  /// Adopts a matrix that is already in RREF (dim rows of length n, row-major).
  /// Throws ParseError when it is not.
  static Subspace from_rref(Field field, int n, int dim, std::vector<Elem> entries);

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return field_->q(); }
  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  std::span<const Elem> row(int i) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const Elem> entries() const noexcept { return entries_; }
  bool packed() const noexcept { return packable(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// True iff v lies in this subspace.
  bool contains_vector(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept;
  /// Lexicographic on (dim, pivot set, row entries).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

  std::size_t hash() const noexcept { return hash_; }

 private:
  Subspace(Field field, int n) : field_(std::move(field)), n_(n) {}
  bool packable() const noexcept { return field_->is_binary() && n_ <= kMaxPackedDim; }
  void finish();  // fills pivots, packed words and hash from entries_

  Field field_;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Elem> entries_;
  std::vector<int> pivots_;
  std::vector<std::uint64_t> words_;
  std::size_t hash_ = 0;

  friend class SubspaceBuilder;
};

/// S + T. Throws AmbientMismatch when fields or ambient dimensions differ.
Subspace sum(const Subspace& s, const Subspace& t);
/// S ∩ T, computed as perp(perp(S) + perp(T)).
Subspace intersect(const Subspace& s, const Subspace& t);
/// T <= S.
bool contains(const Subspace& s, const Subspace& t);
/// Orthogonal complement with respect to the standard dot product.
Subspace perp(const Subspace& s);

/// dim(S + T) without building its canonical form.
int sum_dim(const Subspace& s, const Subspace& t);
/// dim(S ∩ T) by the modular law.
inline int intersection_dim(const Subspace& s, const Subspace& t) {
  return s.dim() + t.dim() - sum_dim(s, t);
}

/// Subspace distance dim(S+T) - dim(S∩T).
int delta(const Subspace& s, const Subspace& t);
/// Same quantity through the explicit intersection, dim S + dim T - 2 dim(S∩T).
int delta_via_intersection(const Subspace& s, const Subspace& t);

/// Rendering `q:n:d:` followed by the rows as base-q digit strings separated by
/// commas, e.g. `2:4:2:1100,0011`. Digits above 9 use a..f.
std::string to_string(const Subspace& s);
/// Inverse of to_string. Rejects malformed text and matrices not in RREF.
Subspace parse_subspace(std::string_view text);

/// Unit vector e_i of length n.
Vector unit_vector(int n, int i);
/// span(e_i for i in idx).
Subspace coordinate_subspace(const Field& field, int n, std::span<const int> idx);
/// A random k-subspace: random k x n matrices are drawn until one has rank k.
Subspace random_subspace(const Field& field, int n, int k, std::mt19937_64& rng);

}  // namespace qdiam

template <>
struct std::hash<qdiam::Subspace> {
  std::size_t operator()(const qdiam::Subspace& s) const noexcept { return s.hash(); }
};
