#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qdiam/field.hpp"
#include "qdiam/subspace.hpp"

namespace qdiam {

struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxItems = 10'000'000;
  static constexpr std::uint64_t kDefaultMemoryBytes = std::uint64_t{2} << 30;

  std::uint64_t max_items = kDefaultMaxItems;
  std::uint64_t memory_bytes = kDefaultMemoryBytes;
  int threads = 1;
};

/// Calls `visit` once for every k-subspace of F_q^n, in canonical order.
/// Subspaces are generated directly in RREF: for each pivot-column set (in
/// lexicographic order) every filling of the free cells (lexicographic).
/// Throws BudgetExceeded, carrying [n k]_q, when the layer is larger than the budget.
void for_each_in_layer(const Field& field, int n, int k, const std::function<void(const Subspace&)>& visit,
                       const EnumerationBudget& budget = {});

/// Materialized layer. With budget.threads > 1 the pivot patterns are split
/// across workers and the chunks are concatenated in pattern order.
std::vector<Subspace> enumerate_layer(const Field& field, int n, int k, const EnumerationBudget& budget = {});

/// All subspaces of F_q^n sorted by the canonical order, with layer offsets and
/// an optional pairwise distance table.
class LatticeIndex {
 public:
  LatticeIndex(Field field, int n, const EnumerationBudget& budget = {});

  const Field& field() const noexcept { return field_; }
  int ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return all_.size(); }
  const Subspace& operator[](std::size_t i) const noexcept { return all_[i]; }
  std::span<const Subspace> all() const noexcept { return all_; }

  /// Index range [begin, end) of layer k.
  std::pair<std::size_t, std::size_t> layer_range(int k) const;
  std::span<const Subspace> layer(int k) const;

  /// Position of s in the index, or nullopt when s belongs to another lattice.
  std::optional<std::size_t> index_of(const Subspace& s) const;

  /// Builds the distance table. Throws BudgetExceeded when size()^2 bytes does
  /// not fit into budget.memory_bytes.
  void materialize_distances(const EnumerationBudget& budget = {});
  bool has_distances() const noexcept { return !dist_.empty(); }
  int distance(std::size_t i, std::size_t j) const;

  /// Index of perp((*this)[i]).
  std::size_t perp_index(std::size_t i) const { return perp_.at(i); }

 private:
  Field field_;
  int n_;
  std::vector<Subspace> all_;
  std::vector<std::size_t> offsets_;  // n+2 entries
  std::unordered_map<Subspace, std::size_t> position_;
  std::vector<std::size_t> perp_;
  std::vector<std::uint8_t> dist_;
};

/// Line-per-subspace dump in the subspace text format.
void write_subspaces(std::ostream& out, std::span<const Subspace> items);

}  // namespace qdiam
