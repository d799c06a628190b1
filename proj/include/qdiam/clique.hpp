#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qdiam {

/// Dense bitset over a fixed vertex count.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::uint64_t* data() noexcept { return words_.data(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return words_[i >> 6] >> (i & 63) & 1u; }
  bool none() const noexcept;
  std::size_t count() const noexcept;
  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept;
  /// popcount(*this & other)
  std::size_t count_and(const Bits& other) const noexcept;
  /// (*this & ~other) is empty
  bool subset_of(const Bits& other) const noexcept;
  std::vector<std::size_t> indices() const;

  Bits& operator&=(const Bits& o) noexcept;
  Bits& operator|=(const Bits& o) noexcept;
  friend Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Parameters and hooks of a maximum-clique search over vertices 0..n-1.
/// Coloring always picks the lowest-numbered vertex first, so callers should
/// number vertices by degeneracy_order() (core first).
struct CliqueProblem {
  std::vector<Bits> adjacency;

  /// Extra upper bound on the size of any clique inside `candidates`
  /// (which already includes the current clique). Optional.
  std::function<std::size_t(const Bits& candidates)> extra_bound;

  /// When set, a clique is recorded only if it is accepted, and acceptance is
  /// tried at every node (the accepted property need not be hereditary).
  /// When unset, only maximal cliques are recorded.
  std::function<bool(const Bits& clique)> accept;

  /// Returns true when no clique C with current ⊆ C ⊆ candidates can be accepted.
  std::function<bool(const Bits& current, const Bits& candidates)> dead_end;

  bool collect_all = false;     // keep every clique of the optimum size
  std::size_t max_collected = 100000;
  int threads = 1;
  std::chrono::milliseconds timeout{0};  // 0 = none
};

struct CliqueResult {
  std::size_t best_size = 0;
  bool proven_optimal = true;  // false on timeout
  std::vector<Bits> cliques;   // cliques of size best_size, sorted; capped at max_collected
  std::uint64_t clique_count = 0;  // all cliques of size best_size found (collect_all)
  std::uint64_t nodes = 0;
};

/// Vertices listed so that the last vertex removed by repeated minimum-degree
/// deletion comes first (ties broken by vertex number).
std::vector<std::size_t> degeneracy_order(std::span<const Bits> adjacency);

/// Branch and bound with greedy-coloring bounds. Root branches are distributed over
/// problem.threads workers that share a monotone incumbent; the result is
/// independent of the worker count.
CliqueResult max_clique(const CliqueProblem& problem);

}  // namespace qdiam
