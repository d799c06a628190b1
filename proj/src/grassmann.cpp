#include "qdiam/grassmann.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "qdiam/errors.hpp"
#include "qdiam/qcount.hpp"

namespace qdiam {

namespace {

void check_budget(const Field& field, int n, int k, const EnumerationBudget& budget) {
  const BigCount size = gauss_binom(n, k, field->q());
  if (size.value() > budget.max_items)
    throw BudgetExceeded("layer " + std::to_string(k) + " of F_" + std::to_string(field->q()) + "^" +
                             std::to_string(n) + " exceeds the budget of " + std::to_string(budget.max_items),
                         size.str());
}

std::vector<std::vector<int>> pivot_patterns(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    out.push_back(cols);
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

// Every RREF matrix with the given pivot columns, free cells in lexicographic order.
void for_each_filling(const Field& field, int n, const std::vector<int>& pivots,
                      const std::function<void(const Subspace&)>& visit) {
  const int k = static_cast<int>(pivots.size());
  const int q = field->q();
  std::vector<Elem> base(static_cast<std::size_t>(k) * n, 0);
  std::vector<std::size_t> free_cells;
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int r = 0; r < k; ++r) {
    base[static_cast<std::size_t>(r) * n + pivots[r]] = 1;
    for (int c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_cells.push_back(static_cast<std::size_t>(r) * n + c);
  }
  std::vector<Elem> m = base;
  while (true) {
    visit(Subspace::from_rref(field, n, k, m));
    // odometer, last free cell fastest
    int i = static_cast<int>(free_cells.size()) - 1;
    while (i >= 0 && m[free_cells[i]] == q - 1) {
      m[free_cells[i]] = 0;
      --i;
    }
    if (i < 0) break;
    ++m[free_cells[i]];
  }
}

}  // namespace

void for_each_in_layer(const Field& field, int n, int k, const std::function<void(const Subspace&)>& visit,
                       const EnumerationBudget& budget) {
  if (k < 0 || k > n) throw Error(Errc::ParameterOutOfRange, "layer index outside 0..n");
  check_budget(field, n, k, budget);
  for (const auto& pattern : pivot_patterns(n, k)) for_each_filling(field, n, pattern, visit);
}

std::vector<Subspace> enumerate_layer(const Field& field, int n, int k, const EnumerationBudget& budget) {
  if (k < 0 || k > n) throw Error(Errc::ParameterOutOfRange, "layer index outside 0..n");
  check_budget(field, n, k, budget);
  const auto patterns = pivot_patterns(n, k);
  const int workers = std::max(1, std::min<int>(budget.threads, static_cast<int>(patterns.size())));
  std::vector<std::vector<Subspace>> chunks(patterns.size());
  auto work = [&](int w) {
    for (std::size_t i = w; i < patterns.size(); i += workers)
      for_each_filling(field, n, patterns[i], [&](const Subspace& s) { chunks[i].push_back(s); });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<Subspace> out;
  out.reserve(gauss_binom(n, k, field->q()).to_u64());
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
  return out;
}

LatticeIndex::LatticeIndex(Field field, int n, const EnumerationBudget& budget) : field_(std::move(field)), n_(n) {
  if (n < 0) throw Error(Errc::ParameterOutOfRange, "negative ambient dimension");
  BigCount total;
  for (int k = 0; k <= n; ++k) total += gauss_binom(n, k, field_->q());
  if (total.value() > budget.max_items)
    throw BudgetExceeded("subspace lattice of F_" + std::to_string(field_->q()) + "^" + std::to_string(n) +
                             " exceeds the budget of " + std::to_string(budget.max_items),
                         total.str());
  all_.reserve(total.to_u64());
  offsets_.push_back(0);
  for (int k = 0; k <= n; ++k) {
    auto layer = enumerate_layer(field_, n, k, budget);
    std::move(layer.begin(), layer.end(), std::back_inserter(all_));
    offsets_.push_back(all_.size());
  }
  position_.reserve(all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) position_.emplace(all_[i], i);
  perp_.resize(all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) perp_[i] = position_.at(perp(all_[i]));
}

std::pair<std::size_t, std::size_t> LatticeIndex::layer_range(int k) const {
  if (k < 0 || k > n_) return {0, 0};
  return {offsets_[k], offsets_[k + 1]};
}

std::span<const Subspace> LatticeIndex::layer(int k) const {
  const auto [b, e] = layer_range(k);
  return std::span<const Subspace>(all_).subspan(b, e - b);
}

std::optional<std::size_t> LatticeIndex::index_of(const Subspace& s) const {
  const auto it = position_.find(s);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

void LatticeIndex::materialize_distances(const EnumerationBudget& budget) {
  if (has_distances()) return;
  const std::uint64_t n = all_.size();
  if (n * n > budget.memory_bytes)
    throw BudgetExceeded("distance table exceeds the memory budget", std::to_string(n * n) + " bytes");
  dist_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = static_cast<std::uint8_t>(delta(all_[i], all_[j]));
      dist_[i * n + j] = d;
      dist_[j * n + i] = d;
    }
}

int LatticeIndex::distance(std::size_t i, std::size_t j) const {
  if (has_distances()) return dist_[i * all_.size() + j];
  return delta(all_[i], all_[j]);
}

void write_subspaces(std::ostream& out, std::span<const Subspace> items) {
  for (const auto& s : items) out << to_string(s) << '\n';
}

}  // namespace qdiam
