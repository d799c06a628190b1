#include "qdiam/clique.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>

namespace qdiam {

bool Bits::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bits::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::size_t Bits::count_and(const Bits& o) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  return c;
}

bool Bits::subset_of(const Bits& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Bits& Bits::operator&=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

std::vector<std::size_t> degeneracy_order(std::span<const Bits> adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adjacency[v].count();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    removal.push_back(pick);
    for (std::size_t u : adjacency[pick].indices())
      if (!removed[u]) --degree[u];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

namespace {

struct Shared {
  const CliqueProblem& problem;
  std::atomic<std::size_t> best{0};
  std::atomic<bool> stop{false};
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::mutex mu;
  std::vector<Bits> cliques;
  std::uint64_t clique_count = 0;
  std::atomic<std::uint64_t> nodes{0};

  explicit Shared(const CliqueProblem& p) : problem(p) {}

  // bound < best prunes when collecting ties, bound <= best otherwise
  bool hopeless(std::size_t bound) const {
    const std::size_t b = best.load(std::memory_order_relaxed);
    return problem.collect_all ? bound < b : bound <= b;
  }

  void record(const Bits& clique, std::size_t size) {
    std::lock_guard lock(mu);
    const std::size_t b = best.load();
    if (size > b) {
      best.store(size);
      cliques.clear();
      clique_count = 0;
    } else if (size < b || (size == b && !problem.collect_all && !cliques.empty())) {
      return;
    }
    ++clique_count;
    if (cliques.size() < problem.max_collected) cliques.push_back(clique);
  }
};

// Greedy sequential coloring of `p`, lowest vertex first; on return `order`
// lists the vertices by nondecreasing color and `colors` the color counts.
void color_sort(const CliqueProblem& problem, const Bits& p, std::vector<std::size_t>& order,
                std::vector<std::size_t>& colors) {
  order.clear();
  colors.clear();
  Bits rest = p;
  std::size_t color = 0;
  while (!rest.none()) {
    ++color;
    Bits avail = rest;
    while (!avail.none()) {
      const std::size_t v = avail.first();
      avail.reset(v);
      rest.reset(v);
      // drop v's neighbours from this color class
      const auto& adj = problem.adjacency[v];
      std::uint64_t* a = avail.data();
      const std::uint64_t* nb = adj.data();
      for (std::size_t i = 0; i < avail.word_count(); ++i) a[i] &= ~nb[i];
      order.push_back(v);
      colors.push_back(color);
    }
  }
}

class Worker {
 public:
  explicit Worker(Shared& shared) : s_(shared) {}

  // Processes one branch: the clique `r` (size rsize) with candidates `p`, where
  // the caller already added the branching vertex to r.
  void branch(Bits& r, std::size_t rsize, const Bits& p) {
    const auto& pr = s_.problem;
    if (pr.extra_bound || pr.dead_end) {
      const Bits cand = r | p;
      if (pr.extra_bound && s_.hopeless(pr.extra_bound(cand))) return;
      if (pr.dead_end && pr.dead_end(r, cand)) return;
    }
    if (pr.accept) {
      if (!s_.hopeless(rsize) && pr.accept(r)) s_.record(r, rsize);
    } else if (p.none()) {
      s_.record(r, rsize);
    }
    if (!p.none()) expand(r, rsize, p);
  }

  void expand(Bits& r, std::size_t rsize, Bits p) {
    if (s_.stop.load(std::memory_order_relaxed)) return;
    if ((s_.nodes.fetch_add(1, std::memory_order_relaxed) & 1023) == 0 && timed_out()) return;
    std::vector<std::size_t> order, colors;
    color_sort(s_.problem, p, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (s_.hopeless(rsize + colors[i])) return;
      if (s_.stop.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[i];
      r.set(v);
      branch(r, rsize + 1, p & s_.problem.adjacency[v]);
      r.reset(v);
      p.reset(v);
    }
  }

  bool timed_out() {
    const auto limit = s_.problem.timeout;
    if (limit.count() > 0 && std::chrono::steady_clock::now() - s_.start > limit) {
      s_.stop.store(true);
      return true;
    }
    return false;
  }

 private:
  Shared& s_;
};

}  // namespace

CliqueResult max_clique(const CliqueProblem& problem) {
  const std::size_t n = problem.adjacency.size();
  Shared shared(problem);
  CliqueResult result;
  if (n == 0) return result;

  Bits all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  std::vector<std::size_t> order, colors;
  color_sort(problem, all, order, colors);
  shared.nodes.fetch_add(1);

  // Root branch i: clique {order[i]}, candidates order[0..i) ∩ N(order[i]).
  std::vector<Bits> prefix(order.size(), Bits(n));
  for (std::size_t i = 1; i < order.size(); ++i) {
    prefix[i] = prefix[i - 1];
    prefix[i].set(order[i - 1]);
  }
  std::atomic<std::ptrdiff_t> next{static_cast<std::ptrdiff_t>(order.size()) - 1};
  auto run = [&]() {
    Worker w(shared);
    Bits r(n);
    while (true) {
      const std::ptrdiff_t i = next.fetch_sub(1);
      if (i < 0 || shared.stop.load()) return;
      if (shared.hopeless(colors[i])) continue;
      const std::size_t v = order[i];
      r.set(v);
      w.branch(r, 1, prefix[i] & problem.adjacency[v]);
      r.reset(v);
    }
  };
  const int workers = std::max(1, problem.threads);
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
  }

  result.best_size = shared.best.load();
  result.proven_optimal = !shared.stop.load();
  result.cliques = std::move(shared.cliques);
  std::sort(result.cliques.begin(), result.cliques.end());
  result.clique_count = shared.clique_count;
  result.nodes = shared.nodes.load();
  return result;
}

}  // namespace qdiam
