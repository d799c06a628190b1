#include "qdiam/qcount.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "qdiam/errors.hpp"

namespace qdiam {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

void require_q(int q) {
  if (q < 2) throw Error(Errc::ParameterOutOfRange, "q must be >= 2, got " + std::to_string(q));
}

BigInt gb(int n, int k, int q) { return gauss_binom(n, k, q).value(); }

BigInt lower_sum(int n, int top, int q) {
  BigInt s = 0;
  for (int i = 0; i <= top; ++i) s += gb(n, i, q);
  return s;
}

}  // namespace

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw Error(Errc::ParameterOutOfRange, "count evaluates to a negative number");
}

unsigned long long BigCount::to_u64() const {
  if (value_ > std::numeric_limits<unsigned long long>::max())
    throw Error(Errc::ParameterOutOfRange, "count " + str() + " exceeds 64 bits");
  return value_.convert_to<unsigned long long>();
}

BigInt q_pow(int q, long long e) {
  if (e < 0) throw Error(Errc::ParameterOutOfRange, "negative exponent");
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
}

BigCount gauss_binom(int n, int k, int q) {
  require_q(q);
  if (n < 0 || k < 0 || k > n) return BigCount(0);
  if (k == 0 || k == n) return BigCount(1);

  // q-Pascal rows, memoized per q: [n k] = [n-1 k-1] + q^k [n-1 k]
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<BigInt>>> tables;
  std::lock_guard lock(mu);
  auto& rows = tables[q];
  if (rows.empty()) rows.push_back({BigInt(1)});
  while (static_cast<int>(rows.size()) <= n) {
    const int m = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<BigInt> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    BigInt qk = q;
    for (int j = 1; j < m; ++j) {
      row[j] = prev[j - 1] + qk * prev[j];
      qk *= q;
    }
    rows.push_back(std::move(row));
  }
  return BigCount(rows[n][k]);
}

BigCount count_profile(int n, int k, int l, int j, int q) {
  require_q(q);
  if (k < 0 || l < 0 || k > n || l > n) return BigCount(0);
  if (j < 0 || j > k || j > l) return BigCount(0);
  return BigCount(q_pow(q, static_cast<long long>(k - j) * (l - j)) * gb(n - k, l - j, q) * gb(k, j, q));
}

BoundValue kleitman_bound(int n, int d, int q) {
  require_q(q);
  if (d < 2 || n < d + 1)
    throw Error(Errc::ParameterOutOfRange,
                "diameter bound needs n >= d+1 >= 3 (" + params({{"n", n}, {"d", d}}) + ")");
  const int t = d / 2;
  BigInt v = lower_sum(n, t, q);
  if (d % 2 == 1) v += gb(n - 1, t, q);
  return {BigCount(v), true, "n >= d+1 >= 3"};
}

BoundValue typeA_even_bound(int n, int t, int q) {
  require_q(q);
  if (t < 1 || n < t + 1)
    throw Error(Errc::ParameterOutOfRange, "g(n,t) needs t >= 1, n >= t+1 (" + params({{"n", n}, {"t", t}}) + ")");
  BigInt v = lower_sum(n, t - 1, q) + gb(n - 1, t - 1, q) + gb(n - 1, t, q);
  return {BigCount(v), t >= 2 && n >= 7 * t + 5, "t >= 2 and n >= 7t+5"};
}

BigCount hm_excess(int n, int t, int q) {
  require_q(q);
  if (t < 1 || n < t + 3)
    throw Error(Errc::ParameterOutOfRange, "H(n,t) needs t >= 1, n >= t+3 (" + params({{"n", n}, {"t", t}}) + ")");
  return BigCount(gb(n - 1, t, q) - q_pow(q, static_cast<long long>(t) * (t + 1)) * gb(n - t - 2, t, q) +
                  q_pow(q, t + 1));
}

BoundValue odd_stability_bound(int n, int t, int q) {
  BigInt v = hm_excess(n, t, q).value() + lower_sum(n, t, q);
  return {BigCount(v), t >= 2 && n >= 5 * t + 3, "t >= 2 and n >= 5t+3"};
}

BoundValue typeB_even_bound(int n, int t, int q) {
  require_q(q);
  if (t < 1 || n < t)
    throw Error(Errc::ParameterOutOfRange, "Type B bound needs t >= 1, n >= t (" + params({{"n", n}, {"t", t}}) + ")");
  BigInt v = lower_sum(n, t - 1, q) + BigInt(2 * t + 1) * q_pow(q, 2) * gb(3 * t, t, q) * gb(n, t - 1, q);
  return {BigCount(v), t >= 2 && n >= 6 * t, "t >= 2 and n >= 6t"};
}

BoundValue ekr_bound(int n, int k, int s, int q) {
  require_q(q);
  if (s < 0 || s > k || n < 2 * k - s || k > n)
    throw Error(Errc::ParameterOutOfRange,
                "EKR bound needs 0 <= s <= k and n >= 2k-s (" + params({{"n", n}, {"k", k}, {"s", s}}) + ")");
  BigInt a = gb(n - s, k - s, q);
  BigInt b = gb(2 * k - s, k - s, q);
  return {BigCount(a > b ? a : b), true, "n >= 2k-s"};
}

BoundValue nontrivial_intersecting_bound(int n, int k, int s, int q) {
  require_q(q);
  if (s < 1 || k < s + 2 || n < 2 * k)
    throw Error(Errc::ParameterOutOfRange, "nontrivial intersecting bound needs s >= 1, k >= s+2, n >= 2k (" +
                                               params({{"n", n}, {"k", k}, {"s", s}}) + ")");
  BigInt v;
  // s = 1 is the Hilton-Milner value; for k >= 4 it coincides with the first case below.
  if (s == 1 || 2 * s <= k - 2) {
    v = gb(n - s, k - s, q) - q_pow(q, static_cast<long long>(k + 1 - s) * (k - s)) * gb(n - k - 1, k - s, q) +
        q_pow(q, k + 1 - s) * gb(s, 1, q);
  } else {
    v = gb(s + 2, 1, q) * gb(n - s - 1, k - s - 1, q) - BigInt(q) * gb(s + 1, 1, q) * gb(n - s - 2, k - s - 2, q);
  }
  return {BigCount(v), n >= 2 * k + 2, "s >= 1, k >= s+2, n >= 2k+2"};
}

BoundValue complementary_pair_bound(int n, int k, int q) {
  require_q(q);
  if (k < 1 || k >= n - k)
    throw Error(Errc::ParameterOutOfRange,
                "complementary pair bound needs 1 <= k < n-k (" + params({{"n", n}, {"k", k}}) + ")");
  return {BigCount(gb(n, k, q) - q_pow(q, static_cast<long long>(k) * (n - k)) + 1), true, "1 <= k < n-k"};
}

BoundValue cross_intersecting_sum_bound(int n, int a, int b, int t, int q) {
  require_q(q);
  if (a < 1 || b < 1 || t < 1 || t > a || t > b || a > n || b > n)
    throw Error(Errc::ParameterOutOfRange, "cross-intersecting bound needs 1 <= t <= min(a,b), a,b <= n (" +
                                               params({{"n", n}, {"a", a}, {"b", b}, {"t", t}}) + ")");
  BigInt v = gb(n, b, q) + 1;
  for (int i = 0; i < t; ++i)
    v -= q_pow(q, static_cast<long long>(a - i) * (b - i)) * gb(a, i, q) * gb(n - a, b - i, q);
  const bool in_range = n >= 4 && a >= 2 && b >= 2 && t < std::min(a, b) && a + b < n + t && gb(n, a, q) <= gb(n, b, q);
  return {BigCount(v), in_range, "n >= 4, a,b >= 2, t < min(a,b), a+b < n+t, [n a] <= [n b]"};
}

Comparison nontrivial_comparison(int n, int k, int s, int q) {
  require_q(q);
  Comparison c;
  c.lhs = gb(n - s, k - s, q) - q_pow(q, static_cast<long long>(k + 1 - s) * (k - s)) * gb(n - k - 1, k - s, q) +
          q_pow(q, k + 1 - s) * gb(s, 1, q);
  c.rhs = gb(k - s + 1, 1, q) * gb(n - s - 1, k - s - 1, q);
  return c;
}

}  // namespace qdiam
