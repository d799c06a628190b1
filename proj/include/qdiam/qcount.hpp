#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace qdiam {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative integer. All closed-form counts and bounds are BigCounts;
/// signed intermediates (margins, differences) stay BigInt.
class BigCount {
 public:
  BigCount() = default;
  BigCount(unsigned long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(ParameterOutOfRange) when v < 0.
  explicit BigCount(BigInt v);

  const BigInt& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }
  /// Throws ParameterOutOfRange if the value does not fit.
  unsigned long long to_u64() const;

  friend BigCount operator+(const BigCount& a, const BigCount& b) { return BigCount(a.value_ + b.value_); }
  friend BigCount operator*(const BigCount& a, const BigCount& b) { return BigCount(a.value_ * b.value_); }
  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  BigInt value_;
};

/// A bound formula evaluated at a parameter tuple, plus whether the tuple lies
/// in the range where the corresponding theorem is proved.
struct BoundValue {
  BigCount value;
  bool in_hypothesis_range = false;
  std::string hypothesis;  // e.g. "t >= 2 and n >= 7t+5"
};

BigInt q_pow(int q, long long e);

/// Gaussian binomial [n k]_q; 0 when k < 0 or k > n (or n < 0).
BigCount gauss_binom(int n, int k, int q);

/// Number of l-subspaces meeting a fixed k-subspace of F_q^n in exactly dimension j.
BigCount count_profile(int n, int k, int l, int j, int q);

/// Maximum size of a family of diameter <= d. Requires n >= d+1 >= 3.
BoundValue kleitman_bound(int n, int d, int q);

/// g(n,t): size of the radius-t ball around a line (Type A, even diameter 2t).
BoundValue typeA_even_bound(int n, int t, int q);

/// H(n,t) = [n-1 t] - q^{t(t+1)} [n-t-2 t] + q^{t+1}; requires n >= t+3.
BigCount hm_excess(int n, int t, int q);
/// sum_{i<=t} [n i] + H(n,t) (odd diameter 2t+1, Types A and B).
BoundValue odd_stability_bound(int n, int t, int q);

/// sum_{i<t} [n i] + (2t+1) q^2 [3t t] [n t-1] (strict upper bound, Type B, even).
BoundValue typeB_even_bound(int n, int t, int q);

/// max{[n-s k-s], [2k-s k-s]} for s-intersecting k-families; needs n >= 2k-s.
BoundValue ekr_bound(int n, int k, int s, int q);

/// Maximum size of a nontrivial s-intersecting family of k-spaces.
/// Evaluated for s >= 1, k >= s+2, n >= 2k; proved for n >= 2k+2.
BoundValue nontrivial_intersecting_bound(int n, int k, int s, int q);

/// [n k] - q^{k(n-k)} + 1 for nonempty complementary layers k, n-k with 1 <= k < n-k.
BoundValue complementary_pair_bound(int n, int k, int q);

/// General cross-t-intersecting sum bound
/// [n b] - sum_{i<t} q^{(a-i)(b-i)} [a i] [n-a b-i] + 1.
BoundValue cross_intersecting_sum_bound(int n, int a, int b, int t, int q);

/// Left- and right-hand sides of the comparison
/// [n-s k-s] - q^{(k+1-s)(k-s)} [n-k-1 k-s] + q^{k+1-s} [s 1] <= [k-s+1 1] [n-s-1 k-s-1].
struct Comparison {
  BigInt lhs;
  BigInt rhs;
  BigInt margin() const { return rhs - lhs; }
};
Comparison nontrivial_comparison(int n, int k, int s, int q);

}  // namespace qdiam
