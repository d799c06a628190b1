#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qdiam {

using Elem = std::uint8_t;

/// Finite field F_q for q <= 16. Elements are the integers 0..q-1; for q = p^e
/// with e > 1 an element encodes its coefficient vector over F_p in base p
/// (lowest degree first), reduced modulo a fixed irreducible polynomial.
class FieldSpec {
 public:
  static constexpr int kMaxOrder = 16;

  int q() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  bool is_binary() const noexcept { return q_ == 2; }

  /// Monic reduction polynomial over F_p, lowest degree first; empty for prime fields.
  std::span<const int> reduction_poly() const noexcept { return reduction_; }

  Elem add(Elem x, Elem y) const noexcept { return add_[x * q_ + y]; }
  Elem sub(Elem x, Elem y) const noexcept { return add_[x * q_ + neg_[y]]; }
  Elem mul(Elem x, Elem y) const noexcept { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const noexcept { return neg_[x]; }
  /// Throws Error(ZeroInverse) on 0.
  Elem inv(Elem x) const;

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }
  std::span<const Elem> inv_table() const noexcept { return inv_; }

 private:
  friend std::shared_ptr<const FieldSpec> field_new(int q);
  FieldSpec() = default;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> reduction_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// Returns the shared, immutable field of order q. Supported orders are
/// 2, 3, 4, 5, 7, 8, 9, 11, 13, 16; anything else raises NonPrimePower.
Field field_new(int q);

enum class FieldOp { Add, Mul, Neg, Inv };

/// Uniform entry point used by the CLI self-test and the bindings; y is ignored
/// for unary operations.
Elem field_arith(const FieldSpec& field, FieldOp op, Elem x, Elem y = 0);

bool is_prime_power(int q, int* p = nullptr, int* e = nullptr) noexcept;

}  // namespace qdiam
