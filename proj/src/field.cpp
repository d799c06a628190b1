#include "qdiam/field.hpp"

#include <array>
#include <mutex>
#include <string>

#include "qdiam/errors.hpp"

namespace qdiam {

namespace {

// Fixed irreducible polynomials, lowest degree first, monic.
std::vector<int> reduction_for(int q) {
  switch (q) {
    case 4: return {1, 1, 1};        // x^2 + x + 1
    case 8: return {1, 1, 0, 1};     // x^3 + x + 1
    case 9: return {2, 2, 1};        // x^2 + 2x + 2
    case 16: return {1, 1, 0, 0, 1}; // x^4 + x + 1
    default: return {};
  }
}

std::vector<int> digits(int x, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

int poly_mul_mod(int x, int y, int p, int e, const std::vector<int>& red) {
  const auto a = digits(x, p, e);
  const auto b = digits(y, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce from the top: x^e = -(red[0] + ... + red[e-1] x^{e-1})
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < e; ++i) {
      prod[deg - e + i] = ((prod[deg - e + i] - c * red[i]) % p + p) % p;
    }
  }
  prod.resize(e);
  return undigits(prod, p);
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* e_out) noexcept {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

Elem FieldSpec::inv(Elem x) const {
  if (x == 0) throw Error(Errc::ZeroInverse, "inverse of 0 in GF(" + std::to_string(q_) + ")");
  return inv_[x];
}

Field field_new(int q) {
  int p = 0, e = 0;
  if (q > FieldSpec::kMaxOrder || !is_prime_power(q, &p, &e))
    throw Error(Errc::NonPrimePower,
                "q = " + std::to_string(q) + " is not a supported prime power (2 <= q <= 16)");

  static std::array<Field, FieldSpec::kMaxOrder + 1> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (cache[q]) return cache[q];

  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->q_ = q;
  f->p_ = p;
  f->e_ = e;
  f->reduction_ = reduction_for(q);
  f->add_.resize(q * q);
  f->mul_.resize(q * q);
  f->neg_.resize(q);
  f->inv_.assign(q, 0);
  for (int x = 0; x < q; ++x) {
    const auto dx = digits(x, p, e);
    for (int y = 0; y < q; ++y) {
      const auto dy = digits(y, p, e);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (dx[i] + dy[i]) % p;
      f->add_[x * q + y] = static_cast<Elem>(undigits(s, p));
      f->mul_[x * q + y] = static_cast<Elem>(
          e == 1 ? (x * y) % p : poly_mul_mod(x, y, p, e, f->reduction_));
    }
  }
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (f->add_[x * q + y] == 0) f->neg_[x] = static_cast<Elem>(y);
      if (f->mul_[x * q + y] == 1) f->inv_[x] = static_cast<Elem>(y);
    }
  }
  cache[q] = f;
  return f;
}

Elem field_arith(const FieldSpec& field, FieldOp op, Elem x, Elem y) {
  switch (op) {
    case FieldOp::Add: return field.add(x, y);
    case FieldOp::Mul: return field.mul(x, y);
    case FieldOp::Neg: return field.neg(x);
    case FieldOp::Inv: return field.inv(x);
  }
  return 0;
}

}  // namespace qdiam
