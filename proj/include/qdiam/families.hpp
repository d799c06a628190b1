#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdiam/grassmann.hpp"
#include "qdiam/subspace.hpp"

namespace qdiam {

/// Immutable finite set of subspaces of a common F_q^n, stored sorted in the
/// canonical order. Since that order compares dimension first, each layer
/// F(k) is a contiguous range.
class SubspaceFamily {
 public:
  SubspaceFamily(Field field, int n) : field_(std::move(field)), n_(n) { index_layers(); }
  /// Deduplicates and sorts. Throws AmbientMismatch on mixed members.
  SubspaceFamily(Field field, int n, std::vector<Subspace> members);

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return field_->q(); }
  int ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Subspace> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const Subspace& s) const;
  /// F ⊆ other.
  bool is_subfamily_of(const SubspaceFamily& other) const;

  /// The layer F(k) (empty span when k is outside 0..n).
  std::span<const Subspace> layer(int k) const;
  std::size_t layer_size(int k) const { return layer(k).size(); }
  /// supp(F): sorted dimensions with a nonempty layer.
  const std::vector<int>& support() const noexcept { return support_; }

  friend bool operator==(const SubspaceFamily& a, const SubspaceFamily& b) {
    return a.field_->q() == b.field_->q() && a.n_ == b.n_ && a.members_ == b.members_;
  }
  friend auto operator<=>(const SubspaceFamily& a, const SubspaceFamily& b) { return a.members_ <=> b.members_; }

 private:
  void index_layers();

  Field field_;
  int n_;
  std::vector<Subspace> members_;
  std::vector<std::size_t> offsets_;
  std::vector<int> support_;
};

SubspaceFamily family_union(const SubspaceFamily& a, const SubspaceFamily& b);

// ---------------------------------------------------------------- constructors

/// B(C, r) = {A : Δ(A,C) <= r}.
SubspaceFamily ball(const Subspace& center, int r, const EnumerationBudget& budget = {});
/// B(C1, r) ∪ B(C2, r).
SubspaceFamily double_ball(const Subspace& c1, const Subspace& c2, int r, const EnumerationBudget& budget = {});

/// All subspaces of dimension <= t.
SubspaceFamily lower_family(const Field& field, int n, int t, const EnumerationBudget& budget = {});
/// All subspaces of dimension >= n - t.
SubspaceFamily upper_family(const Field& field, int n, int t, const EnumerationBudget& budget = {});
/// Lower family of radius t plus the (t+1)-spaces through the line x.
SubspaceFamily canonical_double_ball(const Subspace& x, int t, const EnumerationBudget& budget = {});

enum class CanonicalKind { Lower, Upper, DoubleBall };
/// L_t, U_t or D_t(X); `x` is required (and must be a line) for DoubleBall.
SubspaceFamily canonical_family(const Field& field, int n, int t, CanonicalKind kind,
                                const std::optional<Subspace>& x = std::nullopt,
                                const EnumerationBudget& budget = {});

/// {A in V(k) : X <= A}.
SubspaceFamily star(int k, const Subspace& x, const EnumerationBudget& budget = {});

/// Hilton-Milner type family: k-spaces through X meeting Y, plus k-spaces
/// inside X + Y. Throws InvalidConfiguration unless dim X = 1, dim Y = k, X ⊄ Y.
SubspaceFamily hm_family(int k, const Subspace& x, const Subspace& y, const EnumerationBudget& budget = {});
/// {A in V(3) : dim(A ∩ Y) >= 2} for dim Y = 3.
SubspaceFamily hm_star3(const Subspace& y, const EnumerationBudget& budget = {});
/// All subspaces of dimension < k together with hm_family(k, X, Y).
SubspaceFamily k_family(int k, const Subspace& x, const Subspace& y, const EnumerationBudget& budget = {});
/// All subspaces of dimension <= 2 together with hm_star3(Y).
SubspaceFamily k_star3(const Subspace& y, const EnumerationBudget& budget = {});

SubspaceFamily perp_family(const SubspaceFamily& f);

// ---------------------------------------------------------------- measures

struct DiameterResult {
  int diameter = 0;
  /// A pair realizing the reported value (indices into members()).
  std::size_t first = 0, second = 0;
};

/// Maximum pairwise distance. When `stop_above` is given the scan stops as soon
/// as a pair with distance > stop_above is found (the result is then a lower
/// bound that already exceeds the threshold). Throws EmptyFamily.
DiameterResult diameter(const SubspaceFamily& f, std::optional<int> stop_above = std::nullopt);
/// max |dim A - dim B|.
int dim_spread(const SubspaceFamily& f);
/// min(supp F ∪ supp F^⊥).
int min_supp_norm(const SubspaceFamily& f);

bool is_s_intersecting(std::span<const Subspace> members, int s);
bool is_cross_intersecting(std::span<const Subspace> a, std::span<const Subspace> b, int s);

/// Common intersection of all members (the full space for an empty span).
Subspace common_intersection(const Field& field, int n, std::span<const Subspace> members);

/// First layer pair (i, j) of F violating cross-ceil((i+j-d)/2)-intersection.
struct LayerViolation {
  int i = 0, j = 0, required = 0;
  Subspace a, b;
};
std::optional<LayerViolation> find_layer_intersection_violation(const SubspaceFamily& f, int d);

// ---------------------------------------------------------------- admissibility

enum class ForbiddenClass { AEven, BEven, AOdd, BOdd };
const char* forbidden_class_name(ForbiddenClass c);
/// Accepts A_even, B_even, A_odd, B_odd (case-insensitive, '-' or '_').
ForbiddenClass parse_forbidden_class(const std::string& text);
/// Diameter that goes with the class at radius t: 2t or 2t+1.
int class_diameter(ForbiddenClass c, int t);

struct AdmissibilityResult {
  bool admissible = false;
  bool diameter_ok = false;
  int diameter = 0;
  /// Human-readable description of the violated clause.
  std::string reason;
  /// Forbidden configuration containing F, as its centers (one for a ball or a
  /// canonical family, two for a double ball); empty when F is admissible or
  /// when the failure is the diameter.
  std::vector<Subspace> witness_centers;
  std::string witness_kind;  // "L_t", "U_t", "D_t(X)", "D_t(X)^perp", "B(X,t)", "B(X,Y,t)"
};

/// (E, d)-admissibility of F for the class E at radius t. B-classes scan all
/// candidate centers and may throw BudgetExceeded.
AdmissibilityResult is_admissible(const SubspaceFamily& f, ForbiddenClass cls, int t,
                                  const EnumerationBudget& budget = {});

// ---------------------------------------------------------------- file format

/// `family q n count` followed by one subspace per line.
void write_family(std::ostream& out, const SubspaceFamily& f);
/// Throws ParseError with 1-based line numbers.
SubspaceFamily read_family(std::istream& in);

}  // namespace qdiam
