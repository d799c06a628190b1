#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdiam/families.hpp"
#include "qdiam/grassmann.hpp"
#include "qdiam/qcount.hpp"

namespace qdiam {

struct SearchOptions {
  static constexpr std::uint64_t kDefaultMaxLattice = 400;

  /// Lattice size cap; the default admits q=2 with n<=5 and q=3 with n<=4.
  std::uint64_t max_lattice = kDefaultMaxLattice;
  bool enumerate_all = false;
  std::size_t max_witnesses = 100000;
  int threads = 1;
  std::chrono::seconds timeout{600};
  /// Prune with the complementary-layer cap |F(k)| + |F(n-k)| <= [n k].
  bool layer_cap = true;
};

/// Outcome of an exhaustive maximum-family search.
struct SearchReport {
  int q = 0, n = 0, d = 0;
  std::optional<ForbiddenClass> forbidden;
  BigCount optimum;
  bool proven_optimal = true;
  bool infeasible = false;  // no admissible family exists (optimum 0)
  bool enumerate_all = false;
  int threads = 1;

  /// Number of maximum families found (F and F^perp counted separately).
  std::uint64_t witness_count = 0;
  /// Maximum families up to the perp involution, canonical representative
  /// first, sorted. Complete iff witnesses_complete.
  std::vector<SubspaceFamily> witnesses;
  bool witnesses_complete = false;

  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;

  std::string bound_name;  // empty when no formula applies
  std::optional<BigCount> bound_value;
  bool bound_in_range = false;
  std::string bound_relation;  // "==" (optimum equals bound) or "<" (strict bound)
  bool bound_match = false;
  std::optional<bool> characterization_match;
  std::vector<std::string> notes;
};

/// Largest families of diameter <= d in the subspace lattice of F_q^n, by
/// branch-and-bound maximum clique on the graph {U, W : Δ(U,W) <= d}.
/// Throws BudgetExceeded when the lattice exceeds options.max_lattice.
SearchReport max_diameter_family(int q, int n, int d, const SearchOptions& options = {});

/// Largest (E, d)-admissible families. Admissibility is not hereditary: every
/// clique is a candidate, and a branch is cut once all its candidates fit in a
/// single forbidden configuration.
SearchReport max_admissible_family(int q, int n, int d, ForbiddenClass cls, const SearchOptions& options = {});

struct CharacterizationResult {
  bool ok = false;
  std::vector<std::string> diagnostics;
  /// Which equality case applies: "L_t", "D_t(X)", "split", "split+intersecting".
  std::string pattern;
  std::uint64_t expected_count = 0;  // census: number of maximum families predicted
};

/// Checks every witness of a complete report against the equality cases of the
/// diameter theorem and compares the witness census with the predicted count.
/// Throws NotExhaustive when the report is not a complete enumerate_all run.
CharacterizationResult verify_characterization(const SearchReport& report);

/// Checks one family against the equality case for (n, d), up to perp.
/// Returns the violated clause, or nullopt when it matches.
std::optional<std::string> equality_case_violation(const SubspaceFamily& f, int d);

/// Number of maximum 1-intersecting families in V(k) of F_q^n of size [n-1 k-1]
/// (exhaustive clique search on the layer).
std::uint64_t count_max_intersecting_layers(int q, int n, int k, const SearchOptions& options = {});

// ---------------------------------------------------------------- sweeps

enum class SweepKind {
  Nontrivial,       // nontrivial_comparison lhs <= rhs
  HPositive,        // H(n,t) > 0
  TypeBBelowTypeA,  // typeB_even_bound < typeA_even_bound
  ProfileTotal,     // sum_j count_profile(n,k,l,j) == [n l]
};

const char* sweep_kind_name(SweepKind kind);
SweepKind parse_sweep_kind(const std::string& text);

struct SweepSpec {
  SweepKind kind = SweepKind::Nontrivial;
  std::vector<int> qs{2, 3, 4};
  int n_min = 0;   // 0 = the kind's natural lower end
  int n_max = 40;
  int k_max = 12;  // Nontrivial
  int t_min = 2;   // HPositive, TypeBBelowTypeA
  int t_max = 4;
};

struct SweepRow {
  std::vector<std::pair<std::string, int>> params;
  BigInt lhs, rhs, margin;
  bool pass = false;
};

struct SweepReport {
  SweepKind kind;
  std::vector<SweepRow> rows;
  std::size_t failures = 0;
  bool pass = true;
  std::vector<std::string> notes;
};

/// Evaluates the comparison on every tuple of the grid with exact integers.
SweepReport inequality_sweep(const SweepSpec& spec);

/// Default grids used by the acceptance suite and the CLI.
SweepSpec nontrivial_grid();
SweepSpec hpositive_grid();
SweepSpec typeb_grid();

void write_sweep_csv(std::ostream& out, const SweepReport& report);

// ---------------------------------------------------------------- JSON

/// SearchReport as a JSON document (see docs/search_report.md).
std::string report_to_json(const SearchReport& report, int indent = 2);
std::string sweep_to_json(const SweepReport& report, int indent = 2);

}  // namespace qdiam
