#ifndef FERMAT_RECOVERY_HPP
#define FERMAT_RECOVERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermat/search.hpp"

namespace fermat {

enum class BranchOutcome {
  solution,
  no_rational_root,
  degenerate_denominator,
};

const char* branch_outcome_name(BranchOutcome o);

/// One sign choice of the recovery system
///   A x^p + B y^p + C z^p = 0
///   (+-A') x^p - B y^p + C z^p = 0
/// giving x^p/z^p = -2C/(A +- A') and y^p/z^p = (-A +- A')C/((-A -+ A')B).
struct RecoveryBranch {
  int sign = 1;  // +1 or -1 applied to A'
  BigRat a_prime;
  BigRat x_ratio;  // x^p/z^p; unset (0) when the denominator degenerates
  BigRat y_ratio;  // y^p/z^p
  BranchOutcome outcome = BranchOutcome::no_rational_root;
  std::optional<Triplet> solution;
  bool x_root_failed = false;
  bool y_root_failed = false;

  bool operator==(const RecoveryBranch&) const = default;
};

/// A' = 2Y / (-BC)^((p-1)/2). Requires an affine point with X,Y both
/// nonzero; X = 0 forces a zero coordinate and Y = 0 a rational p-th root
/// of B/C, both handled elsewhere.
BigRat compute_a_prime(const CurvePoint& pt, const FermatEquation& eq);

/// Both +- branches for an on-curve point with XY != 0. A branch carries
/// either the primitive solution lifted from the two rational p-th roots,
/// or the reason it is excluded.
std::vector<RecoveryBranch> recover(const CurvePoint& pt, const FermatEquation& eq);

/// True iff t solves eq and forward_map(eq, t) matches pt up to the sign
/// of Y (recovery fixes Y only up to the +- branch choice).
bool verify_consistency(const Triplet& t, const CurvePoint& pt, const FermatEquation& eq);

struct PointRecovery {
  CurvePoint point;
  BigRat a_prime;
  std::vector<RecoveryBranch> branches;

  bool operator==(const PointRecovery&) const = default;
};

/// Full result of one equation run: the curve, the bounded point search,
/// per-point recovery, and every solution found.
struct SolutionReport {
  FermatEquation equation;
  CurveModel curve;
  SearchResult search;
  std::vector<PointRecovery> recoveries;
  std::vector<Triplet> solutions;  // primitive, canonical sign, deduplicated
  std::vector<Triplet> degenerate_solutions;
  std::optional<Triplet> sum_zero_trivial;
  std::string completeness_caveat;
  std::vector<std::string> diagnostics;

  bool operator==(const SolutionReport&) const = default;
};

/// The whole pipeline: sum-zero shortcut, zero-coordinate cases, curve
/// construction, bounded point search, and recovery over every point with
/// XY != 0. Every reported solution is independently re-checked against
/// the equation.
SolutionReport solve(const FermatEquation& eq, const SearchBounds& bounds);

} // namespace fermat

#endif
