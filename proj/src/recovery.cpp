#include "fermat/recovery.hpp"

#include <set>

namespace fermat {

const char* branch_outcome_name(BranchOutcome o) {
  switch (o) {
    case BranchOutcome::solution: return "solution";
    case BranchOutcome::no_rational_root: return "no_rational_root";
    case BranchOutcome::degenerate_denominator: return "degenerate_denominator";
  }
  return "unknown";
}

namespace {

void require_affine_nonzero(const CurvePoint& pt) {
  if (pt.is_infinity()) {
    throw Error(Errc::zero_coordinate, "recovery needs an affine point");
  }
  if (pt.X() == 0 || pt.Y() == 0) {
    throw Error(Errc::zero_coordinate, "recovery needs X and Y both nonzero");
  }
}

Triplet lift_from_ratios(const BigRat& x_over_z, const BigRat& y_over_z) {
  BigInt nu(mpq_numref(x_over_z.get_mpq_t()));
  BigInt du(mpq_denref(x_over_z.get_mpq_t()));
  BigInt nv(mpq_numref(y_over_z.get_mpq_t()));
  BigInt dv(mpq_denref(y_over_z.get_mpq_t()));
  return Triplet{nu * dv, nv * du, du * dv}.canonical();
}

} // namespace

BigRat compute_a_prime(const CurvePoint& pt, const FermatEquation& eq) {
  require_affine_nonzero(pt);
  BigRat denom(pow_ui(BigInt(-eq.B * eq.C), (eq.p - 1) / 2));
  BigRat a_prime = 2 * pt.Y() / denom;
  a_prime.canonicalize();
  return a_prime;
}

std::vector<RecoveryBranch> recover(const CurvePoint& pt, const FermatEquation& eq) {
  require_affine_nonzero(pt);
  CurveModel m = build_curve(eq);
  if (!is_on_curve(pt, m)) {
    throw Error(Errc::not_on_curve, "recover: point is not on the curve");
  }

  const BigRat a_prime = compute_a_prime(pt, eq);
  const BigRat A(eq.A), B(eq.B), C(eq.C);

  std::vector<RecoveryBranch> out;
  out.reserve(2);
  for (int sign : {1, -1}) {
    RecoveryBranch branch;
    branch.sign = sign;
    branch.a_prime = a_prime;

    BigRat signed_a_prime = sign * a_prime;
    BigRat denom = A + signed_a_prime;
    if (denom == 0) {
      // Both ratio denominators vanish together; the other branch may
      // still produce a solution.
      branch.outcome = BranchOutcome::degenerate_denominator;
      out.push_back(std::move(branch));
      continue;
    }

    branch.x_ratio = -2 * C / denom;
    branch.x_ratio.canonicalize();
    branch.y_ratio = (-A + signed_a_prime) * C / ((-A - signed_a_prime) * B);
    branch.y_ratio.canonicalize();

    auto x_over_z = rational_pth_root(branch.x_ratio, eq.p);
    auto y_over_z = rational_pth_root(branch.y_ratio, eq.p);
    branch.x_root_failed = !x_over_z;
    branch.y_root_failed = !y_over_z;
    if (x_over_z && y_over_z) {
      Triplet t = lift_from_ratios(*x_over_z, *y_over_z);
      if (evaluate(eq, t) == 0) {
        branch.outcome = BranchOutcome::solution;
        branch.solution = std::move(t);
      } else {
        // Cannot happen for on-curve points; keep the branch honest anyway.
        branch.outcome = BranchOutcome::no_rational_root;
        branch.x_root_failed = branch.y_root_failed = true;
      }
    } else {
      branch.outcome = BranchOutcome::no_rational_root;
    }
    out.push_back(std::move(branch));
  }
  return out;
}

bool verify_consistency(const Triplet& t, const CurvePoint& pt,
                        const FermatEquation& eq) {
  if (pt.is_infinity()) return false;
  if (t.x == 0 || evaluate(eq, t) != 0) return false;
  CurvePoint mapped = forward_map(eq, t);
  return mapped.X() == pt.X() && (mapped.Y() == pt.Y() || mapped.Y() == -pt.Y());
}

SolutionReport solve(const FermatEquation& eq, const SearchBounds& bounds) {
  auto violations = check_equation(eq.A, eq.B, eq.C, eq.p);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  SolutionReport report;
  report.equation = eq;
  report.curve = build_curve(eq);
  report.sum_zero_trivial = trivial_solution_by_sum(eq);
  report.degenerate_solutions = degenerate_zero_coordinate_solutions(eq);
  report.search = search(report.curve, bounds);

  std::set<Triplet> found;
  if (report.sum_zero_trivial) found.insert(report.sum_zero_trivial->canonical());

  for (const CurvePoint& pt : report.search.points) {
    if (pt.is_infinity() || pt.X() == 0 || pt.Y() == 0) continue;
    try {
      PointRecovery pr{pt, compute_a_prime(pt, eq), recover(pt, eq)};
      for (const RecoveryBranch& branch : pr.branches) {
        if (!branch.solution) continue;
        if (!verify_consistency(*branch.solution, pt, eq)) {
          report.diagnostics.push_back("dropped inconsistent branch solution at X=" +
                                       to_string(pt.X()));
          continue;
        }
        found.insert(branch.solution->canonical());
      }
      report.recoveries.push_back(std::move(pr));
    } catch (const Error& e) {
      report.diagnostics.push_back(std::string("recovery failed at X=") +
                                   to_string(pt.X()) + ": " + e.what());
    }
  }

  // Final re-check, independent of how each triplet was produced.
  for (const Triplet& t : found) {
    if (evaluate(eq, t) == 0 && t.is_primitive()) {
      report.solutions.push_back(t);
    } else {
      report.diagnostics.push_back("dropped non-solution triplet");
    }
  }

  report.completeness_caveat =
      "point list exhausts X = a/d^2 with d <= " + std::to_string(bounds.d_max) +
      ", |a| <= " + bounds.a_max.get_str() +
      "; no completeness certification beyond these bounds";
  return report;
}

} // namespace fermat
