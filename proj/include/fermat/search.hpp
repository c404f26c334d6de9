#ifndef FERMAT_SEARCH_HPP
#define FERMAT_SEARCH_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "fermat/curve.hpp"

namespace fermat {

/// Height box for the rational point search: X = a/d^2 with gcd(a,d) = 1,
/// d <= d_max, |a| <= a_max.
struct SearchBounds {
  long d_max = 8;
  BigInt a_max = 1000000;
  std::optional<std::chrono::milliseconds> time_budget;

  bool operator==(const SearchBounds&) const = default;
};

struct SearchResult {
  std::vector<CurvePoint> points;  // infinity first, affine sorted by (X, Y)
  SearchBounds bounds;
  /// False iff a time budget cut the scan short; the points found so far
  /// are still returned.
  bool complete_within_bounds = true;

  bool operator==(const SearchResult&) const = default;
};

/// Enumerates every rational point with X = a/d^2 inside the bounds.
/// Membership reduces to an integer perfect-square test on the integral
/// model: S = (4a)^p + k*d^(2p) must be a square, and then
/// Y = +-sqrt(S)/(2d)^p. The numerator scan is OpenMP-parallel.
SearchResult search(const CurveModel& m, const SearchBounds& bounds);

/// Serial reference: the naive double loop over (a, d), deciding
/// membership on the rational model (X^p + c must be a rational square).
/// Kept as an independent cross-check and benchmark baseline for search().
SearchResult search_reference(const CurveModel& m, const SearchBounds& bounds);

/// The at-most-one rational point with Y = 0, i.e. X the rational p-th
/// root of -c when it exists. Not limited by any height bound.
std::vector<CurvePoint> search_x_axis(const CurveModel& m);

} // namespace fermat

#endif
