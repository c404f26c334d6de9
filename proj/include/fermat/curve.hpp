#ifndef FERMAT_CURVE_HPP
#define FERMAT_CURVE_HPP

#include <optional>

#include "fermat/equation.hpp"

namespace fermat {

/// Affine point (X, Y) with exact rational coordinates, or the single
/// point at infinity of the odd-degree model.
class CurvePoint {
public:
  CurvePoint(BigRat X, BigRat Y) : infinity_(false), X_(std::move(X)), Y_(std::move(Y)) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinity_; }
  const BigRat& X() const { return X_; }
  const BigRat& Y() const { return Y_; }

  bool operator==(const CurvePoint& o) const {
    if (infinity_ != o.infinity_) return false;
    return infinity_ || (X_ == o.X_ && Y_ == o.Y_);
  }

  /// Infinity first, then (X, Y) ascending.
  bool operator<(const CurvePoint& o) const {
    if (infinity_ != o.infinity_) return infinity_;
    if (infinity_) return false;
    if (X_ != o.X_) return X_ < o.X_;
    return Y_ < o.Y_;
  }

private:
  CurvePoint() : infinity_(true) {}

  bool infinity_;
  BigRat X_, Y_;
};

/// Y^2 = X^p + c with c = A^2(BC)^(p-1)/4, together with the integral
/// model N^2 = M^p + k, k = A^2(4BC)^(p-1), reached by (M,N) = (4X, 2^p Y).
struct CurveModel {
  std::optional<FermatEquation> equation;
  BigRat c;
  BigInt k;
  unsigned long p = 5;
  unsigned long genus = 2;  // (p-1)/2

  /// Curve for a raw constant; requires 4^p * c to be an integer.
  static CurveModel from_constant(const BigRat& c, unsigned long p);

  bool operator==(const CurveModel&) const = default;
};

CurveModel build_curve(const FermatEquation& eq);

/// Exact membership test on the rational model; infinity is always on.
bool is_on_curve(const CurvePoint& pt, const CurveModel& m);

/// Point on the integral model; M and N stay rational so off-lattice
/// inputs round-trip, with is_integral() telling the two cases apart.
struct IntegralPoint {
  bool at_infinity = false;
  BigRat M, N;

  bool is_integral() const;
  bool operator==(const IntegralPoint&) const = default;
};

/// (M, N) = (4X, 2^p Y); satisfies N^2 = M^p + k. Rejects points off the
/// rational model.
IntegralPoint to_integral(const CurvePoint& pt, const CurveModel& m);

/// Inverse of to_integral: (X, Y) = (M/4, N/2^p).
CurvePoint from_integral(const IntegralPoint& pt, const CurveModel& m);

/// Change of variables sending a solution with x != 0 to a curve point:
///   X = -BC*y*z/x^2,  Y = (-BC)^((p-1)/2) * (B*y^p - C*z^p) / (2*x^p).
/// Invariant under scaling of the triplet, including global sign flips.
CurvePoint forward_map(const FermatEquation& eq, const Triplet& t);

} // namespace fermat

#endif
