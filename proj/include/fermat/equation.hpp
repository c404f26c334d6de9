#ifndef FERMAT_EQUATION_HPP
#define FERMAT_EQUATION_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {

/// The equation A*x^p + B*y^p + C*z^p = 0. A validated instance has a
/// prime exponent p >= 5 and nonzero, pairwise coprime, p-th-power-free
/// coefficients; negative coefficients are allowed.
struct FermatEquation {
  BigInt A, B, C;
  unsigned long p = 5;

  /// Throws ValidationError listing every violated constraint.
  static FermatEquation validated(BigInt A, BigInt B, BigInt C, unsigned long p);

  /// Skips validation; for exploratory use on equations outside the
  /// constraints of the curve correspondence.
  static FermatEquation unchecked(BigInt A, BigInt B, BigInt C, unsigned long p);

  bool operator==(const FermatEquation&) const = default;
};

/// All violated constraints for (A,B,C,p); empty means valid.
std::vector<Violation> check_equation(const BigInt& A, const BigInt& B,
                                      const BigInt& C, unsigned long p);

/// Integer solution candidate (x, y, z).
struct Triplet {
  BigInt x, y, z;

  bool all_zero() const { return x == 0 && y == 0 && z == 0; }
  BigInt coordinate_gcd() const { return gcd(x, gcd(y, z)); }
  bool is_primitive() const { return !all_zero() && coordinate_gcd() == 1; }

  /// Primitive representative with the first nonzero coordinate positive;
  /// (x,y,z) and (-x,-y,-z) are the same projective solution.
  Triplet canonical() const;

  Triplet negated() const { return {-x, -y, -z}; }

  bool operator==(const Triplet&) const = default;
  bool operator<(const Triplet& o) const;
};

/// True iff the two triplets agree after canonicalization.
bool same_solution(const Triplet& a, const Triplet& b);

/// A*x^p + B*y^p + C*z^p, exactly. Zero iff t is a solution.
BigInt evaluate(const FermatEquation& eq, const Triplet& t);

/// (1,1,1) when A+B+C = 0, else nullopt.
std::optional<Triplet> trivial_solution_by_sum(const FermatEquation& eq);

/// Signs applied per coefficient; flipping a coefficient's sign together
/// with the matching coordinate preserves solution-hood (p is odd).
struct SignVariant {
  std::array<int, 3> signs;
  FermatEquation equation;
};

/// The 8 signed variants of (eq, t), identity first. Requires
/// evaluate(eq, t) = 0.
std::vector<std::pair<SignVariant, Triplet>> sign_orbit(const FermatEquation& eq,
                                                        const Triplet& t);

/// One of the three lead-coefficient choices for a set {A,B,C}, with the
/// rational-model curve constant lead^2*(other1*other2)^(p-1)/4. Each
/// ordering covers the 8 signed equations of its sign orbit.
struct CanonicalOrdering {
  FermatEquation equation;
  BigRat constant;
};

/// The three orderings of the set {|A|,|B|,|C|}; the curve constant only
/// depends on absolute values.
std::array<CanonicalOrdering, 3> canonical_orderings(const BigInt& A, const BigInt& B,
                                                     const BigInt& C, unsigned long p);

/// All primitive solutions with exactly one zero coordinate, found by
/// testing the three coefficient ratios for rational p-th roots
/// (x = 0 forces B*y^p = -C*z^p, and so on).
std::vector<Triplet> degenerate_zero_coordinate_solutions(const FermatEquation& eq);

} // namespace fermat

#endif
