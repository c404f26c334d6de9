#include "fermat/curve.hpp"

namespace fermat {

namespace {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

} // namespace

CurveModel CurveModel::from_constant(const BigRat& c, unsigned long p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(Errc::non_prime_exponent, "curve exponent must be a prime >= 5");
  }
  BigRat k_rat = pow_ui(BigRat(4), p) * c;
  k_rat.canonicalize();
  if (mpz_cmp_ui(mpq_denref(k_rat.get_mpq_t()), 1) != 0) {
    throw Error(Errc::bad_input, "curve constant must have 4^p * c integral");
  }
  CurveModel m;
  m.c = c;
  m.k = BigInt(mpq_numref(k_rat.get_mpq_t()));
  m.p = p;
  m.genus = (p - 1) / 2;
  return m;
}

CurveModel build_curve(const FermatEquation& eq) {
  auto violations = check_equation(eq.A, eq.B, eq.C, eq.p);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  BigRat c = make_rat(eq.A * eq.A * pow_ui(BigInt(eq.B * eq.C), eq.p - 1), 4);
  BigInt k = eq.A * eq.A * pow_ui(BigInt(4 * eq.B * eq.C), eq.p - 1);

  CurveModel m = CurveModel::from_constant(c, eq.p);
  // Two routes to the integral constant must agree: k = 4^p * c.
  if (m.k != k) throw Error(Errc::bad_input, "internal: model constants disagree");
  m.equation = eq;
  return m;
}

bool is_on_curve(const CurvePoint& pt, const CurveModel& m) {
  if (pt.is_infinity()) return true;
  return pt.Y() * pt.Y() == pow_ui(pt.X(), m.p) + m.c;
}

bool IntegralPoint::is_integral() const {
  if (at_infinity) return true;
  return mpz_cmp_ui(mpq_denref(M.get_mpq_t()), 1) == 0 &&
         mpz_cmp_ui(mpq_denref(N.get_mpq_t()), 1) == 0;
}

IntegralPoint to_integral(const CurvePoint& pt, const CurveModel& m) {
  if (pt.is_infinity()) return {true, 0, 0};
  if (!is_on_curve(pt, m)) {
    throw Error(Errc::not_on_curve, "to_integral: point is not on the curve");
  }
  BigRat M = 4 * pt.X();
  BigRat N = BigRat(pow_ui(BigInt(2), m.p)) * pt.Y();
  M.canonicalize();
  N.canonicalize();
  return {false, std::move(M), std::move(N)};
}

CurvePoint from_integral(const IntegralPoint& pt, const CurveModel& m) {
  if (pt.at_infinity) return CurvePoint::infinity();
  BigRat X = pt.M / 4;
  BigRat Y = pt.N / BigRat(pow_ui(BigInt(2), m.p));
  X.canonicalize();
  Y.canonicalize();
  return CurvePoint(std::move(X), std::move(Y));
}

CurvePoint forward_map(const FermatEquation& eq, const Triplet& t) {
  if (t.x == 0) {
    throw Error(Errc::zero_x, "forward_map: x = 0 is outside the change of variables");
  }
  if (evaluate(eq, t) != 0) {
    throw Error(Errc::not_a_solution, "forward_map: triplet does not solve the equation");
  }
  BigInt BC = eq.B * eq.C;
  BigRat X = make_rat(-BC * t.y * t.z, t.x * t.x);
  BigRat Y = make_rat(pow_ui(BigInt(-BC), (eq.p - 1) / 2) *
                          (eq.B * pow_ui(t.y, eq.p) - eq.C * pow_ui(t.z, eq.p)),
                      2 * pow_ui(t.x, eq.p));
  return CurvePoint(std::move(X), std::move(Y));
}

} // namespace fermat
