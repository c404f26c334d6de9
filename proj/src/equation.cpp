#include "fermat/equation.hpp"

#include <string>

namespace fermat {

std::vector<Violation> check_equation(const BigInt& A, const BigInt& B,
                                      const BigInt& C, unsigned long p) {
  std::vector<Violation> out;
  if (p < 5 || !is_prime(p)) {
    out.push_back({Errc::non_prime_exponent, "p",
                   "exponent must be a prime >= 5, got " + std::to_string(p)});
  }
  const struct {
    const char* name;
    const BigInt& value;
  } coeffs[] = {{"A", A}, {"B", B}, {"C", C}};
  for (const auto& c : coeffs) {
    if (c.value == 0) {
      out.push_back({Errc::zero_coefficient, c.name, "coefficient is zero"});
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (coeffs[i].value == 0 || coeffs[j].value == 0) continue;
      BigInt g = gcd(coeffs[i].value, coeffs[j].value);
      if (g != 1) {
        out.push_back({Errc::not_coprime,
                       std::string(coeffs[i].name) + "," + coeffs[j].name,
                       "common factor " + g.get_str()});
      }
    }
  }
  if (p >= 2) {
    for (const auto& c : coeffs) {
      if (c.value != 0 && !is_pth_power_free(c.value, p)) {
        out.push_back({Errc::not_power_free, c.name,
                       c.value.get_str() + " is divisible by a p-th power"});
      }
    }
  }
  return out;
}

FermatEquation FermatEquation::validated(BigInt A, BigInt B, BigInt C, unsigned long p) {
  auto violations = check_equation(A, B, C, p);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return {std::move(A), std::move(B), std::move(C), p};
}

FermatEquation FermatEquation::unchecked(BigInt A, BigInt B, BigInt C, unsigned long p) {
  return {std::move(A), std::move(B), std::move(C), p};
}

Triplet Triplet::canonical() const {
  if (all_zero()) return *this;
  BigInt g = coordinate_gcd();
  Triplet t{x / g, y / g, z / g};
  const BigInt* first = t.x != 0 ? &t.x : (t.y != 0 ? &t.y : &t.z);
  if (*first < 0) t = t.negated();
  return t;
}

bool Triplet::operator<(const Triplet& o) const {
  if (x != o.x) return x < o.x;
  if (y != o.y) return y < o.y;
  return z < o.z;
}

bool same_solution(const Triplet& a, const Triplet& b) {
  return a.canonical() == b.canonical();
}

BigInt evaluate(const FermatEquation& eq, const Triplet& t) {
  return eq.A * pow_ui(t.x, eq.p) + eq.B * pow_ui(t.y, eq.p) + eq.C * pow_ui(t.z, eq.p);
}

std::optional<Triplet> trivial_solution_by_sum(const FermatEquation& eq) {
  if (eq.A + eq.B + eq.C == 0) return Triplet{1, 1, 1};
  return std::nullopt;
}

std::vector<std::pair<SignVariant, Triplet>> sign_orbit(const FermatEquation& eq,
                                                        const Triplet& t) {
  if (evaluate(eq, t) != 0) {
    throw Error(Errc::not_a_solution, "sign_orbit: triplet does not solve the equation");
  }
  std::vector<std::pair<SignVariant, Triplet>> out;
  out.reserve(8);
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      for (int sc : {1, -1}) {
        SignVariant v{{sa, sb, sc},
                      FermatEquation::unchecked(sa * eq.A, sb * eq.B, sc * eq.C, eq.p)};
        Triplet mapped{sa * t.x, sb * t.y, sc * t.z};
        out.emplace_back(std::move(v), std::move(mapped));
      }
    }
  }
  return out;
}

std::array<CanonicalOrdering, 3> canonical_orderings(const BigInt& A, const BigInt& B,
                                                     const BigInt& C, unsigned long p) {
  auto violations = check_equation(A, B, C, p);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  // The constant only sees lead^2 and (other*other)^(p-1), so signs drop out.
  BigInt a = abs(A), b = abs(B), c = abs(C);
  auto make = [p](const BigInt& lead, const BigInt& o1, const BigInt& o2) {
    BigRat constant(lead * lead * pow_ui(BigInt(o1 * o2), p - 1), 4);
    constant.canonicalize();
    return CanonicalOrdering{FermatEquation::unchecked(lead, o1, o2, p), constant};
  };
  return {make(a, b, c), make(b, a, c), make(c, a, b)};
}

std::vector<Triplet> degenerate_zero_coordinate_solutions(const FermatEquation& eq) {
  std::vector<Triplet> out;
  // Each case pins one coordinate to zero and solves the two-term equation
  // left over; a solution exists iff the coefficient ratio has a rational
  // p-th root.
  struct Case {
    BigRat ratio;                        // p-th power of the nonzero-coordinate ratio
    int zero_index;                      // which coordinate is zero
  };
  auto ratio = [](const BigInt& num, const BigInt& den) {
    BigRat r(-num, den == 0 ? BigInt(1) : den);
    r.canonicalize();
    return r;
  };
  const Case cases[] = {
      {ratio(eq.B, eq.C), 0},  // x = 0: (z/y)^p = -B/C
      {ratio(eq.A, eq.C), 1},  // y = 0: (z/x)^p = -A/C
      {ratio(eq.A, eq.B), 2},  // z = 0: (y/x)^p = -A/B
  };
  const BigInt* dens[] = {&eq.C, &eq.C, &eq.B};
  for (int i = 0; i < 3; ++i) {
    const auto& cs = cases[i];
    // A zero coefficient in the ratio would force a second zero coordinate.
    if (*dens[i] == 0 || cs.ratio == 0) continue;
    auto root = rational_pth_root(cs.ratio, eq.p);
    if (!root) continue;
    BigInt n(mpq_numref(root->get_mpq_t()));
    BigInt d(mpq_denref(root->get_mpq_t()));
    Triplet t;
    switch (cs.zero_index) {
      case 0: t = {0, d, n}; break;
      case 1: t = {d, 0, n}; break;
      default: t = {d, n, 0}; break;
    }
    out.push_back(t.canonical());
  }
  return out;
}

} // namespace fermat
