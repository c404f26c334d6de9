#include "fermat/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace fermat {

namespace {

constexpr long kMaxEnumerableNumerator = 4000000000000000000L;

void check_bounds(const SearchBounds& bounds) {
  if (bounds.d_max < 1) throw Error(Errc::bad_input, "d_max must be >= 1");
  if (bounds.a_max < 1) throw Error(Errc::bad_input, "a_max must be >= 1");
  if (!bounds.a_max.fits_slong_p() || bounds.a_max > kMaxEnumerableNumerator) {
    throw Error(Errc::bad_input, "a_max too large to enumerate");
  }
  if (bounds.time_budget && bounds.time_budget->count() < 0) {
    throw Error(Errc::bad_input, "time budget must be nonnegative");
  }
}

void finalize(std::vector<CurvePoint>& points) {
  points.push_back(CurvePoint::infinity());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// S(a) = (4a)^p + k*d^(2p), strictly increasing in a for odd p.
// `base` is caller-owned scratch so hot loops reuse its allocation.
void eval_candidate(mpz_class& s, mpz_class& base, const mpz_class& kd2p, long a,
                    unsigned long p) {
  base = a;
  base *= 4;
  mpz_pow_ui(s.get_mpz_t(), base.get_mpz_t(), p);
  s += kd2p;
}

// Smallest a in [lo, hi] with S(a) >= 0, or hi + 1 if none.
long first_nonnegative(const mpz_class& kd2p, unsigned long p, long lo, long hi) {
  mpz_class s, base;
  eval_candidate(s, base, kd2p, lo, p);
  if (s >= 0) return lo;
  eval_candidate(s, base, kd2p, hi, p);
  if (s < 0) return hi + 1;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    eval_candidate(s, base, kd2p, mid, p);
    if (s >= 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

void emit_pair(std::vector<CurvePoint>& out, const BigRat& x, const BigRat& y) {
  out.emplace_back(x, y);
  if (y != 0) out.emplace_back(x, -y);
}

class Deadline {
public:
  explicit Deadline(const std::optional<std::chrono::milliseconds>& budget) {
    if (budget) deadline_ = std::chrono::steady_clock::now() + *budget;
  }

  bool expired() const {
    return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
  }

private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace

SearchResult search(const CurveModel& m, const SearchBounds& bounds) {
  check_bounds(bounds);
  const long a_max = bounds.a_max.get_si();
  const unsigned long p = m.p;
  Deadline deadline(bounds.time_budget);
  std::atomic<bool> stop{false};

  std::vector<CurvePoint> points;
  for (long d = 1; d <= bounds.d_max && !stop.load(std::memory_order_relaxed); ++d) {
    mpz_class kd2p = m.k * pow_ui(BigInt(d), 2 * p);
    BigInt two_d = BigInt(d) * 2;
    mpz_class two_d_p = pow_ui(two_d, p);
    mpz_class d_sq = BigInt(d) * d;

    // S < 0 can never be a square, and S is monotone in a, so the scan
    // starts at the sign change instead of -a_max.
    const long a_lo = first_nonnegative(kd2p, p, -a_max, a_max);
    if (a_lo > a_max) continue;

#pragma omp parallel
    {
      mpz_class s, y_num, base;
      std::vector<CurvePoint> local;
      long iterations = 0;

#pragma omp for schedule(static) nowait
      for (long a = a_lo; a <= a_max; ++a) {
        if (stop.load(std::memory_order_relaxed)) continue;
        if ((++iterations & 1023) == 0 && deadline.expired()) {
          stop.store(true, std::memory_order_relaxed);
          continue;
        }
        if (std::gcd(a, d) != 1) continue;
        eval_candidate(s, base, kd2p, a, p);
        if (!mpz_perfect_square_p(s.get_mpz_t())) continue;
        mpz_sqrt(y_num.get_mpz_t(), s.get_mpz_t());
        BigRat x(BigInt(a), d_sq);
        x.canonicalize();
        BigRat y(y_num, two_d_p);
        y.canonicalize();
        emit_pair(local, x, y);
      }

#pragma omp critical(fermat_search_merge)
      points.insert(points.end(), local.begin(), local.end());
    }
  }

  finalize(points);
  return {std::move(points), bounds, !stop.load()};
}

SearchResult search_reference(const CurveModel& m, const SearchBounds& bounds) {
  check_bounds(bounds);
  const long a_max = bounds.a_max.get_si();
  Deadline deadline(bounds.time_budget);
  bool stopped = false;

  std::vector<CurvePoint> points;
  long iterations = 0;
  for (long d = 1; d <= bounds.d_max && !stopped; ++d) {
    for (long a = -a_max; a <= a_max; ++a) {
      if ((++iterations & 255) == 0 && deadline.expired()) {
        stopped = true;
        break;
      }
      if (std::gcd(a, d) != 1) continue;
      BigRat x(BigInt(a), BigInt(d) * d);
      x.canonicalize();
      BigRat rhs = pow_ui(x, m.p) + m.c;
      if (rhs < 0) continue;
      auto y_num = integer_sqrt_exact(BigInt(mpq_numref(rhs.get_mpq_t())));
      if (!y_num) continue;
      auto y_den = integer_sqrt_exact(BigInt(mpq_denref(rhs.get_mpq_t())));
      if (!y_den) continue;
      BigRat y(*y_num, *y_den);
      y.canonicalize();
      emit_pair(points, x, y);
    }
  }

  finalize(points);
  return {std::move(points), bounds, !stopped};
}

std::vector<CurvePoint> search_x_axis(const CurveModel& m) {
  std::vector<CurvePoint> out;
  if (auto x = rational_pth_root(-m.c, m.p)) {
    out.emplace_back(*x, BigRat(0));
  }
  return out;
}

} // namespace fermat
