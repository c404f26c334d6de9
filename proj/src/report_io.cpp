#include "fermat/report_io.hpp"

#include <sstream>

namespace fermat {

namespace {

BigInt int_from_json(const Json& j) {
  const auto s = j.get<std::string>();
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw Error(Errc::bad_input, "malformed integer in report: '" + s + "'");
  }
}

BigRat rat_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json point_to_json(const CurvePoint& pt, const CurveModel& m, bool with_integral) {
  Json j;
  if (pt.is_infinity()) {
    j["infinity"] = true;
    return j;
  }
  j["X"] = to_string(pt.X());
  j["Y"] = to_string(pt.Y());
  if (with_integral) {
    IntegralPoint ip = to_integral(pt, m);
    j["M"] = to_string(ip.M);
    j["N"] = to_string(ip.N);
  }
  return j;
}

CurvePoint point_from_json(const Json& j) {
  if (j.contains("infinity") && j["infinity"].get<bool>()) {
    return CurvePoint::infinity();
  }
  return CurvePoint(rat_from_json(j.at("X")), rat_from_json(j.at("Y")));
}

Json branch_to_json(const RecoveryBranch& b) {
  Json j;
  j["sign"] = b.sign > 0 ? "+" : "-";
  if (b.outcome == BranchOutcome::degenerate_denominator) {
    j["x_ratio"] = nullptr;
    j["y_ratio"] = nullptr;
  } else {
    j["x_ratio"] = to_string(b.x_ratio);
    j["y_ratio"] = to_string(b.y_ratio);
  }
  j["outcome"] = branch_outcome_name(b.outcome);
  if (b.solution) {
    j["solution"] = triplet_to_json(*b.solution);
  } else {
    j["solution"] = nullptr;
  }
  Json failed = Json::array();
  if (b.x_root_failed) failed.push_back("x");
  if (b.y_root_failed) failed.push_back("y");
  j["failed_roots"] = std::move(failed);
  return j;
}

RecoveryBranch branch_from_json(const Json& j, const BigRat& a_prime) {
  RecoveryBranch b;
  b.sign = j.at("sign").get<std::string>() == "+" ? 1 : -1;
  b.a_prime = a_prime;
  if (!j.at("x_ratio").is_null()) b.x_ratio = rat_from_json(j.at("x_ratio"));
  if (!j.at("y_ratio").is_null()) b.y_ratio = rat_from_json(j.at("y_ratio"));
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome == "solution") {
    b.outcome = BranchOutcome::solution;
  } else if (outcome == "degenerate_denominator") {
    b.outcome = BranchOutcome::degenerate_denominator;
  } else {
    b.outcome = BranchOutcome::no_rational_root;
  }
  if (!j.at("solution").is_null()) b.solution = triplet_from_json(j.at("solution"));
  for (const auto& f : j.at("failed_roots")) {
    if (f.get<std::string>() == "x") b.x_root_failed = true;
    if (f.get<std::string>() == "y") b.y_root_failed = true;
  }
  return b;
}

} // namespace

Json triplet_to_json(const Triplet& t) {
  Json j;
  j["x"] = t.x.get_str();
  j["y"] = t.y.get_str();
  j["z"] = t.z.get_str();
  return j;
}

Triplet triplet_from_json(const Json& j) {
  return Triplet{int_from_json(j.at("x")), int_from_json(j.at("y")),
                 int_from_json(j.at("z"))};
}

Json bounds_to_json(const SearchBounds& bounds) {
  Json j;
  j["d_max"] = bounds.d_max;
  j["a_max"] = bounds.a_max.get_str();
  if (bounds.time_budget) {
    j["time_budget_ms"] = bounds.time_budget->count();
  } else {
    j["time_budget_ms"] = nullptr;
  }
  return j;
}

SearchBounds bounds_from_json(const Json& j) {
  SearchBounds b;
  b.d_max = j.at("d_max").get<long>();
  b.a_max = int_from_json(j.at("a_max"));
  if (!j.at("time_budget_ms").is_null()) {
    b.time_budget = std::chrono::milliseconds(j.at("time_budget_ms").get<long long>());
  }
  return b;
}

Json report_to_json(const SolutionReport& report) {
  Json j;
  j["schema"] = kReportSchema;

  Json eq;
  eq["A"] = report.equation.A.get_str();
  eq["B"] = report.equation.B.get_str();
  eq["C"] = report.equation.C.get_str();
  eq["p"] = report.equation.p;
  j["equation"] = std::move(eq);

  Json curve;
  curve["c"] = to_string(report.curve.c);
  curve["k"] = report.curve.k.get_str();
  curve["genus"] = report.curve.genus;
  j["curve"] = std::move(curve);

  j["bounds"] = bounds_to_json(report.search.bounds);
  j["complete_within_bounds"] = report.search.complete_within_bounds;
  j["completeness_caveat"] = report.completeness_caveat;

  Json points = Json::array();
  for (const auto& pt : report.search.points) {
    points.push_back(point_to_json(pt, report.curve, true));
  }
  j["points"] = std::move(points);

  Json recoveries = Json::array();
  for (const auto& rec : report.recoveries) {
    Json r;
    r["point"] = point_to_json(rec.point, report.curve, false);
    r["a_prime"] = to_string(rec.a_prime);
    Json branches = Json::array();
    for (const auto& b : rec.branches) branches.push_back(branch_to_json(b));
    r["branches"] = std::move(branches);
    recoveries.push_back(std::move(r));
  }
  j["recoveries"] = std::move(recoveries);

  Json solutions = Json::array();
  for (const auto& t : report.solutions) solutions.push_back(triplet_to_json(t));
  j["solutions"] = std::move(solutions);

  Json degenerate = Json::array();
  for (const auto& t : report.degenerate_solutions) degenerate.push_back(triplet_to_json(t));
  j["degenerate_solutions"] = std::move(degenerate);

  if (report.sum_zero_trivial) {
    j["sum_zero_trivial"] = triplet_to_json(*report.sum_zero_trivial);
  } else {
    j["sum_zero_trivial"] = nullptr;
  }

  j["diagnostics"] = report.diagnostics;
  return j;
}

SolutionReport report_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema) {
    throw Error(Errc::bad_input, "unknown report schema");
  }
  SolutionReport report;
  const Json& eq = j.at("equation");
  report.equation = FermatEquation::unchecked(
      int_from_json(eq.at("A")), int_from_json(eq.at("B")), int_from_json(eq.at("C")),
      eq.at("p").get<unsigned long>());

  const Json& curve = j.at("curve");
  report.curve.equation = report.equation;
  report.curve.c = parse_rational(curve.at("c").get<std::string>());
  report.curve.k = int_from_json(curve.at("k"));
  report.curve.p = report.equation.p;
  report.curve.genus = curve.at("genus").get<unsigned long>();

  report.search.bounds = bounds_from_json(j.at("bounds"));
  report.search.complete_within_bounds = j.at("complete_within_bounds").get<bool>();
  report.completeness_caveat = j.at("completeness_caveat").get<std::string>();

  for (const auto& pj : j.at("points")) {
    report.search.points.push_back(point_from_json(pj));
  }
  for (const auto& rj : j.at("recoveries")) {
    PointRecovery rec{point_from_json(rj.at("point")),
                      parse_rational(rj.at("a_prime").get<std::string>()),
                      {}};
    for (const auto& bj : rj.at("branches")) {
      rec.branches.push_back(branch_from_json(bj, rec.a_prime));
    }
    report.recoveries.push_back(std::move(rec));
  }
  for (const auto& tj : j.at("solutions")) {
    report.solutions.push_back(triplet_from_json(tj));
  }
  for (const auto& tj : j.at("degenerate_solutions")) {
    report.degenerate_solutions.push_back(triplet_from_json(tj));
  }
  if (!j.at("sum_zero_trivial").is_null()) {
    report.sum_zero_trivial = triplet_from_json(j.at("sum_zero_trivial"));
  }
  for (const auto& d : j.at("diagnostics")) {
    report.diagnostics.push_back(d.get<std::string>());
  }
  return report;
}

namespace {

std::string format_point(const CurvePoint& pt) {
  if (pt.is_infinity()) return "(1 : 0 : 0)";
  return "(" + to_string(pt.X()) + " : " + to_string(pt.Y()) + " : 1)";
}

std::string format_triplet(const Triplet& t) {
  return "(" + t.x.get_str() + ", " + t.y.get_str() + ", " + t.z.get_str() + ")";
}

} // namespace

std::string render_human(const SolutionReport& report) {
  std::ostringstream out;
  const auto& eq = report.equation;
  const std::string pw = "^" + std::to_string(eq.p);
  out << "equation: " << eq.A.get_str() << " x" << pw << " + " << eq.B.get_str()
      << " y" << pw << " + " << eq.C.get_str() << " z" << pw << " = 0\n";
  out << "curve:    Y^2 = X" << pw << " + " << to_string(report.curve.c)
      << "   (genus " << report.curve.genus << ")\n";
  out << "integral: N^2 = M" << pw << " + " << report.curve.k.get_str()
      << "   via (M, N) = (4X, 2" << pw << " Y)\n";
  const auto& bounds = report.search.bounds;
  out << "bounds:   d_max = " << bounds.d_max << ", a_max = " << bounds.a_max.get_str();
  if (bounds.time_budget) out << ", time budget " << bounds.time_budget->count() << " ms";
  out << "\n";
  if (report.sum_zero_trivial) {
    out << "sum A+B+C = 0: trivial solution " << format_triplet(*report.sum_zero_trivial)
        << "\n";
  }

  out << "points (" << report.search.points.size() << ", "
      << (report.search.complete_within_bounds ? "complete within bounds"
                                               : "search cut short by time budget")
      << "):\n";
  for (const auto& pt : report.search.points) {
    out << "  " << format_point(pt);
    if (!pt.is_infinity()) {
      IntegralPoint ip = to_integral(pt, report.curve);
      out << "   [integral (" << to_string(ip.M) << " : " << to_string(ip.N) << " : 1)]";
    }
    out << "\n";
  }

  for (const auto& rec : report.recoveries) {
    out << "recovery at " << format_point(rec.point) << ": A' = " << to_string(rec.a_prime)
        << "\n";
    for (const auto& b : rec.branches) {
      out << "  branch " << (b.sign > 0 ? "+" : "-") << ": ";
      if (b.outcome == BranchOutcome::degenerate_denominator) {
        out << "degenerate denominator, skipped\n";
        continue;
      }
      out << "x" << pw << "/z" << pw << " = " << to_string(b.x_ratio) << ", y" << pw
          << "/z" << pw << " = " << to_string(b.y_ratio) << "  ->  ";
      if (b.outcome == BranchOutcome::solution) {
        out << "solution " << format_triplet(*b.solution) << "\n";
      } else {
        out << "no rational " << eq.p << "-th root (";
        out << (b.x_root_failed ? "x" : "");
        out << (b.x_root_failed && b.y_root_failed ? ", " : "");
        out << (b.y_root_failed ? "y" : "");
        out << ")\n";
      }
    }
  }

  out << "solutions (primitive, up to global sign): ";
  if (report.solutions.empty()) {
    out << "none found within bounds\n";
  } else {
    out << "\n";
    for (const auto& t : report.solutions) out << "  " << format_triplet(t) << "\n";
  }
  out << "degenerate (zero-coordinate) solutions: ";
  if (report.degenerate_solutions.empty()) {
    out << "none\n";
  } else {
    out << "\n";
    for (const auto& t : report.degenerate_solutions) out << "  " << format_triplet(t) << "\n";
  }
  for (const auto& d : report.diagnostics) out << "diagnostic: " << d << "\n";
  out << "note: " << report.completeness_caveat << "\n";
  return out.str();
}

} // namespace fermat
