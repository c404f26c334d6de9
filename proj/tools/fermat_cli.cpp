// Command-line front end: solve / curve / map-point / orbit / verify / batch.
//
// Exit codes: 0 success, 2 validation or usage error, 3 time budget
// exhausted before the search box was covered, 4 I/O failure.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermat/recovery.hpp"
#include "fermat/report_io.hpp"
#include "fermat/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct EquationFlags {
  std::string A, B, C;
  unsigned long p = 5;
};

struct OutputFlags {
  std::string format = "human";  // human | json
  std::string output_path;       // empty = stdout
  bool canonical = false;
};

fermat::BigInt parse_int(const std::string& text, const std::string& what) {
  try {
    return fermat::BigInt(text);
  } catch (const std::invalid_argument&) {
    throw fermat::Error(fermat::Errc::bad_input, "malformed " + what + ": '" + text + "'");
  }
}

fermat::FermatEquation equation_from(const EquationFlags& f) {
  return fermat::FermatEquation::validated(parse_int(f.A, "A"), parse_int(f.B, "B"),
                                           parse_int(f.C, "C"), f.p);
}

fermat::Triplet parse_triplet(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) {
    throw fermat::Error(fermat::Errc::bad_input,
                        "triplet must be 'x,y,z', got '" + text + "'");
  }
  return {parse_int(parts[0], "x"), parse_int(parts[1], "y"), parse_int(parts[2], "z")};
}

// FERMAT_DESCENT_BOUNDS="d_max,a_max" overrides the built-in defaults;
// explicit flags still win.
fermat::SearchBounds default_bounds() {
  fermat::SearchBounds bounds;
  const char* env = std::getenv("FERMAT_DESCENT_BOUNDS");
  if (!env) return bounds;
  std::string text(env);
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw fermat::Error(fermat::Errc::bad_input,
                        "FERMAT_DESCENT_BOUNDS must be 'd_max,a_max'");
  }
  try {
    bounds.d_max = std::stol(text.substr(0, comma));
  } catch (const std::exception&) {
    throw fermat::Error(fermat::Errc::bad_input, "bad d_max in FERMAT_DESCENT_BOUNDS");
  }
  bounds.a_max = parse_int(text.substr(comma + 1), "a_max in FERMAT_DESCENT_BOUNDS");
  return bounds;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
  return buf;
}

fermat::Json wrap_record(fermat::Json report, bool canonical) {
  fermat::Json record;
  record["schema"] = "fermat-descent/record-v1";
  record["version"] = fermat::kVersion;
  if (!canonical) record["timestamp"] = utc_timestamp();
  record["report"] = std::move(report);
  return record;
}

void write_output(const std::string& text, const OutputFlags& out) {
  if (out.output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out.output_path);
  if (!file) {
    throw fermat::Error(fermat::Errc::io_failure, "cannot open '" + out.output_path + "'");
  }
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
  if (!file.good()) {
    throw fermat::Error(fermat::Errc::io_failure, "write failed: '" + out.output_path + "'");
  }
}

int cmd_solve(const EquationFlags& eqf, const fermat::SearchBounds& bounds,
              const OutputFlags& out) {
  auto eq = equation_from(eqf);
  fermat::SolutionReport report = fermat::solve(eq, bounds);
  if (out.format == "json") {
    write_output(wrap_record(fermat::report_to_json(report), out.canonical).dump(2), out);
  } else {
    write_output(fermat::render_human(report), out);
  }
  if (!report.search.complete_within_bounds) return kExitBudget;
  return kExitOk;
}

int cmd_curve(const EquationFlags& eqf, bool orderings, const OutputFlags& out) {
  auto eq = equation_from(eqf);
  fermat::CurveModel m = fermat::build_curve(eq);
  std::ostringstream text;
  if (out.format == "json") {
    fermat::Json j;
    j["c"] = fermat::to_string(m.c);
    j["k"] = m.k.get_str();
    j["genus"] = m.genus;
    if (orderings) {
      fermat::Json arr = fermat::Json::array();
      for (const auto& o : fermat::canonical_orderings(eq.A, eq.B, eq.C, eq.p)) {
        fermat::Json oj;
        oj["lead"] = o.equation.A.get_str();
        oj["c"] = fermat::to_string(o.constant);
        arr.push_back(std::move(oj));
      }
      j["orderings"] = std::move(arr);
    }
    text << j.dump(2);
  } else {
    text << "rational model: Y^2 = X^" << eq.p << " + " << fermat::to_string(m.c) << "\n"
         << "integral model: N^2 = M^" << eq.p << " + " << m.k.get_str() << "\n"
         << "genus: " << m.genus << "\n";
    if (orderings) {
      text << "orderings of {|A|,|B|,|C|} (each covers its 8 signed equations):\n";
      for (const auto& o : fermat::canonical_orderings(eq.A, eq.B, eq.C, eq.p)) {
        text << "  lead " << o.equation.A.get_str() << ": c = "
             << fermat::to_string(o.constant) << "\n";
      }
    }
  }
  write_output(text.str(), out);
  return kExitOk;
}

int cmd_map_point(const EquationFlags& eqf, const std::string& triplet,
                  const OutputFlags& out) {
  auto eq = equation_from(eqf);
  fermat::Triplet t = parse_triplet(triplet);
  fermat::CurvePoint pt = fermat::forward_map(eq, t);
  fermat::CurveModel m = fermat::build_curve(eq);
  fermat::IntegralPoint ip = fermat::to_integral(pt, m);
  std::ostringstream text;
  if (out.format == "json") {
    fermat::Json j;
    j["X"] = fermat::to_string(pt.X());
    j["Y"] = fermat::to_string(pt.Y());
    j["M"] = fermat::to_string(ip.M);
    j["N"] = fermat::to_string(ip.N);
    text << j.dump(2);
  } else {
    text << "(" << fermat::to_string(pt.X()) << " : " << fermat::to_string(pt.Y())
         << " : 1)   [integral (" << fermat::to_string(ip.M) << " : "
         << fermat::to_string(ip.N) << " : 1)]\n";
  }
  write_output(text.str(), out);
  return kExitOk;
}

int cmd_orbit(const EquationFlags& eqf, const std::string& triplet, const OutputFlags& out) {
  auto eq = equation_from(eqf);
  fermat::Triplet t = parse_triplet(triplet);
  auto orbit = fermat::sign_orbit(eq, t);
  std::ostringstream text;
  if (out.format == "json") {
    fermat::Json arr = fermat::Json::array();
    for (const auto& [variant, mapped] : orbit) {
      fermat::Json j;
      j["signs"] = std::string() + (variant.signs[0] > 0 ? "+" : "-") +
                   (variant.signs[1] > 0 ? "+" : "-") + (variant.signs[2] > 0 ? "+" : "-");
      j["A"] = variant.equation.A.get_str();
      j["B"] = variant.equation.B.get_str();
      j["C"] = variant.equation.C.get_str();
      j["triplet"] = fermat::triplet_to_json(mapped);
      arr.push_back(std::move(j));
    }
    text << arr.dump(2);
  } else {
    for (const auto& [variant, mapped] : orbit) {
      text << "(" << (variant.signs[0] > 0 ? '+' : '-') << (variant.signs[1] > 0 ? '+' : '-')
           << (variant.signs[2] > 0 ? '+' : '-') << ")  "
           << variant.equation.A.get_str() << " x^" << eq.p << " + "
           << variant.equation.B.get_str() << " y^" << eq.p << " + "
           << variant.equation.C.get_str() << " z^" << eq.p << " = 0  <-  ("
           << mapped.x.get_str() << ", " << mapped.y.get_str() << ", "
           << mapped.z.get_str() << ")\n";
    }
  }
  write_output(text.str(), out);
  return kExitOk;
}

int cmd_verify(const EquationFlags& eqf, const std::string& triplet, const std::string& X,
               const std::string& Y, const OutputFlags& out) {
  auto eq = equation_from(eqf);
  fermat::Triplet t = parse_triplet(triplet);
  fermat::CurvePoint pt(fermat::parse_rational(X), fermat::parse_rational(Y));
  bool ok = fermat::verify_consistency(t, pt, eq);
  if (out.format == "json") {
    fermat::Json j;
    j["consistent"] = ok;
    write_output(j.dump(2), out);
  } else {
    write_output(std::string("consistent: ") + (ok ? "true" : "false"), out);
  }
  return kExitOk;
}

struct BatchLine {
  std::size_t line_number;
  std::string text;
};

fermat::Json process_batch_line(const BatchLine& line, const fermat::SearchBounds& defaults,
                                bool canonical) {
  fermat::Json record;
  record["schema"] = "fermat-descent/record-v1";
  record["version"] = fermat::kVersion;
  if (!canonical) record["timestamp"] = utc_timestamp();
  record["line"] = line.line_number;
  record["input"] = line.text;
  try {
    std::vector<std::string> fields;
    std::stringstream ss(line.text);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() != 4 && fields.size() != 6) {
      throw fermat::Error(fermat::Errc::bad_input,
                          "expected 'A,B,C,p' or 'A,B,C,p,d_max,a_max'");
    }
    unsigned long p = 0;
    try {
      p = std::stoul(fields[3]);
    } catch (const std::exception&) {
      throw fermat::Error(fermat::Errc::bad_input, "malformed p: '" + fields[3] + "'");
    }
    auto eq = fermat::FermatEquation::validated(
        parse_int(fields[0], "A"), parse_int(fields[1], "B"), parse_int(fields[2], "C"), p);
    fermat::SearchBounds bounds = defaults;
    if (fields.size() == 6) {
      try {
        bounds.d_max = std::stol(fields[4]);
      } catch (const std::exception&) {
        throw fermat::Error(fermat::Errc::bad_input, "malformed d_max: '" + fields[4] + "'");
      }
      bounds.a_max = parse_int(fields[5], "a_max");
    }
    record["status"] = "ok";
    record["report"] = fermat::report_to_json(fermat::solve(eq, bounds));
  } catch (const fermat::Error& e) {
    record["status"] = "error";
    fermat::Json err;
    err["code"] = fermat::errc_name(e.code());
    err["message"] = e.what();
    record["error"] = std::move(err);
  }
  return record;
}

int cmd_batch(const std::string& input_path, const std::string& output_path,
              const fermat::SearchBounds& defaults, bool canonical) {
  std::ifstream in(input_path);
  if (!in) {
    throw fermat::Error(fermat::Errc::io_failure, "cannot read '" + input_path + "'");
  }
  std::vector<BatchLine> lines;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string trimmed = raw;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    lines.push_back({line_number, trimmed});
  }

  std::vector<fermat::Json> records(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < lines.size(); ++i) {
    records[i] = process_batch_line(lines[i], defaults, canonical);
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      throw fermat::Error(fermat::Errc::io_failure, "cannot open '" + output_path + "'");
    }
    out = &file;
  }
  for (const auto& r : records) *out << r.dump() << "\n";
  out->flush();
  if (!out->good()) {
    throw fermat::Error(fermat::Errc::io_failure, "write failed");
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational solutions of A x^p + B y^p + C z^p = 0 via the attached "
               "hyperelliptic curve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fermat::kVersion);

  EquationFlags eqf;
  OutputFlags out;
  std::string triplet, point_x, point_y;
  std::string batch_in, batch_out;
  bool orderings = false;
  long d_max_flag = -1;
  std::string a_max_flag;
  long long budget_ms = -1;

  auto add_equation_flags = [&](CLI::App* cmd) {
    cmd->add_option("-A", eqf.A, "coefficient A")->required();
    cmd->add_option("-B", eqf.B, "coefficient B")->required();
    cmd->add_option("-C", eqf.C, "coefficient C")->required();
    cmd->add_option("-p", eqf.p, "prime exponent >= 5")->required();
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("-o,--output", out.output_path, "write output to file");
    cmd->add_flag("--canonical", out.canonical,
                  "deterministic JSON: no timestamps in records");
  };
  auto add_bounds_flags = [&](CLI::App* cmd) {
    cmd->add_option("--d-max", d_max_flag, "max denominator in X = a/d^2");
    cmd->add_option("--a-max", a_max_flag, "max |a| in X = a/d^2");
    cmd->add_option("--time-budget-ms", budget_ms, "cut the search after this many ms");
  };

  CLI::App* solve = app.add_subcommand("solve", "search the curve and recover solutions");
  add_equation_flags(solve);
  add_bounds_flags(solve);
  add_output_flags(solve);

  CLI::App* curve = app.add_subcommand("curve", "print both curve models and the genus");
  add_equation_flags(curve);
  curve->add_flag("--orderings", orderings, "also print the three lead-coefficient curves");
  add_output_flags(curve);

  CLI::App* map_point = app.add_subcommand("map-point", "map a solution triplet to a point");
  add_equation_flags(map_point);
  map_point->add_option("-t,--triplet", triplet, "solution as 'x,y,z'")->required();
  add_output_flags(map_point);

  CLI::App* orbit = app.add_subcommand("orbit", "print the 8 signed variants of a solution");
  add_equation_flags(orbit);
  orbit->add_option("-t,--triplet", triplet, "solution as 'x,y,z'")->required();
  add_output_flags(orbit);

  CLI::App* verify = app.add_subcommand("verify", "check a (triplet, point) pair");
  add_equation_flags(verify);
  verify->add_option("-t,--triplet", triplet, "solution as 'x,y,z'")->required();
  verify->add_option("-X", point_x, "point X coordinate (rational)")->required();
  verify->add_option("-Y", point_y, "point Y coordinate (rational)")->required();
  add_output_flags(verify);

  CLI::App* batch = app.add_subcommand("batch", "solve a CSV of equations to JSON lines");
  batch->add_option("-i,--input", batch_in, "CSV file: A,B,C,p[,d_max,a_max]")->required();
  batch->add_option("-o,--output", batch_out, "JSONL output (default stdout)");
  add_bounds_flags(batch);
  batch->add_flag("--canonical", out.canonical, "deterministic JSON: no timestamps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    fermat::SearchBounds bounds = default_bounds();
    if (d_max_flag >= 0) bounds.d_max = d_max_flag;
    if (!a_max_flag.empty()) bounds.a_max = parse_int(a_max_flag, "a_max");
    if (budget_ms >= 0) bounds.time_budget = std::chrono::milliseconds(budget_ms);

    if (app.got_subcommand(solve)) return cmd_solve(eqf, bounds, out);
    if (app.got_subcommand(curve)) return cmd_curve(eqf, orderings, out);
    if (app.got_subcommand(map_point)) return cmd_map_point(eqf, triplet, out);
    if (app.got_subcommand(orbit)) return cmd_orbit(eqf, triplet, out);
    if (app.got_subcommand(verify)) return cmd_verify(eqf, triplet, point_x, point_y, out);
    if (app.got_subcommand(batch)) return cmd_batch(batch_in, batch_out, bounds, out.canonical);
  } catch (const fermat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == fermat::Errc::io_failure ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
