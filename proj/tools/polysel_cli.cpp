// Command-line front end: reads a CSV table, runs one decision procedure and
// prints a machine-readable report. Exit codes: 0 = feasible/holds,
// 1 = infeasible/fails (a certificate is part of the report), 2 = bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysel/polysel.hpp"

namespace {

using nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

Table read_table(std::istream& in, const std::vector<std::string>& expect,
                 const std::string& source) {
  Table t;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line))
    throw ParseError(source + ": empty input, expected a header line");
  ++lineno;
  t.columns = split_csv(line);
  if (t.columns != expect) {
    std::ostringstream os;
    os << source << ":1: expected header \"";
    for (std::size_t i = 0; i < expect.size(); ++i)
      os << (i ? "," : "") << expect[i];
    os << "\", got \"" << trim(line) << "\"";
    throw ParseError(os.str());
  }

  double prev_x = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != expect.size()) {
      std::ostringstream os;
      os << source << ":" << lineno << ": expected " << expect.size()
         << " fields, got " << fields.size();
      throw ParseError(os.str());
    }
    std::vector<double> row;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const char* begin = fields[c].c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin || *end != '\0' || !std::isfinite(v)) {
        std::ostringstream os;
        os << source << ":" << lineno << ": field \"" << expect[c]
           << "\" is not a finite number: \"" << fields[c] << "\"";
        throw ParseError(os.str());
      }
      row.push_back(v);
    }
    if (!t.rows.empty() && row[0] <= prev_x) {
      std::ostringstream os;
      os << source << ":" << lineno << ": x must be strictly increasing ("
         << row[0] << " after " << prev_x << ")";
      throw ParseError(os.str());
    }
    prev_x = row[0];
    if (expect.size() == 3 && expect[1] == "lo" && row[1] > row[2]) {
      std::ostringstream os;
      os << source << ":" << lineno << ": lo > hi (" << row[1] << " > "
         << row[2] << ")";
      throw ParseError(os.str());
    }
    t.rows.push_back(std::move(row));
  }
  if (t.rows.size() < 2)
    throw ParseError(source + ": need at least two data rows");
  return t;
}

Table load(const std::string& path, const std::vector<std::string>& expect) {
  if (path.empty()) return read_table(std::cin, expect, "<stdin>");
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_table(in, expect, path);
}

polysel::IntervalFn to_interval_fn(const Table& t, const polysel::Tolerances& tol) {
  std::vector<double> xs;
  std::vector<polysel::Interval> ivs;
  for (const auto& r : t.rows) {
    xs.push_back(r[0]);
    ivs.emplace_back(r[1], r[2]);
  }
  return polysel::IntervalFn(polysel::Grid(std::move(xs), tol), std::move(ivs));
}

std::pair<polysel::SampledFn, polysel::SampledFn> to_pair(
    const Table& t, const polysel::Tolerances& tol) {
  std::vector<double> xs, f, g;
  for (const auto& r : t.rows) {
    xs.push_back(r[0]);
    f.push_back(r[1]);
    g.push_back(r[2]);
  }
  polysel::Grid grid(std::move(xs), tol);
  return {polysel::SampledFn(grid, std::move(f)),
          polysel::SampledFn(grid, std::move(g))};
}

polysel::SampledFn to_sampled_fn(const Table& t, const polysel::Tolerances& tol) {
  std::vector<double> xs, f;
  for (const auto& r : t.rows) {
    xs.push_back(r[0]);
    f.push_back(r[1]);
  }
  return polysel::SampledFn(polysel::Grid(std::move(xs), tol), std::move(f));
}

struct Options {
  int degree = 1;
  std::string input;
  double tol = 1e-9;
  std::string format = "json";
  bool parallel = false;
  std::optional<double> epsilon;  // stabilize only
};

ordered_json base_report(const std::string& command, const Options& opt,
                         std::size_t points, const polysel::Tolerances& tol) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["degree"] = opt.degree;
  j["points"] = points;
  j["tolerance"] = tol.decision;
  j["acceptance_tolerance"] = tol.acceptance;
  return j;
}

ordered_json witness_json(const polysel::Polynomial& w,
                          const polysel::Tolerances& tol) {
  ordered_json j;
  j["monomial"] = w.monomial(tol);
  return j;
}

ordered_json violation_json(
    const std::variant<polysel::PointwiseViolation, polysel::TupleViolation>& v) {
  ordered_json j;
  if (const auto* pv = std::get_if<polysel::PointwiseViolation>(&v)) {
    j["kind"] = "pointwise";
    j["index"] = pv->index;
    j["gap"] = pv->gap;
  } else {
    const auto& tv = std::get<polysel::TupleViolation>(v);
    j["kind"] = "tuple";
    j["tuple"] = tv.indices;
    j["side"] =
        tv.side == polysel::TupleViolation::Side::Upper ? "upper" : "lower";
    j["slack"] = tv.slack;
  }
  return j;
}

void emit(const ordered_json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text: flat "key: value" lines in report order
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured())
      std::cout << key << ": " << value.dump() << "\n";
    else if (value.is_string())
      std::cout << key << ": " << value.get<std::string>() << "\n";
    else
      std::cout << key << ": " << value.dump() << "\n";
  }
}

int run_selection(const std::string& command, const Options& opt,
                  const polysel::Tolerances& tol) {
  const Table t = load(opt.input, {"x", "lo", "hi"});
  const polysel::IntervalFn F = to_interval_fn(t, tol);
  const bool with_witness = command == "solve-selection";
  const polysel::FeasibilityReport rep =
      with_witness ? polysel::solve_selection(F, opt.degree, tol, opt.parallel)
                   : polysel::check_selection(F, opt.degree, tol, opt.parallel);

  ordered_json j = base_report(command, opt, F.size(), tol);
  j["verdict"] = rep.feasible ? "feasible" : "infeasible";
  if (rep.witness) j["witness"] = witness_json(*rep.witness, tol);
  if (rep.certificate) {
    j["certificate"]["tuple"] = rep.certificate->indices;
    j["certificate"]["gap"] = rep.certificate->gap;
  }
  emit(j, opt.format);
  return rep.feasible ? 0 : 1;
}

int run_separation(const std::string& command, const Options& opt,
                   const polysel::Tolerances& tol) {
  const Table t = load(opt.input, {"x", "f", "g"});
  const auto [f, g] = to_pair(t, tol);
  const bool with_witness = command == "separate";
  const polysel::SeparationReport rep =
      with_witness ? polysel::separate(f, g, opt.degree, tol, opt.parallel)
                   : polysel::check_separation(f, g, opt.degree, tol, opt.parallel);

  ordered_json j = base_report(command, opt, f.size(), tol);
  j["verdict"] = rep.separable ? "separable" : "not-separable";
  if (rep.witness) j["witness"] = witness_json(*rep.witness, tol);
  if (rep.violation) j["violation"] = violation_json(*rep.violation);
  emit(j, opt.format);
  return rep.separable ? 0 : 1;
}

int run_convexity(const std::string& command, const Options& opt,
                  const polysel::Tolerances& tol) {
  const Table t = load(opt.input, {"x", "f"});
  const polysel::SampledFn f = to_sampled_fn(t, tol);
  const polysel::ConvexityReport rep =
      command == "check-nconvex" ? polysel::is_n_convex(f, opt.degree, tol)
                                 : polysel::is_n_concave(f, opt.degree, tol);

  ordered_json j = base_report(command, opt, f.size(), tol);
  j["verdict"] = rep.holds ? "holds" : "fails";
  if (rep.counterexample) {
    j["counterexample"]["tuple"] = rep.counterexample->indices;
    j["counterexample"]["defect"] = rep.counterexample->defect;
  }
  emit(j, opt.format);
  return rep.holds ? 0 : 1;
}

int run_epsilon(const Options& opt, const polysel::Tolerances& tol) {
  const Table t = load(opt.input, {"x", "f"});
  const polysel::SampledFn f = to_sampled_fn(t, tol);
  const polysel::EpsilonReport rep =
      polysel::hyers_ulam_epsilon_report(f, opt.degree, tol);

  ordered_json j = base_report("epsilon", opt, f.size(), tol);
  j["epsilon"] = rep.epsilon;
  j["argmax_tuple"] = rep.argmax;
  emit(j, opt.format);
  return 0;
}

int run_stabilize(const Options& opt, const polysel::Tolerances& tol) {
  const Table t = load(opt.input, {"x", "f"});
  const polysel::SampledFn f = to_sampled_fn(t, tol);
  const double eps_star = polysel::hyers_ulam_epsilon(f, opt.degree, tol);
  const double eps = opt.epsilon.value_or(eps_star);
  const polysel::Polynomial w = polysel::stabilize(f, opt.degree, eps, tol);

  double sup_err = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    sup_err = std::max(sup_err, std::abs(f(i) - w(f.grid()[i])));

  ordered_json j = base_report("stabilize", opt, f.size(), tol);
  j["epsilon"] = eps;
  j["epsilon_star"] = eps_star;
  j["witness"] = witness_json(w, tol);
  j["sup_error"] = sup_err;
  j["bound"] = 0.5 * eps;
  emit(j, opt.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Polynomial selection, separation, higher-order convexity and "
      "stabilization over sampled data"};
  app.require_subcommand(1);

  const std::vector<std::string> commands = {
      "check-selection", "solve-selection", "check-separation", "separate",
      "check-nconvex",   "check-nconcave",  "epsilon",          "stabilize"};
  const std::vector<std::string> descriptions = {
      "Decide whether a degree <= n polynomial passes through every interval",
      "Decide and construct a witness polynomial",
      "Decide whether f and g admit a degree <= n polynomial between them",
      "Decide separability and construct a separating polynomial",
      "Test n-convexity of a sampled function",
      "Test n-concavity of a sampled function",
      "Largest deviation from the (n+1)-point polynomial extrapolations",
      "Fit a polynomial within eps/2 of a sampled function"};

  Options opt;
  double epsilon_flag = 0.0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("--degree", opt.degree, "Polynomial degree bound n")
        ->required();
    sub->add_option("--input", opt.input, "CSV input path (default: stdin)");
    sub->add_option("--tol", opt.tol, "Decision tolerance")
        ->default_val(1e-9);
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("json");
    sub->add_option("--parallel", opt.parallel,
                    "Scan tuples on multiple threads");
    if (commands[i] == "stabilize") {
      sub->add_option("--epsilon", epsilon_flag,
                      "Deviation band width (default: measured epsilon*)");
    }
  }

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "stabilize" && sub->count("--epsilon") > 0)
    opt.epsilon = epsilon_flag;

  polysel::Tolerances tol;
  tol.decision = opt.tol;

  try {
    if (command == "check-selection" || command == "solve-selection")
      return run_selection(command, opt, tol);
    if (command == "check-separation" || command == "separate")
      return run_separation(command, opt, tol);
    if (command == "check-nconvex" || command == "check-nconcave")
      return run_convexity(command, opt, tol);
    if (command == "epsilon") return run_epsilon(opt, tol);
    return run_stabilize(opt, tol);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polysel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
