// Command-line front end: class-maximum tables, extremal coefficients, image
// boundary curves, the seeded sampling harness, and the multiplier solver.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starea/area.hpp"
#include "starea/curves.hpp"
#include "starea/family.hpp"
#include "starea/json_io.hpp"
#include "starea/special.hpp"
#include "starea/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitVerificationFailure = 3;

std::string format6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// number carrying exactly the 6 significant digits that the text formats show
double rounded6(double v) { return std::strtod(format6(v).c_str(), nullptr); }

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw starea::BadParameter("cannot open output file: " + output_path);
  out << text;
}

struct TableRow {
  std::optional<double> beta;  // absent for the single-parameter table
  double alpha = 0.0;
  double value = 0.0;
};

std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::string out = rows[0].beta ? "beta,alpha,value\n" : "alpha,value\n";
    for (const TableRow& r : rows) {
      if (r.beta) out += format6(*r.beta) + ",";
      out += format6(r.alpha) + "," + format6(r.value) + "\n";
    }
    return out;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const TableRow& r : rows) {
    nlohmann::json row;
    if (r.beta) row["beta"] = rounded6(*r.beta);
    row["alpha"] = rounded6(r.alpha);
    row["value"] = rounded6(r.value);
    j.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"numerical toolkit for maximal area integrals over starlike classes"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  double alpha = 0.0, beta = 0.0, rho = 0.0, radius = 0.0, rotation = 0.0;
  int order = 0, points = 360, samples = 100;
  std::uint64_t seed = 0;
  std::string function_choice = "k";
  std::string input_path;
  std::vector<double> rho_grid;
  bool exact = false;
  std::string alpha_text, beta_text, rho_text;

  CLI::App* table1 = app.add_subcommand("table1", "class maxima at the boundary radius");
  table1->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table1->add_option("--output", output);

  CLI::App* table2 = app.add_subcommand("table2", "order-zero maxima at the boundary radius");
  table2->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table2->add_option("--output", output);

  CLI::App* area = app.add_subcommand("area", "area of z/f at a radius");
  area->add_option("--alpha", alpha)->required();
  area->add_option("--beta", beta)->required();
  area->add_option("--rho", rho)->required();
  area->add_option("--order", order, "series order (default: automatic)");
  area->add_option("--input", input_path, "series JSON to use instead of the extremal member");
  area->add_option("--output", output);

  CLI::App* extremal = app.add_subcommand("extremal", "extremal member coefficients");
  extremal->add_option("--alpha", alpha)->required();
  extremal->add_option("--beta", beta)->required();
  extremal->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  extremal->add_option("--function", function_choice)->check(CLI::IsMember({"k", "g"}));
  extremal->add_option("--output", output);

  CLI::App* boundary = app.add_subcommand("boundary", "image of a circle under k or g");
  boundary->add_option("--alpha", alpha)->required();
  boundary->add_option("--beta", beta)->required();
  boundary->add_option("--radius", radius)->required();
  boundary->add_option("--function", function_choice)->check(CLI::IsMember({"k", "g"}));
  boundary->add_option("--points", points, "number of segments (default 360)");
  boundary->add_option("--rotation", rotation, "rotation angle of the member");
  boundary->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  boundary->add_option("--output", output);

  CLI::App* sample_test = app.add_subcommand("sample-test", "seeded area-bound trial");
  sample_test->add_option("--alpha", alpha)->required();
  sample_test->add_option("--beta", beta)->required();
  sample_test->add_option("--rho", rho_grid, "trial radii (repeatable; default 0.3 0.6 0.9)");
  sample_test->add_option("--samples", samples)->check(CLI::PositiveNumber);
  sample_test->add_option("--seed", seed);
  sample_test->add_option("--order", order, "series order (default: automatic)");
  sample_test->add_option("--output", output);

  CLI::App* lambda_cmd = app.add_subcommand("lambda", "multiplier system solution");
  lambda_cmd->add_option("--alpha", alpha_text)->required();
  lambda_cmd->add_option("--beta", beta_text)->required();
  lambda_cmd->add_option("--rho", rho_text)->required();
  lambda_cmd->add_option("--order", order, "system size N")->required()->check(CLI::PositiveNumber);
  lambda_cmd->add_flag("--exact", exact, "re-solve in exact rational arithmetic (N <= 20)");
  lambda_cmd->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (table1->parsed()) {
      std::vector<TableRow> rows;
      for (double b : {2.0 / 3.0, 4.0 / 5.0})
        for (double a : {1.0 / 4.0, 2.0 / 3.0, 5.0 / 6.0})
          rows.push_back({b, a, starea::max_area(starea::FamilyParams(a, b), 1.0)});
      emit(render_table(rows, format), output);
      return kExitOk;
    }

    if (table2->parsed()) {
      std::vector<TableRow> rows;
      for (double a : {1.0 / 4.0, 2.0 / 3.0, 5.0 / 6.0, 8.0 / 9.0})
        rows.push_back({std::nullopt, a, starea::max_area_beta0(a, 1.0)});
      emit(render_table(rows, format), output);
      return kExitOk;
    }

    if (area->parsed()) {
      const starea::FamilyParams params(alpha, beta);
      nlohmann::json report;
      report["alpha"] = alpha;
      report["beta"] = beta;
      report["rho"] = rho;

      starea::AreaResult result;
      if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw starea::BadParameter("cannot open series file: " + input_path);
        nlohmann::json j;
        in >> j;
        result = starea::area_series(starea::series_from_json(j), rho);
      } else {
        int n = order > 0 ? order : (rho > 0.9 ? 256 : 64);
        bool warned = false;
        // raise the order until the last-term diagnostic is negligible
        while (true) {
          result = starea::area_series(starea::extremal_reciprocal(params, n), rho);
          if (result.tail_estimate <= 1e-8 * result.value || n >= (1 << 20)) break;
          if (!warned) {
            std::cerr << "warning: series tail above 1e-8 of the value at order " << n
                      << ", raising the order\n";
            warned = true;
          }
          n *= 2;
        }
        if (result.tail_estimate > 1e-8 * result.value)
          std::cerr << "warning: tail diagnostic still above 1e-8 of the value at the order cap\n";
      }
      report["value"] = result.value;
      report["tail_estimate"] = result.tail_estimate;
      report["order_used"] = result.order_used;

      try {
        const double closed = starea::max_area(params, rho);
        report["closed_form"] = closed;
        report["relative_gap"] = std::abs(result.value - closed) / closed;
      } catch (const starea::DivergentSeries&) {
        // boundary corner cases (alpha = rho = 1) can be too slow for the
        // default tolerance; the series value stands on its own
        report["closed_form"] = nullptr;
      }
      emit(report.dump(2) + "\n", output);
      return kExitOk;
    }

    if (extremal->parsed()) {
      const starea::FamilyParams params(alpha, beta);
      const starea::TruncatedSeries f = function_choice == "k"
                                            ? starea::extremal_function(params, order)
                                            : starea::extremal_reciprocal(params, order);
      nlohmann::json j = starea::to_json(f);
      j["alpha"] = alpha;
      j["beta"] = beta;
      j["function"] = function_choice;
      emit(j.dump(2) + "\n", output);
      return kExitOk;
    }

    if (boundary->parsed()) {
      const starea::FamilyParams params(alpha, beta);
      const auto choice =
          function_choice == "k" ? starea::ExtremalChoice::k : starea::ExtremalChoice::g;
      const auto curve = starea::boundary_curve(params, choice, radius, points, rotation);
      if (format == "svg") {
        emit(starea::curve_svg(curve), output);
      } else if (format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : curve) pts.push_back({p.theta, p.value.real(), p.value.imag()});
        emit(nlohmann::json{{"points", std::move(pts)}}.dump(2) + "\n", output);
      } else {
        emit(starea::curve_csv(curve), output);
      }
      return kExitOk;
    }

    if (sample_test->parsed()) {
      const starea::FamilyParams params(alpha, beta);
      if (rho_grid.empty()) rho_grid = {0.3, 0.6, 0.9};
      starea::TrialOptions options;
      options.order = order;
      const starea::TrialReport report =
          starea::conjecture_trial(params, rho_grid, samples, seed, options);
      emit(starea::to_json(report).dump(2) + "\n", output);
      if (report.violations > 0) {
        std::cerr << "verification failure: " << report.violations
                  << " sample(s) exceeded the bound\n";
        return kExitVerificationFailure;
      }
      return kExitOk;
    }

    if (lambda_cmd->parsed()) {
      if (exact) {
        const auto sol = starea::solve_lambda_exact(order, starea::Fraction::parse(alpha_text),
                                                    starea::Fraction::parse(beta_text),
                                                    starea::Fraction::parse(rho_text));
        emit(starea::to_json(sol).dump(2) + "\n", output);
        if (!sol.all_positive || !sol.residuals_zero) {
          std::cerr << "verification failure: exact multiplier check failed\n";
          return kExitVerificationFailure;
        }
        return kExitOk;
      }
      char* end = nullptr;
      const double a = std::strtod(alpha_text.c_str(), &end);
      if (end != alpha_text.c_str() + alpha_text.size())
        throw starea::BadParameter("malformed --alpha value");
      const double b = std::strtod(beta_text.c_str(), &end);
      if (end != beta_text.c_str() + beta_text.size())
        throw starea::BadParameter("malformed --beta value");
      const double r = std::strtod(rho_text.c_str(), &end);
      if (end != rho_text.c_str() + rho_text.size())
        throw starea::BadParameter("malformed --rho value");
      const auto sol = starea::solve_lambda(order, starea::FamilyParams(a, b), r);
      emit(starea::to_json(sol).dump(2) + "\n", output);
      return kExitOk;
    }
  } catch (const starea::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
