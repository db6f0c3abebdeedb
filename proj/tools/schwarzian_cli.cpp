// Command-line front end: verification suites, q-expansion dumps and
// trajectory export.
//
// Exit codes: 0 all executed checks passed, 1 at least one check failed,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schwarzian/mass_spring.hpp"
#include "schwarzian/modular.hpp"
#include "schwarzian/suites.hpp"

namespace {

int run_verify(const std::string& suite, const schwarzian::SuiteOptions& options,
               const std::string& format) {
  std::vector<schwarzian::CheckReport> reports;
  if (suite == "all") {
    reports = schwarzian::run_all_suites(options);
  } else {
    reports = schwarzian::run_suite(suite, options);
  }
  if (format == "json") {
    std::cout << schwarzian::to_json(reports);
  } else {
    std::cout << schwarzian::to_text(reports);
  }
  int failed = 0;
  for (const auto& r : reports)
    if (r.status == schwarzian::CheckReport::Status::Fail) ++failed;
  std::cerr << reports.size() << " checks, " << (reports.size() - failed) << " passed, "
            << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

std::string join_coeffs(const schwarzian::QSeries& s) {
  std::ostringstream out;
  for (int i = 0; i < s.order(); ++i) {
    if (i) out << ", ";
    out << s.coeff(i).to_string();
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification kernel for matrix Schwarzian calculus"};
  app.require_subcommand(1);

  schwarzian::SuiteOptions options;
  std::string suite = "all";
  std::string format = "text";

  std::vector<std::string> verify_choices = schwarzian::suite_names();
  verify_choices.insert(verify_choices.begin(), "all");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(verify_choices));
  verify->add_option("--order", options.order, "q-expansion truncation order")
      ->check(CLI::Range(8, 4096))
      ->capture_default_str();
  verify->add_option("--trials", options.trials, "instances per randomized law")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  verify->add_option("--seed", options.seed, "seed for the randomized suites")
      ->capture_default_str();
  verify->add_option("--step", options.step, "integrator step for numeric checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_flag("--inject-failure", options.inject_failure)->group("");

  int weight = 2;
  int series_order = 64;
  std::string series_kind;
  std::string method = "eisenstein";
  CLI::App* series = app.add_subcommand("series", "print q-expansion coefficients");
  series->add_option("kind", series_kind, "series to print")
      ->required()
      ->check(CLI::IsMember({"eisenstein", "delta"}));
  series->add_option("--weight", weight, "Eisenstein weight")
      ->check(CLI::IsMember({2, 4, 6}))
      ->capture_default_str();
  series->add_option("--order", series_order, "truncation order")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
  series->add_option("--method", method, "construction of the cusp form")
      ->check(CLI::IsMember({"product", "eisenstein"}))
      ->capture_default_str();

  std::string system_name = "two-mass";
  std::string output;
  double t0 = 0.0, t1 = 10.0, step = 1e-3;
  std::vector<double> k{1.0, 1.0};
  CLI::App* trajectory = app.add_subcommand("trajectory", "integrate and export CSV");
  trajectory->add_option("--system", system_name, "built-in system")
      ->check(CLI::IsMember({"unit", "two-mass"}))
      ->capture_default_str();
  trajectory->add_option("--stiffness", k, "spring constants (two-mass)")->expected(2);
  trajectory->add_option("--t0", t0)->capture_default_str();
  trajectory->add_option("--t1", t1)->capture_default_str();
  trajectory->add_option("--step", step)->check(CLI::PositiveNumber)->capture_default_str();
  trajectory->add_option("--output", output, "CSV file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(suite, options, format);

    if (series->parsed()) {
      if (series_kind == "eisenstein") {
        std::cout << join_coeffs(schwarzian::eisenstein(weight, series_order).series) << "\n";
      } else {
        const auto m = method == "product" ? schwarzian::DeltaMethod::Product
                                           : schwarzian::DeltaMethod::Eisenstein;
        std::cout << join_coeffs(schwarzian::delta(series_order, m).series) << "\n";
      }
      return 0;
    }

    if (trajectory->parsed()) {
      using schwarzian::RatFunc;
      using schwarzian::RatMat;
      using schwarzian::Rational;
      schwarzian::SpringSystem sys =
          system_name == "unit"
              ? schwarzian::SpringSystem(RatMat(1), RatMat{{RatFunc(-1)}})
              : schwarzian::SpringSystem(
                    RatMat(2), schwarzian::two_mass_stiffness(Rational::from_double(k[0]),
                                                              Rational::from_double(k[1])));
      const int n = sys.dim();
      const std::vector<double> psi0(static_cast<size_t>(n), 1.0);
      const std::vector<double> v0(static_cast<size_t>(n), 0.0);
      const auto traj = schwarzian::integrate(sys, psi0, v0, t0, t1, step);
      if (output.empty()) {
        schwarzian::write_csv(traj, std::cout);
      } else {
        std::ofstream out(output);
        if (!out) {
          std::cerr << "cannot open " << output << "\n";
          return 2;
        }
        schwarzian::write_csv(traj, out);
      }
      return 0;
    }
  } catch (const schwarzian::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
