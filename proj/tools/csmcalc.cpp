// csmcalc: characteristic classes of singular hypersurfaces in products of
// projective spaces.
//
// Exit codes: 0 success (all checks pass), 1 a check failed, 2 invalid input,
// 3 math error (e.g. non-isolated singularities).

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csmcalc/classes.hpp"
#include "csmcalc/error.hpp"
#include "csmcalc/milnor.hpp"
#include "csmcalc/scene_io.hpp"

namespace {

using namespace csmcalc;
using io::Json;

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_report(const GlobalFlags& g, const std::string& path, const std::vector<int>& ms) {
  classes::VarietyInput input = io::load_scene_file(path);
  classes::ClassReport report = classes::build_report(input, ms);
  if (!g.quiet) {
    if (g.json)
      std::cout << io::canonical_dump(io::report_to_json(report));
    else
      std::cout << io::report_to_text(report);
  }
  return 0;
}

int cmd_check(const GlobalFlags& g, const std::string& path, const std::string& checks, int m) {
  std::vector<std::string> names = checks == "all" ? classes::check_names() : split_list(checks);
  for (const auto& n : names) {
    const auto& known = classes::check_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw ValidationError("unknown check '" + n + "'");
  }
  classes::VarietyInput input = io::load_scene_file(path);
  classes::ResolvedMu resolved = classes::resolve_mu(input);
  bool all_pass = true;
  Json out = Json::object();
  for (const auto& n : names) {
    if (resolved.mu.scene()->codim() != 1 && (n == "defect_codim1" || n == "lci")) {
      if (!g.quiet && !g.json) std::cout << n << ": skipped (not codimension one)\n";
      continue;
    }
    classes::CheckResult r = classes::run_check(n, input, resolved, m);
    all_pass = all_pass && r.pass;
    Json entry{{"pass", r.pass}, {"residual", io::class_to_json(r.residual)}};
    out[n] = entry;
    if (!g.quiet && !g.json) {
      std::cout << n << ": " << (r.pass ? "pass" : "FAIL");
      if (!r.pass) std::cout << " (residual " << r.residual.to_string() << ")";
      std::cout << "\n";
    }
  }
  if (!g.quiet && g.json) std::cout << io::canonical_dump(out);
  return all_pass ? 0 : 1;
}

int cmd_milnor(const GlobalFlags& g, const std::string& text, const std::string& vars, const std::string& chart) {
  std::vector<std::string> names = split_list(vars);
  auto it = std::find(names.begin(), names.end(), chart);
  if (it == names.end()) throw ValidationError("chart '" + chart + "' is not one of the variables");
  poly::Polynomial F = poly::parse_polynomial(text, names);
  poly::MilnorResult r = poly::total_milnor_number(F, static_cast<std::size_t>(it - names.begin()));
  if (g.quiet) return 0;
  if (g.json)
    std::cout << io::canonical_dump(
        Json{{"total_milnor", r.total_milnor}, {"jacobian_dim", r.jacobian_dim}, {"off_curve_dim", r.off_curve_dim}});
  else
    std::cout << r.total_milnor << "\n";
  return 0;
}

int cmd_table(const GlobalFlags& g, int nmax, int dmax) {
  if (nmax < 1 || dmax < 1) throw ValidationError("--nmax and --dmax must be >= 1");
  Json rows = Json::array();
  if (!g.quiet && !g.json) std::cout << "n\td\tchi\n";
  for (int n = 1; n <= nmax; ++n) {
    for (int d = 1; d <= dmax; ++d) {
      chow::AmbientSpace a({n});
      std::vector<chow::Multidegree> degrees{{d}};
      chow::Integer chi = chow::degree(classes::fulton_johnson(a, degrees));
      if (g.json)
        rows.push_back({{"n", n}, {"d", d}, {"chi", io::integer_to_json(chi)}});
      else if (!g.quiet)
        std::cout << n << "\t" << d << "\t" << chi.get_str() << "\n";
    }
  }
  if (!g.quiet && g.json) std::cout << io::canonical_dump(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Schwartz-MacPherson, Fulton-Johnson and Milnor classes of singular hypersurfaces"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit canonical JSON");
  app.add_flag("--quiet", g.quiet, "No output; exit code only");

  std::string scene_path;
  std::vector<int> report_ms{1};
  auto* report = app.add_subcommand("report", "Compute classes and run all checks for a scene file");
  report->add_option("scene", scene_path, "Scene JSON file")->required();
  report->add_option("--m", report_ms, "Fiber dimensions for the product checks")->delimiter(',');
  report->fallthrough();

  std::string checks = "all";
  int m = 1;
  auto* check = app.add_subcommand("check", "Run identity checks on a scene file");
  check->add_option("scene", scene_path, "Scene JSON file")->required();
  check->add_option("--checks", checks, "Comma-separated: verdier_smooth,defect_codim1,pushdown,lci or all");
  check->add_option("--m", m, "Dimension of the P^m factor")->check(CLI::NonNegativeNumber);
  check->fallthrough();

  std::string poly_text, vars = "x,y,z", chart = "z";
  auto* milnor = app.add_subcommand("milnor", "Total Milnor number of a projective hypersurface in a chart");
  milnor->add_option("--poly", poly_text, "Homogeneous polynomial")->required();
  milnor->add_option("--vars", vars, "Comma-separated homogeneous variables");
  milnor->add_option("--chart", chart, "Variable set to 1");
  milnor->fallthrough();

  int nmax = 4, dmax = 4;
  auto* table = app.add_subcommand("table", "Euler characteristics of smooth hypersurfaces in P^n");
  table->add_option("--nmax", nmax, "Largest n");
  table->add_option("--dmax", dmax, "Largest degree");
  table->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*report) return cmd_report(g, scene_path, report_ms);
    if (*check) return cmd_check(g, scene_path, checks, m);
    if (*milnor) return cmd_milnor(g, poly_text, vars, chart);
    if (*table) return cmd_table(g, nmax, dmax);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
