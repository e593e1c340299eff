#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oat/demos.hpp"
#include "oat/errors.hpp"
#include "oat/matspace.hpp"
#include "oat/parallel.hpp"
#include "oat/scenario.hpp"

namespace {

int emit(const oat::Report& rep, double tol, const std::string& report_path,
         const std::string& check_filter) {
  oat::Report shown = oat::filter_report(rep, check_filter);
  std::cout << oat::report_text(rep, check_filter);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report file '" << report_path << "'\n";
      return 2;
    }
    out << oat::report_to_json(shown, tol).dump(2) << "\n";
  }
  return shown.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-algebra toolkit: bundle, bimodule and "
               "basic-construction verification"};
  app.require_subcommand(1);

  double tol = 0.0;
  std::string report_path, check_filter;
  int parallel = 1;
  app.add_option("--tol", tol, "numerical tolerance (default 1e-9)");
  app.add_option("--report", report_path, "write a machine-readable report");
  app.add_option("--check", check_filter, "only emit checks with this id "
                 "prefix");
  app.add_option("--parallel", parallel, "worker threads for verification "
                 "loops");

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "execute a scenario file");
  run->fallthrough();
  run->add_option("path", scenario_path, "scenario JSON file")->required();

  std::string demo_name, demo_out;
  bool demo_list = false, demo_exec = false;
  auto* demo = app.add_subcommand("demo", "generate or run a built-in "
                                  "scenario");
  demo->fallthrough();
  demo->add_option("name", demo_name, "demo name");
  demo->add_option("--out", demo_out, "write the scenario to this file");
  demo->add_flag("--list", demo_list, "list demo names");
  demo->add_flag("--run", demo_exec, "run the demo after generating it");

  CLI11_PARSE(app, argc, argv);
  oat::set_parallelism(parallel);
  const double effective_tol = tol > 0 ? tol : oat::kDefaultTol;

  try {
    if (run->parsed()) {
      oat::Report rep = oat::run_scenario_file(scenario_path, tol);
      return emit(rep, effective_tol, report_path, check_filter);
    }
    if (demo_list) {
      for (const auto& n : oat::demo_names()) std::cout << n << "\n";
      return 0;
    }
    if (demo_name.empty()) {
      std::cerr << "demo requires a name (or --list)\n";
      return 2;
    }
    oat::Json doc = oat::generate_demo(demo_name);
    if (!demo_out.empty()) {
      std::ofstream out(demo_out);
      if (!out) {
        std::cerr << "cannot write '" << demo_out << "'\n";
        return 2;
      }
      out << doc.dump(2) << "\n";
    }
    if (demo_exec || demo_out.empty()) {
      oat::Report rep = oat::run_scenario_json(doc, tol);
      return emit(rep, effective_tol, report_path, check_filter);
    }
    return 0;
  } catch (const oat::ParseError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const oat::UnresolvedReference& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const oat::UnknownDemo& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const oat::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
