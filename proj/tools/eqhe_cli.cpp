// eqhe: quantum Otto cycle on two-spin DM working substances.
//
//   eqhe cycle  --j1 2 --th 4 --j2 1 --tl 1
//   eqhe fig12  [--th 2 --tl 1 --gamma 0,0.25,0.5,0.75,1 --c2-steps 200 --out fig12.csv]
//   eqhe fig3   [--ratio 2,5 --gamma ... --c2-steps 200 --out fig3.csv]
//   eqhe region [--param jd|concurrence --x-min .. --steps 60 --out region.csv]
//   eqhe verify [--seed 1729 --samples 1000]
//
// Exit status: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "eqhe/errors.hpp"
#include "eqhe/otto_engine.hpp"
#include "eqhe/sweep.hpp"
#include "eqhe/verify.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw eqhe::IoError("cannot open output file '" + path + "'");
  file << text;
  file.close();
  if (!file) throw eqhe::IoError("failed writing output file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled quantum Otto engine: cycle evaluation, figure sweeps and oracle checks"};
  app.require_subcommand(1);

  // cycle
  eqhe::CycleSpec cycle_spec;
  auto* cycle = app.add_subcommand("cycle", "Evaluate one cycle in (J, D, T) parameters");
  cycle->add_option("--j1", cycle_spec.hot.model.j, "hot-stage coupling J1")->required();
  cycle->add_option("--d1", cycle_spec.hot.model.d, "hot-stage DM strength D1")->capture_default_str();
  cycle->add_option("--th", cycle_spec.hot.temperature, "hot bath temperature")->required();
  cycle->add_option("--j2", cycle_spec.cold.model.j, "cold-stage coupling J2")->required();
  cycle->add_option("--d2", cycle_spec.cold.model.d, "cold-stage DM strength D2")->capture_default_str();
  cycle->add_option("--tl", cycle_spec.cold.temperature, "cold bath temperature")->required();

  const std::map<std::string, eqhe::CouplingBranch> branches{
      {"afm", eqhe::CouplingBranch::kAntiferromagnetic},
      {"fm", eqhe::CouplingBranch::kFerromagnetic}};

  // fig12
  eqhe::sweep::Fig12Config fig12_config;
  std::string fig12_out;
  auto* fig12 = app.add_subcommand("fig12", "Q_h, Q_l, W against C2 for a family of gamma = C1/C2");
  fig12->add_option("--th", fig12_config.th, "hot bath temperature")->capture_default_str();
  fig12->add_option("--tl", fig12_config.tl, "cold bath temperature")->capture_default_str();
  fig12->add_option("--gamma", fig12_config.gammas, "gamma values")->delimiter(',');
  fig12->add_option("--c2-steps", fig12_config.c2_steps, "C2 grid points")->capture_default_str();
  fig12->add_option("--branch", fig12_config.branch, "coupling branch")
      ->transform(CLI::CheckedTransformer(branches, CLI::ignore_case));
  fig12->add_option("--out", fig12_out, "output CSV path (stdout if omitted)");

  // fig3
  eqhe::sweep::Fig3Config fig3_config;
  std::string fig3_out;
  auto* fig3 = app.add_subcommand("fig3", "Efficiency against C2 for a family of gamma");
  fig3->add_option("--ratio", fig3_config.ratios, "Th/Tl values")->delimiter(',');
  fig3->add_option("--gamma", fig3_config.gammas, "gamma values")->delimiter(',');
  fig3->add_option("--c2-steps", fig3_config.c2_steps, "C2 grid points")->capture_default_str();
  fig3->add_option("--out", fig3_out, "output CSV path (stdout if omitted)");

  // region
  std::string region_param = "jd";
  std::optional<double> x_min, x_max, y_min, y_max;
  std::optional<int> region_steps;
  std::optional<double> region_j1, region_d1, region_d2, region_th, region_tl;
  std::string region_out;
  auto* region = app.add_subcommand("region", "Rasterize the positive-work region");
  region->add_option("--param", region_param, "jd (x = e2, y = Th) or concurrence (x = C2, y = C1)")
      ->check(CLI::IsMember({"jd", "concurrence"}))
      ->capture_default_str();
  region->add_option("--x-min", x_min);
  region->add_option("--x-max", x_max);
  region->add_option("--y-min", y_min);
  region->add_option("--y-max", y_max);
  region->add_option("--steps", region_steps, "grid points per axis");
  region->add_option("--j1", region_j1, "hot-stage coupling (jd)");
  region->add_option("--d1", region_d1, "hot-stage DM strength (jd)");
  region->add_option("--d2", region_d2, "cold-stage DM strength (jd)");
  region->add_option("--th", region_th, "hot bath temperature (concurrence)");
  region->add_option("--tl", region_tl, "cold bath temperature");
  region->add_option("--out", region_out, "output CSV path (stdout if omitted)");

  // verify
  eqhe::verify::VerifyConfig verify_config;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the numeric oracle");
  verify->add_option("--seed", verify_config.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", verify_config.samples, "random samples per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--out", verify_out, "report path (stdout if omitted)");
  verify->add_flag("--inject-fault", verify_config.inject_fault,
                   "negative control: corrupt the closed-form heat")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*cycle) {
      emit(eqhe::sweep::cycle_report(cycle_spec), "");
    } else if (*fig12) {
      std::ostringstream out;
      eqhe::sweep::write_fig12(out, fig12_config);
      emit(out.str(), fig12_out);
    } else if (*fig3) {
      std::ostringstream out;
      eqhe::sweep::write_fig3(out, fig3_config);
      emit(out.str(), fig3_out);
    } else if (*region) {
      const auto axes = region_param == "jd" ? eqhe::sweep::RegionAxes::kGapTemperature
                                             : eqhe::sweep::RegionAxes::kConcurrence;
      eqhe::sweep::RegionConfig config = eqhe::sweep::default_region(axes);
      config.x_min = x_min.value_or(config.x_min);
      config.x_max = x_max.value_or(config.x_max);
      config.y_min = y_min.value_or(config.y_min);
      config.y_max = y_max.value_or(config.y_max);
      config.steps = region_steps.value_or(config.steps);
      config.j1 = region_j1.value_or(config.j1);
      config.d1 = region_d1.value_or(config.d1);
      config.d2 = region_d2.value_or(config.d2);
      config.th = region_th.value_or(config.th);
      config.tl = region_tl.value_or(config.tl);
      std::ostringstream out;
      eqhe::sweep::write_region(out, config);
      emit(out.str(), region_out);
    } else if (*verify) {
      const auto report = eqhe::verify::run_all(verify_config);
      emit(eqhe::verify::format_report(report, verify_config), verify_out);
      if (!report.passed()) return kExitVerification;
    }
  } catch (const eqhe::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
