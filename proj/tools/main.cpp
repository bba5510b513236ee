// nklab: numerical laboratory for the homogeneous nearly Kahler structures
// on S^6 and S^3 x S^3, their hypersurface structure equations, and the
// pointwise obstruction systems for anticommuting shape operators.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nklab/catalog.hpp"
#include "nklab/obstructions.hpp"
#include "nklab/report.hpp"
#include "nklab/suites.hpp"

namespace {

using nk::rep::RunConfig;

// --config file: JSON object whose keys mirror the long flags; command-line
// flags override file values.
void apply_config_file(CLI::App* sub, RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", std::string("bad JSON: ") + e.what());
  }
  auto take = [&](const char* key, auto& slot, const char* flag) {
    if (j.contains(key) && sub->count(flag) == 0)
      slot = j.at(key).get<std::decay_t<decltype(slot)>>();
  };
  take("ambient", cfg.ambient, "--ambient");
  take("name", cfg.name, "--name");
  take("case", cfg.case_id, "--case");
  take("samples", cfg.samples, "--samples");
  take("seed", cfg.seed, "--seed");
  take("fd_step", cfg.fd_step, "--fd-step");
  take("fd_step2", cfg.fd_step2, "--fd-step2");
  take("tol", cfg.tol_scale, "--tol");
  take("grid", cfg.grid, "--grid");
  take("refine", cfg.refine, "--refine");
  take("out", cfg.out_path, "--out");
}

void scale_thresholds(std::vector<nk::suites::CheckRecord>& checks, double tol_scale) {
  if (tol_scale == 1.0) return;
  for (auto& c : checks) {
    if (c.kind != nk::suites::CheckKind::MaxLe) continue;
    c.threshold *= tol_scale;
    c.pass = c.max <= c.threshold;
  }
}

int emit(const RunConfig& cfg, const std::vector<nk::suites::CheckRecord>& checks,
         const std::vector<nk::suites::SurfaceSample>* samples,
         const nk::obs::Report* obstruction, double wall_time_s) {
  const bool pass = nk::suites::all_pass(checks);
  const std::string json =
      nk::rep::render_report(cfg, checks, samples, obstruction, pass, wall_time_s);
  if (cfg.out_path.empty()) {
    std::fputs(json.c_str(), stdout);
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", cfg.out_path.c_str());
      return 2;
    }
    out << json;
  }
  for (const auto& c : checks)
    std::fprintf(stderr, "%s  %-36s max=%.3g min=%.3g thr=%.3g\n",
                 c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max, c.min, c.threshold);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for nearly Kahler hypersurface structure"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--fd-step", cfg.fd_step, "first-order finite-difference step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--fd-step2", cfg.fd_step2, "nested finite-difference step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol_scale, "scale residual tolerances")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid", cfg.grid, "scan resolution per dimension")
        ->check(CLI::PositiveNumber);
    sub->add_option("--refine", cfg.refine, "scan refinement steps")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out_path, "write the JSON report here");
    sub->add_option("--config", config_path, "JSON config file mirroring the flags");
  };

  CLI::App* identities =
      app.add_subcommand("identities", "ambient structure identity suite");
  identities->add_option("--ambient", cfg.ambient, "s3s3 | s6")
      ->check(CLI::IsMember({"s3s3", "s6"}));
  add_common(identities);

  CLI::App* surface =
      app.add_subcommand("surface", "hypersurface analysis of a catalog immersion");
  surface->add_option("--name", cfg.name, "f1 | f2 | f3 | equator | sphere:<r>");
  add_common(surface);

  CLI::App* obstruction =
      app.add_subcommand("obstruction", "pointwise obstruction case analysis");
  obstruction->add_option("--case", cfg.case_id,
                          "s6-nu3 | s6-nu2 | case1 | case2 | case3i | case3ii | "
                          "case3iii | case4 | dim2");
  add_common(obstruction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!config_path.empty()) apply_config_file(sub, cfg, config_path);

    const nk::FdSteps steps{cfg.fd_step, cfg.fd_step2};
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    if (sub == identities) {
      cfg.command = "identities";
      cfg.name.clear();
      cfg.case_id.clear();
      auto checks = cfg.ambient == "s6"
                        ? nk::suites::s6_identities(cfg.samples, cfg.seed, steps)
                        : nk::suites::s3s3_identities(cfg.samples, cfg.seed, steps);
      scale_thresholds(checks, cfg.tol_scale);
      return emit(cfg, checks, nullptr, nullptr, elapsed());
    }
    if (sub == surface) {
      cfg.command = "surface";
      cfg.case_id.clear();
      if (cfg.name.empty()) throw std::invalid_argument("surface: --name is required");
      const nk::cat::Entry entry = nk::cat::by_name(cfg.name);
      cfg.ambient = entry.immersion.ambient->has_product_structure() ? "s3s3" : "s6";
      auto suite = nk::suites::surface_suite(entry, cfg.samples, cfg.seed, steps);
      scale_thresholds(suite.checks, cfg.tol_scale);
      return emit(cfg, suite.checks, &suite.samples, nullptr, elapsed());
    }
    cfg.command = "obstruction";
    cfg.ambient.clear();
    cfg.name.clear();
    if (cfg.case_id.empty())
      throw std::invalid_argument("obstruction: --case is required");
    auto suite = nk::suites::obstruction_suite(cfg.case_id, cfg.grid, cfg.refine);
    return emit(cfg, suite.checks, nullptr, &suite.report, elapsed());
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
