// Copyright 2026 The SwissCheese Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: every subcommand reads and writes the JSON formats
// of swisscheese/io.h. Exit codes: 0 success, 2 validation error,
// 3 contract or verification failure, 4 I/O error.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "swisscheese/cheese.h"
#include "swisscheese/constructions.h"
#include "swisscheese/error.h"
#include "swisscheese/io.h"
#include "swisscheese/transforms.h"

namespace {

using nlohmann::json;
using namespace swisscheese;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitContract = 3;
constexpr int kExitIo = 4;

int ReportError(std::string_view code, const std::string& message, int exit) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
  return exit;
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return ReadFile(path);
}

void WriteOutput(const std::string& path, std::string_view contents) {
  if (path == "-") {
    std::cout << contents;
    std::cout.flush();
    if (!std::cout) throw CheeseError(ErrorCode::kIo, "cannot write stdout");
    return;
  }
  WriteFile(path, contents);
}

double DefaultTolerance() {
  const char* env = std::getenv("SWISSCHEESE_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol >= 0.0) || !std::isfinite(tol)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "SWISSCHEESE_TOL must be a non-negative decimal");
  }
  return tol;
}

void WriteTrace(const std::optional<std::string>& path,
                const TransformTrace& trace) {
  if (path) WriteOutput(*path, ToJson(trace).dump(2) + "\n");
}

struct Args {
  std::string input = "-";
  std::string output = "-";
  std::optional<std::string> trace;
  std::optional<std::string> regions;
  std::optional<std::string> report;
  std::optional<double> tolerance;
  bool annular = false;
  bool labels = false;
  bool with_disks = true;
  double C = 1.0;
  int levels = 4;
  std::string filler = "rings";
  int ring_count = 8;
  double wermer_m = 0.01;
  double epsilon = 0.1;
  double M = 1.0;
  std::int64_t n_max = std::int64_t{1} << 14;
  int samples = 10000;
  std::int64_t area_samples = 1000000;
  std::uint64_t seed = 1;
  int width = 512;
  double margin = 0.05;
  std::string fixture;
};

int Run(int argc, char** argv) {
  CLI::App app{"Construct, verify and transform abstract Swiss cheeses"};
  app.require_subcommand(1);
  Args a;

  auto* check = app.add_subcommand("check", "Report predicates and functionals");
  check->add_option("input", a.input, "Cheese JSON ('-' for stdin)");
  check->add_option("--tolerance", a.tolerance, "Predicate tolerance");

  auto* reduce = app.add_subcommand("reduce", "Remove redundant holes");
  auto* semi = app.add_subcommand("semiclassicalise", "Semiclassicalise");
  auto* classic = app.add_subcommand("classicalise", "Classicalise");
  for (auto* sub : {reduce, semi, classic}) {
    sub->add_option("input", a.input, "Cheese JSON ('-' for stdin)");
    sub->add_option("-o,--output", a.output, "Output cheese JSON");
    sub->add_option("--trace", a.trace, "Write the step trace here");
  }
  classic->add_flag("--annular", a.annular, "Concentric annular variant");
  auto* regions_opt =
      classic->add_option("--regions", a.regions, "Region pairs JSON");
  classic->get_option("--annular")->excludes(regions_opt);

  auto* morris = app.add_subcommand("morris", "Assemble the Morris cheese");
  morris->add_option("--C", a.C, "Weighted-sum bound")->required();
  morris->add_option("--levels", a.levels, "Number of levels")->required();
  morris->add_option("--filler", a.filler, "rings or wermer")
      ->check(CLI::IsMember({"rings", "wermer"}));
  morris->add_option("--ring-count", a.ring_count, "Disks per ring filler");
  morris->add_option("--wermer-M", a.wermer_m, "M for the wermer filler");
  morris->add_option("-o,--output", a.output, "Output cheese JSON");
  morris->add_option("--report", a.report, "Write the Morris report here");
  morris->add_option("--regions-out", a.regions, "Write the region pairs here");
  morris->add_option("--trace", a.trace, "Write the classicalisation trace");

  auto* wermer = app.add_subcommand("wermer", "Wermer grid refinement");
  wermer->add_option("input", a.input, "Classical cheese JSON");
  wermer->add_option("--epsilon", a.epsilon, "Grid disk scale")->required();
  wermer->add_option("--M", a.M, "Target lower bound")->required();
  wermer->add_option("-o,--output", a.output, "Output JSON");
  wermer->add_option("--n-max", a.n_max, "Largest grid size tried");
  wermer->add_option("--samples", a.samples, "Verification samples");
  wermer->add_option("--seed", a.seed, "Sampling seed");
  wermer->add_flag("!--no-disks", a.with_disks, "Omit the grid disks");

  auto* area = app.add_subcommand("area", "Monte-Carlo area estimate");
  area->add_option("input", a.input, "Cheese JSON");
  area->add_option("--samples", a.area_samples, "Sample count");
  area->add_option("--seed", a.seed, "Seed");

  auto* render = app.add_subcommand("render", "Render as SVG");
  render->add_option("input", a.input, "Cheese JSON");
  render->add_option("-o,--output", a.output, "Output SVG");
  render->add_option("--width", a.width, "Width in pixels");
  render->add_option("--margin", a.margin, "Margin fraction");
  render->add_flag("--labels", a.labels, "Label holes with their index");

  auto* fixture = app.add_subcommand("fixture", "Write a named fixture");
  fixture->add_option("name", a.fixture, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"figure1"}));
  fixture->add_option("-o,--output", a.output, "Output cheese JSON");

  try {
    // CLI11 accepts "--o" only as a long option name; map it to "-o".
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
      std::string s = argv[i];
      if (s == "--o") s = "-o";
      args.push_back(std::move(s));
    }
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return ReportError("usage", e.what(), kExitValidation);
  }

  const double tol = a.tolerance.value_or(DefaultTolerance());

  if (*check) {
    const AbstractSwissCheese cheese = LoadCheese(ReadInput(a.input));
    const CheeseReport report = Report(cheese, tol);
    std::cout << ToJson(report).dump(2) << '\n';
    return report.classical ? kExitOk : kExitContract;
  }
  if (*reduce || *semi || *classic) {
    const AbstractSwissCheese cheese = LoadCheese(ReadInput(a.input));
    if (*classic && a.regions) {
      const auto regions = LoadRegions(ReadInput(*a.regions));
      const ControlledResult r = ClassicaliseControlled(cheese, regions, tol);
      WriteOutput(a.output, SaveCheese(r.cheese));
      WriteTrace(a.trace, r.trace);
      return kExitOk;
    }
    const TransformResult r = *reduce   ? ReduceRedundancy(cheese)
                              : *semi   ? Semiclassicalise(cheese)
                              : a.annular ? ClassicaliseAnnular(cheese, tol)
                                          : Classicalise(cheese);
    WriteOutput(a.output, SaveCheese(r.cheese));
    WriteTrace(a.trace, r.trace);
    return kExitOk;
  }
  if (*morris) {
    Filler filler;
    if (a.filler == "rings") {
      filler = MakeRingFiller(a.ring_count);
    } else {
      WermerParams base;
      base.n_max = 4096;
      base.sample_count = 2000;
      filler = MakeWermerFiller({a.wermer_m}, base);
    }
    const MorrisResult r = MorrisAssemble(a.C, a.levels, filler);
    WriteOutput(a.output, SaveCheese(r.cheese));
    if (a.report) WriteOutput(*a.report, ToJson(r.report).dump(2) + "\n");
    if (a.regions) WriteOutput(*a.regions, SaveRegions(r.regions));
    WriteTrace(a.trace, r.trace);
    return r.report.within_bound && r.report.final_classical ? kExitOk
                                                             : kExitContract;
  }
  if (*wermer) {
    const AbstractSwissCheese cheese = LoadCheese(ReadInput(a.input));
    WermerParams params;
    params.epsilon = a.epsilon;
    params.M = a.M;
    params.n_max = a.n_max;
    params.sample_count = a.samples;
    params.seed = a.seed;
    const WermerResult r = WermerRefine(cheese, params);
    WriteOutput(a.output, ToJson(r, a.with_disks).dump() + "\n");
    return kExitOk;
  }
  if (*area) {
    const AbstractSwissCheese cheese = LoadCheese(ReadInput(a.input));
    const AreaEstimate est = EstimateArea(cheese, a.area_samples, a.seed);
    std::cout << json{{"estimate", est.estimate},
                      {"half_width", est.half_width},
                      {"samples", a.area_samples},
                      {"seed", a.seed}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  if (*render) {
    const AbstractSwissCheese cheese = LoadCheese(ReadInput(a.input));
    RenderOptions opts;
    opts.width_px = a.width;
    opts.margin_fraction = a.margin;
    opts.show_indices = a.labels;
    WriteOutput(a.output, RenderSvg(cheese, opts));
    return kExitOk;
  }
  if (*fixture) {
    WriteOutput(a.output, SaveCheese(Figure1Cheese()));
    return kExitOk;
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const swisscheese::CheeseError& e) {
    int exit = kExitValidation;
    switch (swisscheese::ClassOf(e.code())) {
      case swisscheese::ErrorClass::kValidation:
        exit = kExitValidation;
        break;
      case swisscheese::ErrorClass::kContract:
        exit = kExitContract;
        break;
      case swisscheese::ErrorClass::kIo:
        exit = kExitIo;
        break;
    }
    return ReportError(swisscheese::ErrorCodeName(e.code()), e.what(), exit);
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), kExitContract);
  }
}
