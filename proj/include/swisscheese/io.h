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

#ifndef SWISSCHEESE_IO_H_
#define SWISSCHEESE_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "swisscheese/cheese.h"
#include "swisscheese/constructions.h"
#include "swisscheese/transforms.h"

namespace swisscheese {

inline constexpr int kFormatVersion = 1;

// Cheese document:
//   {"format_version": 1, "name": "...", "outer": {"cx", "cy", "r"},
//    "holes": [{"cx", "cy", "r"}, ...]}
// Numbers are written with 17 significant digits so that loading reproduces
// every coordinate bit-exactly. Unknown fields are rejected.
std::string SaveCheese(const AbstractSwissCheese& a);
AbstractSwissCheese LoadCheese(std::string_view text);

std::vector<RegionPair> LoadRegions(std::string_view text);
std::string SaveRegions(std::span<const RegionPair> regions);

nlohmann::json ToJson(const CheeseReport& report);
nlohmann::json ToJson(const TransformTrace& trace);
nlohmann::json ToJson(const AdmissibilityReport& report);
nlohmann::json ToJson(const ControlReport& report);
nlohmann::json ToJson(const MorrisReport& report);
// Summary of a refinement; grid disks go under "grid_disks" when requested.
nlohmann::json ToJson(const WermerResult& result, bool with_disks);

// Throws kSchemaViolation when `trace` does not match the trace schema, and
// kControlContractFailed when its discrepancy chain decreases by more than
// `slack` or does not chain between steps.
void ValidateTraceJson(const nlohmann::json& trace, double slack = 1e-12);

struct RenderOptions {
  int width_px = 512;
  double margin_fraction = 0.05;
  bool show_indices = false;
  double stroke_width = 1.0;

  void Validate() const;
};

std::string RenderSvg(const AbstractSwissCheese& a,
                      const RenderOptions& opts = {});

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace swisscheese

#endif  // SWISSCHEESE_IO_H_
