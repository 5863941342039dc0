// Copyright 2026 The Subaspect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBASPECT_REPORT_H_
#define SUBASPECT_REPORT_H_

#include <map>
#include <string>

#include "subaspect/analysis.h"

namespace subaspect {

// Percentage with one decimal, rounded half up: 0.3075 -> "30.8".
std::string FormatPercent(double fraction);

// Renders every report file into memory, keyed by path relative to the
// output directory: report.csv, triangle.json, venn.json,
// hist_{position,diversity,importance}.csv, novelty.csv, system_bias.csv,
// pca_coords.csv and charts/*.svg. Files whose data is absent are omitted.
std::map<std::string, std::string> RenderReport(const BiasReport& report);

// Writes RenderReport output under outdir, creating directories.
void WriteReport(const BiasReport& report, const std::string& outdir);

}  // namespace subaspect

#endif  // SUBASPECT_REPORT_H_
