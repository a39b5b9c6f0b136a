// Copyright 2026 The glzi Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Minimal SVG renderings of scan output. Data files are the contract; these
// are for a quick look.
namespace glzi::svg {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> error;  // optional symmetric error bars
  bool dashed = false;
};

void write_line_plot(const std::filesystem::path& path, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<Series>& series);

/// values[i * ys.size() + j] is the value at (xs[i], ys[j]).
void write_heatmap(const std::filesystem::path& path, const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& values);

}  // namespace glzi::svg
