/*
Copyright 2026 The denovo Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "denovo/chem.hpp"

namespace denovo {

struct Peak {
  double mz = 0.0;
  double intensity = 0.0;
  int rank = 0;  // 1 = most intense, 0 = not normalized yet
};

struct Spectrum {
  std::string id;
  std::vector<Peak> peaks;  // ascending m/z
  ParentMass parent;
  int precursor_charge = 1;
};

inline constexpr int kDefaultMaxRank = 10;

/// Parses MGF text. The precursor m/z and charge z become the neutral mass
/// z * (PEPMASS - proton). CHARGE defaults to 1 when absent.
std::vector<Spectrum> parse_mgf(std::string_view text);
std::vector<Spectrum> load_mgf(const std::string& path);

/// Peak lines are written as `%.4f %.4f`.
std::string write_mgf(std::span<const Spectrum> spectra);

/// Ranks peaks by descending intensity (ties: ascending m/z). Peaks beyond
/// `max_rank` share rank max_rank + 1.
Spectrum rank_normalize(Spectrum spectrum, int max_rank = kDefaultMaxRank);

/// Most intense peak within [mz - tol, mz + tol].
std::optional<std::size_t> find_peak_index(const Spectrum& spectrum, double mz, double tol);
std::optional<Peak> find_peak(const Spectrum& spectrum, double mz, double tol);

}  // namespace denovo
