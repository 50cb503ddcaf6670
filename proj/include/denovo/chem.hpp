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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace denovo {

inline constexpr double kWaterMass = 18.0106;
inline constexpr double kProtonMass = 1.00728;
inline constexpr double kAmmoniaMass = 17.02655;
inline constexpr double kCarbonMonoxideMass = 27.99491;

struct Residue {
  char symbol;
  double mono_mass;
};

enum class Terminus { N, C };

// Fragment ion type. `delta` is the offset of the singly charged ion from the
// prefix (N) or suffix (C) residue mass.
struct IonType {
  std::string name;
  Terminus terminus = Terminus::N;
  double delta = 0.0;
  int charge = 1;

  friend bool operator==(const IonType&, const IonType&) = default;
};

struct ParentMass {
  double total = 0.0;     // neutral peptide mass
  double residual = 0.0;  // total minus one water

  static ParentMass from_total(double total, double water = kWaterMass) {
    return {total, total - water};
  }
  static ParentMass from_residual(double residual, double water = kWaterMass) {
    return {residual + water, residual};
  }
};

/// The 20 standard residues with monoisotopic masses.
std::span<const Residue> standard_residues();

/// Residues with pairwise distinct masses (I folded into L). Used wherever a
/// mass has to be explained by residues, since I and L are indistinguishable.
std::span<const Residue> distinct_mass_residues();

double residue_mass(char symbol);
double peptide_residual_mass(std::string_view sequence);

/// Prefix residue masses at the L-1 cleavage sites of `sequence`.
std::vector<double> prefix_masses(std::string_view sequence);

IonType b_ion();
IonType y_ion();
/// Singly charged b and y, the graph construction default.
std::vector<IonType> default_ion_types();
/// b, y, a, their neutral losses and doubly charged b/y: the witness set the
/// scoring model may select from.
std::vector<IonType> witness_ion_types();

/// m/z at which `ion` is observed for a cleavage with prefix residue mass `prm`.
double ion_mz(const IonType& ion, double prm, double residual);

struct PeakInterpretation {
  double prm;
  std::size_t ion_index;  // index into the ion type list
};

struct PeakInterpretations {
  std::vector<PeakInterpretation> kept;
  std::size_t dropped = 0;  // interpretations outside (0, residual)
};

/// Every prefix residue mass a peak at `peak_mz` can stand for, one per ion type.
PeakInterpretations node_masses_for_peak(double peak_mz, const ParentMass& parent,
                                         std::span<const IonType> ion_types);

/// Ion type file: one `name terminus delta charge` per line, '#' comments.
std::vector<IonType> parse_ion_types(std::istream& in);
std::vector<IonType> load_ion_types(const std::string& path);
void write_ion_types(std::ostream& out, std::span<const IonType> ion_types);

}  // namespace denovo
