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

#include "denovo/chem.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "denovo/errors.hpp"

namespace denovo {

namespace {

constexpr std::array<Residue, 20> kResidues = {{
    {'G', 57.02146},  {'A', 71.03711},  {'S', 87.03203},  {'P', 97.05276},
    {'V', 99.06841},  {'T', 101.04768}, {'C', 103.00919}, {'L', 113.08406},
    {'I', 113.08406}, {'N', 114.04293}, {'D', 115.02694}, {'Q', 128.05858},
    {'K', 128.09496}, {'E', 129.04259}, {'M', 131.04049}, {'H', 137.05891},
    {'F', 147.06841}, {'R', 156.10111}, {'Y', 163.06333}, {'W', 186.07931},
}};

constexpr std::array<Residue, 19> kDistinct = [] {
  std::array<Residue, 19> out{};
  std::size_t n = 0;
  for (const auto& r : kResidues) {
    if (r.symbol != 'I') out[n++] = r;
  }
  return out;
}();

}  // namespace

std::span<const Residue> standard_residues() { return kResidues; }
std::span<const Residue> distinct_mass_residues() { return kDistinct; }

double residue_mass(char symbol) {
  for (const auto& r : kResidues) {
    if (r.symbol == symbol) return r.mono_mass;
  }
  throw UnknownResidue(symbol);
}

double peptide_residual_mass(std::string_view sequence) {
  double sum = 0.0;
  for (char c : sequence) sum += residue_mass(c);
  return sum;
}

std::vector<double> prefix_masses(std::string_view sequence) {
  std::vector<double> out;
  if (sequence.size() < 2) return out;
  out.reserve(sequence.size() - 1);
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    m += residue_mass(sequence[i]);
    out.push_back(m);
  }
  return out;
}

IonType b_ion() { return {"b", Terminus::N, kProtonMass, 1}; }
IonType y_ion() { return {"y", Terminus::C, kWaterMass + kProtonMass, 1}; }

std::vector<IonType> default_ion_types() { return {b_ion(), y_ion()}; }

std::vector<IonType> witness_ion_types() {
  const double b = kProtonMass;
  const double y = kWaterMass + kProtonMass;
  return {
      {"b", Terminus::N, b, 1},
      {"y", Terminus::C, y, 1},
      {"a", Terminus::N, b - kCarbonMonoxideMass, 1},
      {"b-H2O", Terminus::N, b - kWaterMass, 1},
      {"b-NH3", Terminus::N, b - kAmmoniaMass, 1},
      {"y-H2O", Terminus::C, y - kWaterMass, 1},
      {"y-NH3", Terminus::C, y - kAmmoniaMass, 1},
      {"b2+", Terminus::N, b, 2},
      {"y2+", Terminus::C, y, 2},
  };
}

double ion_mz(const IonType& ion, double prm, double residual) {
  const double fragment = ion.terminus == Terminus::N ? prm : residual - prm;
  const double singly = fragment + ion.delta;
  return (singly - kProtonMass) / ion.charge + kProtonMass;
}

PeakInterpretations node_masses_for_peak(double peak_mz, const ParentMass& parent,
                                         std::span<const IonType> ion_types) {
  PeakInterpretations out;
  for (std::size_t i = 0; i < ion_types.size(); ++i) {
    const auto& ion = ion_types[i];
    const double singly = ion.charge * (peak_mz - kProtonMass) + kProtonMass;
    const double fragment = singly - ion.delta;
    const double prm = ion.terminus == Terminus::N ? fragment : parent.residual - fragment;
    if (prm > 0.0 && prm < parent.residual) {
      out.kept.push_back({prm, i});
    } else {
      ++out.dropped;
    }
  }
  return out;
}

std::vector<IonType> parse_ion_types(std::istream& in) {
  std::vector<IonType> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    IonType ion;
    std::string terminus;
    if (!(ss >> ion.name)) continue;
    if (!(ss >> terminus >> ion.delta >> ion.charge)) {
      throw ParseError(lineno, "expected `name terminus delta charge`");
    }
    if (terminus == "N") {
      ion.terminus = Terminus::N;
    } else if (terminus == "C") {
      ion.terminus = Terminus::C;
    } else {
      throw ParseError(lineno, "terminus must be N or C");
    }
    if (ion.charge < 1) throw ParseError(lineno, "charge must be >= 1");
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing field '" + extra + "'");
    out.push_back(std::move(ion));
  }
  return out;
}

std::vector<IonType> load_ion_types(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ion type file " + path);
  return parse_ion_types(in);
}

void write_ion_types(std::ostream& out, std::span<const IonType> ion_types) {
  for (const auto& ion : ion_types) {
    out << ion.name << ' ' << (ion.terminus == Terminus::N ? 'N' : 'C') << ' '
        << std::setprecision(10) << ion.delta << ' ' << ion.charge << '\n';
  }
}

}  // namespace denovo
