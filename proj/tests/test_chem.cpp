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

#include <random>
#include <sstream>

#include "doctest.h"
#include "denovo/chem.hpp"
#include "denovo/errors.hpp"

using namespace denovo;

namespace {
// Atomic monoisotopic masses, used as an independent check on the residue table.
constexpr double kC = 12.0, kH = 1.00782503, kN = 14.0030740, kO = 15.9949146;
}

TEST_CASE("residue masses") {
  CHECK(std::abs(residue_mass('V') - 99.0) <= 0.5);
  const double glycine = 2 * kC + 3 * kH + kN + kO;  // C2H3NO
  CHECK(std::abs(residue_mass('G') - glycine) < 1e-4);
  CHECK(std::abs(residue_mass('G') - 57.02146) < 1e-9);
  CHECK(residue_mass('L') == residue_mass('I'));
  CHECK(std::abs(residue_mass('Q') - residue_mass('K')) < 0.05);
  CHECK(standard_residues().size() == 20);
  for (const auto& r : standard_residues()) CHECK(r.mono_mass > 0.0);
  CHECK(distinct_mass_residues().size() == 19);
  CHECK_THROWS_AS(residue_mass('X'), UnknownResidue);
  CHECK_THROWS_AS(residue_mass('b'), UnknownResidue);
}

TEST_CASE("peptide residual mass") {
  CHECK(peptide_residual_mass("") == 0.0);
  CHECK(std::abs(peptide_residual_mass("VEALR") - 568.0) <= 0.5);
  const double glycine = 2 * kC + 3 * kH + kN + kO;
  CHECK(std::abs(peptide_residual_mass("GG") - 2 * glycine) < 1e-4);
  CHECK(std::abs(peptide_residual_mass("GG") - 114.04293) < 1e-4);
  CHECK_THROWS_AS(peptide_residual_mass("VEJLR"), UnknownResidue);

  const auto prms = prefix_masses("VEALR");
  REQUIRE(prms.size() == 4);
  const double expected[] = {99, 228, 299, 412};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(prms[i] - expected[i]) <= 0.5);
}

TEST_CASE("node masses for a peak") {
  const auto parent = ParentMass::from_residual(568.0);
  const auto by = default_ion_types();

  auto b_only = node_masses_for_peak(100.0, parent, std::span(by).first(1));
  REQUIRE(b_only.kept.size() == 1);
  CHECK(std::abs(b_only.kept[0].prm - 99.0) <= 0.5);

  // The C-terminal rule is residual - (m - delta). With the real y offset
  // (water + proton) a 342 peak stands for prm 245; the schematic VEALR
  // numbers correspond to a +2 offset.
  auto y_real = node_masses_for_peak(342.0, parent, std::span(by).subspan(1));
  REQUIRE(y_real.kept.size() == 1);
  CHECK(y_real.kept[0].prm == doctest::Approx(568.0 - (342.0 - 19.01788)));
  const IonType y_schematic{"y", Terminus::C, 2.0, 1};
  auto y_fig = node_masses_for_peak(342.0, parent, std::span(&y_schematic, 1));
  REQUIRE(y_fig.kept.size() == 1);
  CHECK(std::abs(y_fig.kept[0].prm - 228.0) <= 0.5);

  // boundary: b keeps prm ~4; the real y interpretation falls past the
  // residual and is dropped; a +1 C-terminal offset gives 564.
  auto low = node_masses_for_peak(5.0, parent, by);
  REQUIRE(low.kept.size() == 1);
  CHECK(std::abs(low.kept[0].prm - 4.0) <= 0.5);
  CHECK(low.dropped == 1);
  const IonType c_plus_one{"y1", Terminus::C, 1.0, 1};
  auto low_c = node_masses_for_peak(5.0, parent, std::span(&c_plus_one, 1));
  REQUIRE(low_c.kept.size() == 1);
  CHECK(low_c.kept[0].prm == doctest::Approx(564.0));

  CHECK(node_masses_for_peak(300.0, parent, {}).kept.empty());
}

TEST_CASE("doubly charged interpretation inverts ion_mz") {
  const auto parent = ParentMass::from_residual(1200.0);
  for (const auto& ion : witness_ion_types()) {
    const double prm = 433.21;
    const double mz = ion_mz(ion, prm, parent.residual);
    auto interp = node_masses_for_peak(mz, parent, std::span(&ion, 1));
    REQUIRE(interp.kept.size() == 1);
    CHECK(interp.kept[0].prm == doctest::Approx(prm).epsilon(1e-12));
  }
}

TEST_CASE("complementary b/y peaks give prefix + suffix = residual") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> residual_dist(300.0, 2500.0), frac(0.05, 0.95);
  const auto b = b_ion(), y = y_ion();
  for (int i = 0; i < 500; ++i) {
    const auto parent = ParentMass::from_residual(residual_dist(rng));
    const double prm = frac(rng) * parent.residual;
    const double b_peak = ion_mz(b, prm, parent.residual);
    const double y_peak = ion_mz(y, prm, parent.residual);
    const double prefix = node_masses_for_peak(b_peak, parent, std::span(&b, 1)).kept.at(0).prm;
    const double from_y = node_masses_for_peak(y_peak, parent, std::span(&y, 1)).kept.at(0).prm;
    const double suffix = parent.residual - from_y;
    CHECK(prefix + suffix == doctest::Approx(parent.residual).epsilon(1e-12));
  }
}

TEST_CASE("ion type file") {
  std::istringstream in("# comment\nb N 1.0 1\n\ny C 19.018 1  # trailing\nb2 N 1.00728 2\n");
  auto ions = parse_ion_types(in);
  REQUIRE(ions.size() == 3);
  CHECK(ions[0] == IonType{"b", Terminus::N, 1.0, 1});
  CHECK(ions[1].terminus == Terminus::C);
  CHECK(ions[2].charge == 2);

  std::ostringstream out;
  write_ion_types(out, ions);
  std::istringstream back(out.str());
  CHECK(parse_ion_types(back) == ions);

  std::istringstream bad_terminus("b X 1.0 1\n");
  CHECK_THROWS_AS(parse_ion_types(bad_terminus), ParseError);
  std::istringstream bad_charge("b N 1.0 0\n");
  CHECK_THROWS_AS(parse_ion_types(bad_charge), ParseError);
  std::istringstream short_line("b N\n");
  try {
    parse_ion_types(short_line);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }
}
