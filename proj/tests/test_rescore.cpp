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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "denovo/eval.hpp"
#include "denovo/kpaths.hpp"
#include "denovo/rescore.hpp"

using namespace denovo;

namespace {

// All ordered residue strings of length n within tol of mass, by plain nesting.
std::set<std::string> brute_force_combinations(double mass, int n, double tol) {
  std::set<std::string> out;
  const auto alphabet = distinct_mass_residues();
  std::vector<std::string> partial{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& p : partial) {
      for (const auto& r : alphabet) next.push_back(p + r.symbol);
    }
    partial = std::move(next);
  }
  for (const auto& p : partial) {
    if (std::abs(peptide_residual_mass(p) - mass) <= tol) out.insert(p);
  }
  return out;
}

PsmParams only(std::vector<IonType> ions) {
  PsmParams p = PsmParams::defaults();
  p.ions.clear();
  for (auto& ion : ions) p.ions.push_back({std::move(ion), 1.0});
  return p;
}

Spectrum empty_spectrum(std::string_view peptide) {
  Spectrum s;
  s.parent = ParentMass::from_residual(peptide_residual_mass(peptide));
  return s;
}

}  // namespace

TEST_CASE("residue_combinations against brute force") {
  const auto gg = residue_combinations(114.04293, 2, 0.5);
  CHECK(std::find(gg.begin(), gg.end(), "GG") != gg.end());
  CHECK(std::set<std::string>(gg.begin(), gg.end()) == brute_force_combinations(114.04293, 2, 0.5));
  for (const auto& s : gg) CHECK(s.size() == 2);

  const auto ga = residue_combinations(residue_mass('G') + residue_mass('A'), 2, 0.01);
  CHECK(ga == std::vector<std::string>{"AG", "GA"});

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> mass(150.0, 400.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double m = mass(rng);
    const int n = 2 + trial % 2;
    const auto got = residue_combinations(m, n, 0.5);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::set<std::string>(got.begin(), got.end()) == brute_force_combinations(m, n, 0.5));
  }
}

TEST_CASE("expand_superset") {
  // VEALR with the peaks of the 412 cleavage removed: the path ends in a 2-mer
  const auto full = synth_spectrum("VEALR", default_ion_types(), {}, 1);
  SUBCASE("no multi-residue edges") {
    const auto g = build_graph(full, default_ion_types());
    const auto paths = k_best_antisymmetric(g, 1);
    REQUIRE(paths.size() == 1);
    const auto set = expand_superset(g, paths);
    REQUIRE(set.candidates.size() == 1);
    CHECK(set.candidates[0].sequence == paths[0].labels);
    CHECK(set.candidates[0].sequence == "VEALR");
  }
  SUBCASE("a 2-mer edge") {
    Spectrum s = full;
    const double b4 = ion_mz(b_ion(), peptide_residual_mass("VEAL"), s.parent.residual);
    const double y1 = ion_mz(y_ion(), peptide_residual_mass("VEAL"), s.parent.residual);
    std::erase_if(s.peaks, [&](const Peak& p) {
      return std::abs(p.mz - b4) < 0.01 || std::abs(p.mz - y1) < 0.01;
    });
    const auto g = build_graph(s, default_ion_types());
    const auto paths = k_best_antisymmetric(g, 1);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].labels == "VEA[LR]");
    const auto set = expand_superset(g, paths);
    std::set<std::string> seqs;
    for (const auto& c : set.candidates) seqs.insert(c.sequence);
    CHECK(seqs.count("VEALR") == 1);
    CHECK(seqs.count("VEARL") == 1);
    CHECK(set.truncated_paths == 0);
    for (const auto& c : set.candidates) {
      CHECK(std::abs(peptide_residual_mass(c.sequence) - s.parent.residual) <= 1.0);
    }

    const auto capped = expand_superset(g, paths, 1);
    CHECK(capped.candidates.size() == 1);
    CHECK(capped.truncated_paths == 1);
  }
}

TEST_CASE("parent_mass_filter") {
  const auto parent = ParentMass::from_residual(peptide_residual_mass("VEALR"));
  std::vector<Candidate> c{{"VEALR"}, {"VEALK"}, {"GGGG"}};
  // VEALK is 28.0 Da lighter than VEALR
  CHECK(parent_mass_filter(c, parent).size() == 1);
  CHECK(parent_mass_filter(c, parent, 30.0).size() == 2);
  CHECK(parent_mass_filter({}, parent).empty());

  const auto off = ParentMass::from_residual(peptide_residual_mass("VEALR") + 3.0);
  CHECK(parent_mass_filter(c, off).empty());

  std::mt19937_64 rng(6);
  std::vector<Candidate> many;
  const std::string alphabet = "ACDEFGHKLMNPQRSTVWY";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int j = 0; j < 5; ++j) s += alphabet[rng() % alphabet.size()];
    many.push_back({s});
  }
  for (const auto& kept : parent_mass_filter(many, parent)) {
    CHECK(std::abs(peptide_residual_mass(kept.sequence) - parent.residual) <= 2.5);
  }
}

TEST_CASE("classify_peak") {
  Spectrum s;
  s.peaks = {{50.0, 1, 0}, {100.0, 10, 0}, {101.0, 5, 0}, {200.0, 3, 0}, {200.5, 2, 0}};
  CHECK(classify_peak(s, 1, 1) == IsotopeClass::primary);
  CHECK(classify_peak(s, 2, 1) == IsotopeClass::secondary);
  CHECK(classify_peak(s, 0, 1) == IsotopeClass::lone);
  CHECK(classify_peak(s, 3, 2) == IsotopeClass::primary);
  CHECK(classify_peak(s, 3, 1) == IsotopeClass::lone);
  CHECK(classify_peak(s, 4, 2) == IsotopeClass::secondary);
}

TEST_CASE("psm_score closed forms") {
  const std::string pep = "VEALR";
  const double sites = static_cast<double>(pep.size() - 1);
  const auto by = only({b_ion(), y_ion()});

  SynthOptions iso;
  iso.isotopes = true;
  const auto perfect = synth_spectrum(pep, default_ion_types(), iso, 1);
  CHECK(psm_score(pep, perfect, by) == doctest::Approx(sites * (1.2 + 1.2)));

  CHECK(psm_score(pep, empty_spectrum(pep), by) == doctest::Approx(-sites * (0.5 + 0.5)));

  // one secondary y witness half a tolerance away
  const auto y_only = only({y_ion()});
  Spectrum s = empty_spectrum("GG");
  const double y = ion_mz(y_ion(), residue_mass('G'), s.parent.residual);
  s.peaks = {{y + 0.25 - 1.0, 50, 0}, {y + 0.25, 10, 0}};
  CHECK(psm_score("GG", s, y_only) == doctest::Approx(0.8 * 0.5));

  // default weights: the b witness alone, lone and exact (no other GW witness
  // lies within the tolerance of it)
  Spectrum b_alone = empty_spectrum("GW");
  b_alone.peaks = {{ion_mz(b_ion(), residue_mass('G'), b_alone.parent.residual), 10, 0}};
  const auto d = PsmParams::defaults();
  double missing = 0.0;
  for (const auto& [ion, w] : d.ions) missing += w * 0.5;
  CHECK(missing == doctest::Approx(0.5 * (1 + 1 + 0.3 + 4 * 0.2 + 2 * 0.5)));
  CHECK(psm_score("GW", b_alone, d) == doctest::Approx(1.0 - (missing - 0.5)));
}

TEST_CASE("psm_score is monotone under added matching witnesses") {
  // Added peaks hit a missing witness exactly and stay 1.5 Da clear of all
  // other peaks, so they cannot become isotopes or shadow another witness.
  std::mt19937_64 rng(12);
  const auto params = PsmParams::defaults();
  const std::string alphabet = "ACDEFGHKLMNPQRSTVWY";
  for (int trial = 0; trial < 100; ++trial) {
    std::string pep;
    for (int i = 0; i < 6 + static_cast<int>(rng() % 5); ++i) pep += alphabet[rng() % alphabet.size()];
    SynthOptions opts;
    opts.noise_fraction = 0.5;
    auto s = synth_spectrum(pep, default_ion_types(), opts, trial);
    const double residual = peptide_residual_mass(pep);
    const auto prms = prefix_masses(pep);
    double before = psm_score(pep, s, params);
    for (int add = 0; add < 5; ++add) {
      const auto& ion = params.ions[rng() % params.ions.size()].ion;
      const double mz = ion_mz(ion, prms[rng() % prms.size()], residual);
      if (find_peak_index(s, mz, 1.5)) continue;
      s.peaks.push_back({mz, 1.0, 0});
      std::sort(s.peaks.begin(), s.peaks.end(), [](auto& a, auto& b) { return a.mz < b.mz; });
      const double after = psm_score(pep, s, params);
      CHECK(after >= before - 1e-12);
      before = after;
    }
  }
}

TEST_CASE("rerank") {
  CHECK(rerank({{"VEALR", 4, 1}}, 5).size() == 1);
  const std::vector<Candidate> c{
      {"VEALR", 3, 2, 1}, {"VEALR", 4, 2, 0}, {"VEARL", 4, 2, 0}, {"GGVALR", 1, 5, 2}, {"AAA", 9, 0, 3}};
  const auto r = rerank(c, 10);
  REQUIRE(r.size() == 4);
  CHECK(r[0].sequence == "GGVALR");
  CHECK(r[1].sequence == "VEALR");
  CHECK(r[1].path_score == 4);
  CHECK(r[2].sequence == "VEARL");
  CHECK(r[3].sequence == "AAA");
  CHECK(rerank(c, 2).size() == 2);
}
