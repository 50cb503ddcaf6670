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

#include "denovo/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "denovo/errors.hpp"

namespace denovo {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars rejects a leading '+'
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "2+", "2", "3-" or "2+ and 3+": the first listed charge, sign ignored.
bool parse_charge(std::string_view s, int& out) {
  s = trim(s);
  std::size_t n = 0;
  while (n < s.size() && s[n] >= '0' && s[n] <= '9') ++n;
  if (n == 0) return false;
  std::from_chars(s.data(), s.data() + n, out);
  return out > 0;
}

}  // namespace

std::vector<Spectrum> parse_mgf(std::string_view text) {
  std::vector<Spectrum> out;
  std::size_t lineno = 0;
  bool in_block = false;
  std::size_t block_start = 0;
  Spectrum current;
  double pepmass = 0.0;
  bool have_pepmass = false;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#' || line.front() == ';' || line.front() == '!') continue;

    if (!in_block) {
      if (line == "BEGIN IONS") {
        in_block = true;
        block_start = lineno;
        current = Spectrum{};
        have_pepmass = false;
      }
      // global parameters outside blocks are ignored
      continue;
    }

    if (line == "END IONS") {
      if (!have_pepmass) throw ParseError(block_start, "block without PEPMASS");
      const double neutral = current.precursor_charge * (pepmass - kProtonMass);
      current.parent = ParentMass::from_total(neutral);
      std::stable_sort(current.peaks.begin(), current.peaks.end(),
                       [](const Peak& a, const Peak& b) { return a.mz < b.mz; });
      out.push_back(std::move(current));
      in_block = false;
      continue;
    }
    if (line == "BEGIN IONS") throw ParseError(lineno, "nested BEGIN IONS");

    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      const auto key = line.substr(0, eq);
      const auto value = line.substr(eq + 1);
      if (key == "PEPMASS") {
        double mz = 0.0;
        const auto sp = trim(value).find_first_of(" \t");
        if (!parse_double(trim(value).substr(0, sp), mz) || mz <= 0.0) {
          throw ParseError(lineno, "bad PEPMASS");
        }
        pepmass = mz;
        have_pepmass = true;
      } else if (key == "CHARGE") {
        if (!parse_charge(value, current.precursor_charge)) throw ParseError(lineno, "bad CHARGE");
      } else if (key == "TITLE") {
        current.id = std::string(trim(value));
      }
      continue;
    }

    const auto sp = line.find_first_of(" \t");
    Peak peak;
    if (sp == std::string_view::npos) {
      throw ParseError(lineno, "expected `mz intensity`");
    }
    auto rest = trim(line.substr(sp));
    // a third column (fragment charge) is tolerated and ignored
    if (const auto sp2 = rest.find_first_of(" \t"); sp2 != std::string_view::npos) {
      rest = rest.substr(0, sp2);
    }
    if (!parse_double(line.substr(0, sp), peak.mz) || !parse_double(rest, peak.intensity) ||
        peak.mz <= 0.0) {
      throw ParseError(lineno, "malformed peak line");
    }
    current.peaks.push_back(peak);
  }
  if (in_block) throw ParseError(block_start, "unterminated BEGIN IONS block");
  return out;
}

std::vector<Spectrum> load_mgf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mgf(ss.str());
}

std::string write_mgf(std::span<const Spectrum> spectra) {
  std::string out;
  char buf[128];
  for (const auto& s : spectra) {
    out += "BEGIN IONS\n";
    out += "TITLE=" + s.id + "\n";
    const double pepmass = s.parent.total / s.precursor_charge + kProtonMass;
    std::snprintf(buf, sizeof buf, "PEPMASS=%.10g\nCHARGE=%d+\n", pepmass, s.precursor_charge);
    out += buf;
    for (const auto& p : s.peaks) {
      std::snprintf(buf, sizeof buf, "%.4f %.4f\n", p.mz, p.intensity);
      out += buf;
    }
    out += "END IONS\n";
  }
  return out;
}

Spectrum rank_normalize(Spectrum spectrum, int max_rank) {
  auto& peaks = spectrum.peaks;
  std::vector<std::size_t> order(peaks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (peaks[a].intensity != peaks[b].intensity) return peaks[a].intensity > peaks[b].intensity;
    return peaks[a].mz < peaks[b].mz;
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    peaks[order[r]].rank = std::min(static_cast<int>(r) + 1, max_rank + 1);
  }
  return spectrum;
}

std::optional<std::size_t> find_peak_index(const Spectrum& spectrum, double mz, double tol) {
  const auto& peaks = spectrum.peaks;
  auto it = std::lower_bound(peaks.begin(), peaks.end(), mz - tol,
                             [](const Peak& p, double v) { return p.mz < v; });
  std::optional<std::size_t> best;
  for (; it != peaks.end() && it->mz <= mz + tol; ++it) {
    const auto i = static_cast<std::size_t>(it - peaks.begin());
    if (!best || it->intensity > peaks[*best].intensity) best = i;
  }
  return best;
}

std::optional<Peak> find_peak(const Spectrum& spectrum, double mz, double tol) {
  if (auto i = find_peak_index(spectrum, mz, tol)) return spectrum.peaks[*i];
  return std::nullopt;
}

}  // namespace denovo
