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

#include "denovo/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "denovo/errors.hpp"

namespace denovo {

int intensity_bin(int rank) {
  if (rank < 1) throw std::invalid_argument("peak rank must be positive; rank_normalize first");
  if (rank <= 3) return 1;
  if (rank <= 10) return 2;
  return 3;
}

int region_of(double x, double extent, int regions) {
  if (regions <= 1 || !(extent > 0.0)) return 0;
  const auto r = static_cast<int>(std::floor(x / extent * regions));
  return std::clamp(r, 0, regions - 1);
}

std::size_t BayesNet::configurations(std::size_t v) const {
  std::size_t n = 1;
  for (auto p : parents[v]) n *= static_cast<std::size_t>(cardinality[p]);
  return n;
}

std::size_t BayesNet::configuration(std::size_t v, std::span<const int> assignment) const {
  std::size_t j = 0;
  for (auto p : parents[v]) j = j * static_cast<std::size_t>(cardinality[p]) + assignment[p];
  return j;
}

double BayesNet::probability(std::size_t v, std::span<const int> assignment) const {
  return cpt[v][configuration(v, assignment) * cardinality[v] + assignment[v]];
}

BayesNet naive_structure(std::vector<std::string> witness_names) {
  BayesNet net;
  net.names.push_back("class");
  net.cardinality.push_back(2);
  net.parents.emplace_back();
  for (auto& name : witness_names) {
    net.names.push_back(std::move(name));
    net.cardinality.push_back(kIntensityBins);
    net.parents.push_back({0});
  }
  net.cpt.resize(net.size());
  return net;
}

namespace {

// Family counts N[j * r + k] for variable v under its current parents.
std::vector<double> family_counts(const BayesNet& net, std::size_t v,
                                  std::span<const std::vector<int>> data) {
  const auto r = static_cast<std::size_t>(net.cardinality[v]);
  std::vector<double> counts(net.configurations(v) * r, 0.0);
  for (const auto& row : data) counts[net.configuration(v, row) * r + row[v]] += 1.0;
  return counts;
}

}  // namespace

double k2_family_score(const BayesNet& net, std::size_t v, std::span<const std::vector<int>> data) {
  const auto counts = family_counts(net, v, data);
  const auto r = static_cast<std::size_t>(net.cardinality[v]);
  double score = 0.0;
  for (std::size_t j = 0; j < counts.size() / r; ++j) {
    double n_j = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      n_j += counts[j * r + k];
      score += std::lgamma(counts[j * r + k] + 1.0);
    }
    score += std::lgamma(static_cast<double>(r)) - std::lgamma(n_j + static_cast<double>(r));
  }
  return score;
}

BayesNet learn_structure(const BayesNet& initial, std::span<const std::vector<int>> data,
                         int max_parents) {
  BayesNet net = initial;
  const auto limit = static_cast<std::size_t>(std::max(max_parents, 1));
  for (std::size_t v = 1; v < net.size(); ++v) {
    double current = k2_family_score(net, v, data);
    while (net.parents[v].size() < limit) {
      std::optional<std::size_t> best;
      double best_score = current;
      for (std::size_t u = 0; u < v; ++u) {
        auto& ps = net.parents[v];
        if (std::find(ps.begin(), ps.end(), u) != ps.end()) continue;
        ps.push_back(u);
        const double s = k2_family_score(net, v, data);
        ps.pop_back();
        if (s > best_score + 1e-12) {
          best_score = s;
          best = u;
        }
      }
      if (!best) break;
      net.parents[v].push_back(*best);
      current = best_score;
    }
  }
  return net;
}

BayesNet fit_cpts(BayesNet net, std::span<const std::vector<int>> data) {
  net.cpt.assign(net.size(), {});
  for (std::size_t v = 0; v < net.size(); ++v) {
    const auto counts = family_counts(net, v, data);
    const auto r = static_cast<std::size_t>(net.cardinality[v]);
    auto& table = net.cpt[v];
    table.resize(counts.size());
    for (std::size_t j = 0; j < counts.size() / r; ++j) {
      double n_j = 0.0;
      for (std::size_t k = 0; k < r; ++k) n_j += counts[j * r + k];
      for (std::size_t k = 0; k < r; ++k) {
        table[j * r + k] = (counts[j * r + k] + 1.0) / (n_j + static_cast<double>(r));
      }
    }
  }
  return net;
}

bool is_acyclic(const BayesNet& net) {
  // Kahn's algorithm over parent -> child edges
  std::vector<std::size_t> indegree(net.size());
  std::vector<std::vector<std::size_t>> children(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    indegree[v] = net.parents[v].size();
    for (auto p : net.parents[v]) children[p].push_back(v);
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto c : children[v]) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  return seen == net.size();
}

double log_likelihood_ratio(const BayesNet& net, std::span<const int> witnesses) {
  if (witnesses.size() + 1 != net.size()) {
    throw std::invalid_argument("witness vector does not match the network");
  }
  std::vector<int> assignment(net.size());
  std::copy(witnesses.begin(), witnesses.end(), assignment.begin() + 1);
  double llr = 0.0;
  for (std::size_t v = 1; v < net.size(); ++v) {
    assignment[0] = 1;
    const double t = net.probability(v, assignment);
    assignment[0] = 0;
    const double f = net.probability(v, assignment);
    llr += std::log(t) - std::log(f);
  }
  return llr;
}

Topology parse_topology(std::istream& in) {
  Topology topology;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string parent, child, extra;
    if (!(fields >> parent)) continue;
    if (!(fields >> child) || (fields >> extra)) throw ParseError(lineno, "expected `parent child`");
    topology.emplace_back(parent, child);
  }
  return topology;
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_topology(in);
}

BayesNet structure_from_topology(const Topology& topology, std::vector<std::string> witness_names) {
  BayesNet net = naive_structure(std::move(witness_names));
  for (auto& ps : net.parents) ps.clear();
  auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(net.names.begin(), net.names.end(), name);
    if (it == net.names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - net.names.begin());
  };
  for (const auto& [parent, child] : topology) {
    const auto p = index_of(parent);
    const auto c = index_of(child);
    if (!p || !c) continue;
    if (*c == 0) throw ModelError("the class variable cannot have parents");
    if (*p == *c) throw ModelError("self loop on " + child);
    auto& ps = net.parents[*c];
    if (std::find(ps.begin(), ps.end(), *p) == ps.end()) ps.push_back(*p);
  }
  if (!is_acyclic(net)) throw ModelError("topology has a cycle");
  return net;
}

// ---- persistence ----

namespace {

constexpr const char* kModelMagic = "denovo-scoring-model";
constexpr int kModelVersion = 1;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_ion(std::ostream& out, const IonType& ion) {
  out << "ion " << ion.name << ' ' << (ion.terminus == Terminus::N ? 'N' : 'C') << ' '
      << fmt(ion.delta) << ' ' << ion.charge << '\n';
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void expect(const std::string& keyword) {
    const auto got = word();
    if (got != keyword) fail("expected '" + keyword + "', got '" + got + "'");
  }
  std::string word() {
    std::string w;
    if (!(in_ >> w)) fail("unexpected end of model");
    return w;
  }
  template <typename T>
  T number() {
    T x{};
    if (!(in_ >> x)) fail("expected a number");
    return x;
  }
  IonType ion() {
    expect("ion");
    IonType t;
    t.name = word();
    const auto term = word();
    if (term != "N" && term != "C") fail("bad terminus " + term);
    t.terminus = term == "N" ? Terminus::N : Terminus::C;
    t.delta = number<double>();
    t.charge = number<int>();
    return t;
  }
  [[noreturn]] void fail(const std::string& what) { throw ModelError("model file: " + what); }

 private:
  std::istream& in_;
};

}  // namespace

void write_model(std::ostream& out, const ScoringModel& model) {
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "regions " << model.regions << '\n';
  out << "threshold " << fmt(model.threshold) << '\n';
  out << "witness_tol " << fmt(model.witness_tol) << '\n';
  out << "max_rank " << model.max_rank << '\n';
  out << "rank_ions " << model.rank_ions.size() << '\n';
  for (const auto& ion : model.rank_ions) write_ion(out, ion);
  for (std::size_t r = 0; r < model.region_models.size(); ++r) {
    const auto& rm = model.region_models[r];
    const auto& net = rm.net;
    out << "region " << r << '\n';
    out << "ions " << rm.ions.size() << '\n';
    for (const auto& ion : rm.ions) write_ion(out, ion);
    out << "variables " << net.size() << '\n';
    for (std::size_t v = 0; v < net.size(); ++v) {
      out << "variable " << net.names[v] << ' ' << net.cardinality[v] << " parents "
          << net.parents[v].size();
      for (auto p : net.parents[v]) out << ' ' << net.names[p];
      out << "\ncpt " << net.cpt[v].size();
      for (double x : net.cpt[v]) out << ' ' << fmt(x);
      out << '\n';
    }
    out << "rank_scores " << model.rank_scores[r].size() << '\n';
    for (const auto& row : model.rank_scores[r]) {
      out << "row";
      for (double x : row) out << ' ' << fmt(x);
      out << '\n';
    }
  }
  out << "end\n";
}

ScoringModel read_model(std::istream& in) {
  Reader rd(in);
  ScoringModel model;
  rd.expect(kModelMagic);
  if (rd.number<int>() != kModelVersion) rd.fail("unsupported version");
  rd.expect("regions");
  model.regions = rd.number<int>();
  if (model.regions < 1) rd.fail("regions must be positive");
  rd.expect("threshold");
  model.threshold = rd.number<double>();
  rd.expect("witness_tol");
  model.witness_tol = rd.number<double>();
  rd.expect("max_rank");
  model.max_rank = rd.number<int>();
  rd.expect("rank_ions");
  const auto n_rank_ions = rd.number<std::size_t>();
  for (std::size_t i = 0; i < n_rank_ions; ++i) model.rank_ions.push_back(rd.ion());

  for (int r = 0; r < model.regions; ++r) {
    rd.expect("region");
    if (rd.number<int>() != r) rd.fail("regions out of order");
    RegionModel rm;
    rd.expect("ions");
    const auto n_ions = rd.number<std::size_t>();
    for (std::size_t i = 0; i < n_ions; ++i) rm.ions.push_back(rd.ion());
    rd.expect("variables");
    const auto n_vars = rd.number<std::size_t>();
    if (n_vars != n_ions + 1) rd.fail("variable count does not match ion count");
    auto& net = rm.net;
    std::vector<std::vector<std::string>> parent_names(n_vars);
    for (std::size_t v = 0; v < n_vars; ++v) {
      rd.expect("variable");
      net.names.push_back(rd.word());
      net.cardinality.push_back(rd.number<int>());
      rd.expect("parents");
      const auto np = rd.number<std::size_t>();
      for (std::size_t i = 0; i < np; ++i) parent_names[v].push_back(rd.word());
      rd.expect("cpt");
      net.cpt.emplace_back(rd.number<std::size_t>());
      for (auto& x : net.cpt.back()) x = rd.number<double>();
    }
    net.parents.resize(n_vars);
    for (std::size_t v = 0; v < n_vars; ++v) {
      for (const auto& pn : parent_names[v]) {
        const auto it = std::find(net.names.begin(), net.names.end(), pn);
        if (it == net.names.end()) rd.fail("unknown parent " + pn);
        net.parents[v].push_back(static_cast<std::size_t>(it - net.names.begin()));
      }
      if (net.cpt[v].size() != net.configurations(v) * net.cardinality[v]) {
        rd.fail("cpt of " + net.names[v] + " has the wrong size");
      }
    }
    if (!is_acyclic(net)) rd.fail("network has a cycle");
    if (net.names[0] != "class" || net.cardinality[0] != 2 || !net.parents[0].empty()) {
      rd.fail("variable 0 must be the parentless binary class");
    }
    for (std::size_t v = 1; v < n_vars; ++v) {
      if (net.names[v] != rm.ions[v - 1].name) rd.fail("variable " + net.names[v] + " out of order");
      if (net.cardinality[v] != kIntensityBins) rd.fail("witness variables need 4 states");
    }
    rd.expect("rank_scores");
    const auto rows = rd.number<std::size_t>();
    if (rows != static_cast<std::size_t>(model.max_rank + 1)) rd.fail("rank table size");
    std::vector<std::vector<double>> table(rows, std::vector<double>(n_rank_ions));
    for (auto& row : table) {
      rd.expect("row");
      for (auto& x : row) x = rd.number<double>();
    }
    model.region_models.push_back(std::move(rm));
    model.rank_scores.push_back(std::move(table));
  }
  rd.expect("end");
  return model;
}

void save_model(const std::string& path, const ScoringModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_model(out, model);
  if (!out) throw IoError("cannot write " + path);
}

ScoringModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_model(in);
}

// ---- training ----

std::vector<int> witness_bins(std::span<const IonType> ions, double prm, const Spectrum& spectrum,
                              double tol) {
  std::vector<int> bins;
  bins.reserve(ions.size());
  for (const auto& ion : ions) {
    const auto i = find_peak_index(spectrum, ion_mz(ion, prm, spectrum.parent.residual), tol);
    bins.push_back(i ? intensity_bin(spectrum.peaks[*i].rank) : 0);
  }
  return bins;
}

std::vector<IonType> candidate_witness_types(std::span<const IonType> construction_ions) {
  auto out = witness_ion_types();
  for (const auto& ion : construction_ions) {
    const bool known = std::any_of(out.begin(), out.end(),
                                   [&](const IonType& t) { return t.name == ion.name; });
    if (!known) out.push_back(ion);
  }
  return out;
}

namespace {

bool fits_precursor(const AnnotatedSpectrum& a, double tol) {
  return std::abs(peptide_residual_mass(a.peptide) - a.spectrum.parent.residual) <= tol;
}

}  // namespace

TrainingSet extract_training_vectors(std::span<const AnnotatedSpectrum> spectra,
                                     std::span<const IonType> construction_ions,
                                     const TrainConfig& config) {
  TrainingSet set;
  set.candidates = candidate_witness_types(construction_ions);
  set.regions.resize(static_cast<std::size_t>(std::max(config.regions, 1)));
  std::mt19937_64 rng(config.seed);

  for (const auto& a : spectra) {
    if (!fits_precursor(a, config.parent_tol)) {
      ++set.skipped;
      continue;
    }
    const auto ranked = rank_normalize(a.spectrum, config.max_rank);
    const auto graph = build_graph(ranked, construction_ions, config.graph);
    const auto truth = prefix_masses(a.peptide);

    std::vector<NodeId> tp, fp;
    for (NodeId v = 1; v + 1 < graph.node_count(); ++v) {
      const double prm = graph.node(v).prm;
      const bool hit = std::any_of(truth.begin(), truth.end(),
                                   [&](double t) { return std::abs(t - prm) <= config.tp_tol; });
      (hit ? tp : fp).push_back(v);
    }
    if (fp.size() < tp.size()) {
      ++set.imbalanced;
    } else {
      std::shuffle(fp.begin(), fp.end(), rng);
      fp.resize(tp.size());
      std::sort(fp.begin(), fp.end());
    }
    auto record = [&](NodeId v, bool positive) {
      const double prm = graph.node(v).prm;
      const auto r = region_of(prm, ranked.parent.residual, config.regions);
      set.regions[r].push_back({witness_bins(set.candidates, prm, ranked, config.witness_tol), positive});
    };
    for (auto v : tp) record(v, true);
    for (auto v : fp) record(v, false);
  }
  return set;
}

std::vector<std::size_t> select_ion_types(std::span<const LabeledVector> vectors,
                                          double threshold_percent) {
  if (!(threshold_percent > 0.0 && threshold_percent <= 100.0)) {
    throw ModelError("ion type threshold must be in (0, 100]");
  }
  std::vector<std::size_t> counts;
  std::size_t positives = 0;
  for (const auto& x : vectors) {
    if (!x.positive) continue;
    ++positives;
    counts.resize(std::max(counts.size(), x.values.size()), 0);
    for (std::size_t t = 0; t < x.values.size(); ++t) counts[t] += x.values[t] != 0;
  }
  if (positives == 0) throw ModelError("no true positive training vectors");
  std::vector<std::size_t> selected;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (static_cast<double>(counts[t]) * 100.0 >= threshold_percent * static_cast<double>(positives)) {
      selected.push_back(t);
    }
  }
  if (selected.empty()) throw ModelError("no ion type reaches the selection threshold");
  std::stable_sort(selected.begin(), selected.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  return selected;
}

std::vector<std::vector<double>> rank_score_table(const std::vector<std::vector<double>>& counts) {
  if (counts.empty() || counts[0].size() < 2) return {};
  const auto types = counts[0].size();
  std::vector<double> per_type(types, 0.0);
  double total = 0.0;
  for (const auto& row : counts) {
    for (std::size_t t = 0; t < types; ++t) {
      per_type[t] += row[t];
      total += row[t];
    }
  }
  const auto pseudo = static_cast<double>(types);
  std::vector<std::vector<double>> table(counts.size(), std::vector<double>(types - 1));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double at_rank = std::accumulate(counts[k].begin(), counts[k].end(), 0.0);
    for (std::size_t t = 0; t + 1 < types; ++t) {
      const double base = (per_type[t] + 1.0) / (total + pseudo);
      // pseudo-counts follow the base rate, so sparse ranks shrink toward 0
      const double given_rank = (counts[k][t] + pseudo * base) / (at_rank + pseudo);
      table[k][t] = std::log(given_rank / base);
    }
  }
  return table;
}

std::vector<std::vector<std::vector<double>>> train_rank_scores(
    std::span<const AnnotatedSpectrum> spectra, std::span<const IonType> candidates,
    const TrainConfig& config) {
  const auto regions = static_cast<std::size_t>(std::max(config.regions, 1));
  const auto ranks = static_cast<std::size_t>(config.max_rank + 1);
  const auto unexplained = candidates.size();  // last column
  // counts[region][rank - 1][type]
  std::vector<std::vector<std::vector<double>>> counts(
      regions, std::vector<std::vector<double>>(ranks, std::vector<double>(unexplained + 1, 0.0)));

  for (const auto& a : spectra) {
    if (!fits_precursor(a, config.parent_tol)) continue;
    const auto ranked = rank_normalize(a.spectrum, config.max_rank);
    const auto truth = prefix_masses(a.peptide);
    const double residual = ranked.parent.residual;
    for (const auto& peak : ranked.peaks) {
      std::size_t type = unexplained;
      for (std::size_t t = 0; t < candidates.size() && type == unexplained; ++t) {
        for (double prm : truth) {
          if (std::abs(ion_mz(candidates[t], prm, residual) - peak.mz) <= config.witness_tol) {
            type = t;
            break;
          }
        }
      }
      const auto r = region_of(peak.mz, ranked.parent.total, config.regions);
      counts[r][peak.rank - 1][type] += 1.0;
    }
  }

  std::vector<std::vector<std::vector<double>>> scores;
  for (const auto& table : counts) scores.push_back(rank_score_table(table));
  return scores;
}

ScoringModel train_model(std::span<const AnnotatedSpectrum> spectra,
                         std::span<const IonType> construction_ions, const TrainConfig& config) {
  const auto set = extract_training_vectors(spectra, construction_ions, config);
  ScoringModel model;
  model.regions = static_cast<int>(set.regions.size());
  model.threshold = config.threshold;
  model.witness_tol = config.witness_tol;
  model.max_rank = config.max_rank;

  for (std::size_t r = 0; r < set.regions.size(); ++r) {
    const auto& vectors = set.regions[r];
    std::vector<std::size_t> selected;
    try {
      selected = select_ion_types(vectors, config.threshold);
    } catch (const ModelError& e) {
      throw ModelError("region " + std::to_string(r) + ": " + e.what());
    }
    RegionModel rm;
    std::vector<std::string> names;
    for (auto t : selected) {
      rm.ions.push_back(set.candidates[t]);
      names.push_back(set.candidates[t].name);
    }
    std::vector<std::vector<int>> data;
    data.reserve(vectors.size());
    for (const auto& x : vectors) {
      std::vector<int> row{x.positive ? 1 : 0};
      for (auto t : selected) row.push_back(x.values[t]);
      data.push_back(std::move(row));
    }
    BayesNet structure = config.topology
                             ? structure_from_topology(*config.topology, std::move(names))
                             : learn_structure(naive_structure(std::move(names)), data, config.max_parents);
    rm.net = fit_cpts(std::move(structure), data);
    model.region_models.push_back(std::move(rm));
  }
  model.rank_ions = set.candidates;
  model.rank_scores = train_rank_scores(spectra, set.candidates, config);
  return model;
}

// ---- scoring ----

NodeScorer::NodeScorer(const ScoringModel& model, std::span<const IonType> construction_ions)
    : model_(&model) {
  if (model.region_models.size() != static_cast<std::size_t>(model.regions) ||
      model.rank_scores.size() != model.region_models.size()) {
    throw ModelError("model has inconsistent region count");
  }
  for (const auto& ion : construction_ions) {
    const auto it = std::find_if(model.rank_ions.begin(), model.rank_ions.end(),
                                 [&](const IonType& t) { return t.name == ion.name; });
    if (it == model.rank_ions.end()) {
      throw ModelError("ion type " + ion.name + " has no rank score table");
    }
    rank_column_.push_back(static_cast<std::size_t>(it - model.rank_ions.begin()));
  }
}

double NodeScorer::llr(const Node& node, const Spectrum& spectrum) const {
  if (node.is_goalpost()) return 0.0;
  const auto r = region_of(node.prm, spectrum.parent.residual, model_->regions);
  const auto& rm = model_->region_models[r];
  return log_likelihood_ratio(rm.net, witness_bins(rm.ions, node.prm, spectrum, model_->witness_tol));
}

double NodeScorer::rank_score(const Node& node, const Spectrum& spectrum) const {
  // a merged node stands for whichever interpretation is right; take the best
  std::optional<double> best;
  for (const auto& o : node.origins) {
    const auto& peak = spectrum.peaks[o.peak];
    const auto r = region_of(peak.mz, spectrum.parent.total, model_->regions);
    const auto rank = std::clamp(peak.rank, 1, model_->max_rank + 1);
    const double s = model_->rank_scores[r][rank - 1][rank_column_.at(o.ion)];
    if (!best || s > *best) best = s;
  }
  return best.value_or(0.0);
}

void score_graph(SpectrumGraph& graph, const Spectrum& spectrum, const NodeScorer& scorer) {
  std::vector<double> scores(graph.node_count(), 0.0);
  for (const auto& node : graph.nodes()) {
    if (!node.is_goalpost()) scores[node.id] = scorer.node_score(node, spectrum);
  }
  graph.set_scores(scores);
}

void score_uniform(SpectrumGraph& graph) {
  std::vector<double> scores(graph.node_count(), 0.0);
  for (const auto& node : graph.nodes()) {
    if (!node.is_goalpost()) scores[node.id] = 1.0;
  }
  graph.set_scores(scores);
}

}  // namespace denovo
