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

#include "denovo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "denovo/errors.hpp"
#include "denovo/eval.hpp"
#include "denovo/pipeline.hpp"
#include "denovo/scoring.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

namespace {

constexpr const char* kAnnotationHeader = "spectrum_id\tpeptide";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every tunable of the tool with its default. Flags override values read from
// a --config file.
struct RunConfig {
  std::string ions_path;
  std::string model_path;
  std::string topology_path;
  std::string output_path;
  std::string trace_path;
  std::size_t k = 20;
  std::size_t n_out = 10;
  double edge_tol = 0.5;
  double merge_tol = 0.3;
  double parent_tol = 2.5;
  double witness_tol = 0.5;
  int max_iter = 100;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool uniform_score = false;
  double threshold = 20.0;
  std::size_t index = 0;
  // synth
  std::vector<std::string> peptides;
  std::string annotations_out;
  double noise = 0.0;
  bool isotopes = false;
  int charge = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write " + path);
}

void check_config(const RunConfig& c) {
  if (!(c.edge_tol > 0 && c.merge_tol > 0 && c.parent_tol > 0 && c.witness_tol > 0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (c.k == 0 || c.n_out == 0) throw ConfigError("--k and --n-out must be at least 1");
  if (c.max_iter < 1) throw ConfigError("--max-iter must be at least 1");
}

PipelineConfig pipeline_config(const RunConfig& c) {
  PipelineConfig p;
  if (!c.ions_path.empty()) p.ions = load_ion_types(c.ions_path);
  p.graph.edge_tol = c.edge_tol;
  p.graph.merge_tol = c.merge_tol;
  p.k = c.k;
  p.n_out = c.n_out;
  p.max_iter = c.max_iter;
  p.psm.parent_tol = c.parent_tol;
  p.psm.witness_tol = c.witness_tol;
  return p;
}

std::optional<ScoringModel> scoring_model(const RunConfig& c) {
  if (c.uniform_score) return std::nullopt;
  if (c.model_path.empty()) throw ConfigError("--model is required unless --uniform-score is set");
  return load_model(c.model_path);
}

void add_pipeline_flags(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--ions", c.ions_path, "ion type file for graph construction");
  cmd.add_option("--model", c.model_path, "trained scoring model");
  cmd.add_flag("--uniform-score", c.uniform_score, "score every node 1 instead of using a model");
  cmd.add_option("--k", c.k, "number of suboptimal paths")->capture_default_str();
  cmd.add_option("--n-out", c.n_out, "candidates reported per spectrum")->capture_default_str();
  cmd.add_option("--edge-tol", c.edge_tol, "residue edge tolerance (Da)")->capture_default_str();
  cmd.add_option("--merge-tol", c.merge_tol, "node merge tolerance (Da)")->capture_default_str();
  cmd.add_option("--parent-tol", c.parent_tol, "parent mass tolerance (Da)")->capture_default_str();
  cmd.add_option("--witness-tol", c.witness_tol, "witness peak tolerance (Da)")->capture_default_str();
  cmd.add_option("--max-iter", c.max_iter, "subgradient iterations before branching")
      ->capture_default_str();
  cmd.add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd.add_option("--threads", c.threads, "worker threads");
}

int cmd_sequence(const std::string& mgf, const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_config(c);
  auto config = pipeline_config(c);
  config.trace = !c.trace_path.empty();
  const auto model = scoring_model(c);
  std::optional<NodeScorer> scorer;
  if (model) scorer.emplace(*model, config.ions);
  const auto spectra = parse_mgf(read_file(mgf));

  const auto results = sequence_all(spectra, config, scorer ? &*scorer : nullptr, c.threads);
  std::string tsv = results_tsv_header();
  std::string trace = "spectrum_id," + trace_csv_header();
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.error.empty()) {
      ++failed;
      err << "warning: spectrum " << r.id << ": " << r.error << '\n';
      continue;
    }
    tsv += results_tsv_rows(r);
    std::istringstream rows(r.trace_csv);
    for (std::string line; std::getline(rows, line);) trace += r.id + "," + line + "\n";
  }
  write_output(c.output_path, tsv, out);
  if (config.trace) write_output(c.trace_path, trace, out);
  return !results.empty() && failed == results.size() ? kExitFailed : kExitOk;
}

int cmd_trace(const std::string& mgf, const RunConfig& c, std::ostream& out) {
  check_config(c);
  auto config = pipeline_config(c);
  config.trace = true;
  config.k = 1;
  const auto model = scoring_model(c);
  std::optional<NodeScorer> scorer;
  if (model) scorer.emplace(*model, config.ions);
  const auto spectra = parse_mgf(read_file(mgf));
  if (c.index >= spectra.size()) throw ConfigError("--index beyond the last spectrum");
  const auto r = sequence_spectrum(spectra[c.index], config, scorer ? &*scorer : nullptr);
  if (!r.error.empty()) throw std::runtime_error(r.error);
  write_output(c.output_path, trace_csv_header() + r.trace_csv, out);
  return kExitOk;
}

int cmd_train(const std::string& mgf, const std::string& annotations, const RunConfig& c,
              std::ostream& out, std::ostream& err) {
  check_config(c);
  if (c.model_path.empty()) throw ConfigError("--model names the output model file");
  const auto ions = c.ions_path.empty() ? default_ion_types() : load_ion_types(c.ions_path);
  const auto spectra = parse_mgf(read_file(mgf));
  std::map<std::string, std::string> peptide_of;
  for (auto& a : load_annotations(annotations)) peptide_of[a.id] = a.peptide;

  std::vector<AnnotatedSpectrum> training;
  for (const auto& s : spectra) {
    const auto it = peptide_of.find(s.id);
    if (it == peptide_of.end()) continue;
    training.push_back({s, it->second});
  }
  if (training.empty()) throw ModelError("no annotated spectra to train on");

  TrainConfig tc;
  tc.threshold = c.threshold;
  tc.witness_tol = c.witness_tol;
  tc.tp_tol = c.edge_tol;
  tc.parent_tol = c.parent_tol;
  tc.seed = c.seed;
  tc.graph.edge_tol = c.edge_tol;
  tc.graph.merge_tol = c.merge_tol;
  if (!c.topology_path.empty()) tc.topology = load_topology(c.topology_path);

  const auto set = extract_training_vectors(training, ions, tc);
  if (set.skipped) err << "warning: skipped " << set.skipped << " spectra with mismatched parent mass\n";
  const auto model = train_model(training, ions, tc);
  save_model(c.model_path, model);

  for (std::size_t r = 0; r < model.region_models.size(); ++r) {
    const auto& rm = model.region_models[r];
    out << "region " << r << ": " << set.regions[r].size() << " vectors, ions";
    for (const auto& ion : rm.ions) out << ' ' << ion.name;
    out << "\n  edges:";
    for (std::size_t v = 0; v < rm.net.size(); ++v) {
      for (auto p : rm.net.parents[v]) out << ' ' << rm.net.names[p] << "->" << rm.net.names[v];
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const std::string& predictions, const std::string& annotations,
                 const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> peptide_of;
  for (auto& a : load_annotations(annotations)) peptide_of[a.id] = a.peptide;

  // predictions in file order, grouped by spectrum
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::size_t, std::string>>> ranked;
  std::istringstream in(read_file(predictions));
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (lineno == 1 && line.rfind("spectrum_id\t", 0) == 0) continue;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, rank, sequence;
    if (!std::getline(fields, id, '\t') || !std::getline(fields, rank, '\t') ||
        !std::getline(fields, sequence, '\t')) {
      throw ParseError(lineno, "expected spectrum_id, rank and sequence columns");
    }
    if (!peptide_of.count(id)) {
      err << "warning: line " << lineno << ": no annotation for " << id << '\n';
      continue;
    }
    if (!ranked.count(id)) order.push_back(id);
    ranked[id].emplace_back(std::stoul(rank), sequence);
  }

  constexpr std::size_t kCutoffs[] = {1, 3, 5, 10};
  std::string tsv = "spectrum_id";
  for (auto k : kCutoffs) tsv += "\taccuracy@" + std::to_string(k) + "\trecall@" + std::to_string(k);
  tsv += '\n';
  std::vector<double> sums(2 * std::size(kCutoffs), 0.0);
  char buf[64];
  for (const auto& id : order) {
    auto rows = ranked[id];
    std::stable_sort(rows.begin(), rows.end());
    std::vector<std::string> seqs;
    for (auto& [rank, seq] : rows) seqs.push_back(seq);
    tsv += id;
    for (std::size_t i = 0; i < std::size(kCutoffs); ++i) {
      const auto m = best_in_top_k(seqs, peptide_of[id], kCutoffs[i]);
      sums[2 * i] += m.accuracy;
      sums[2 * i + 1] += m.recall;
      std::snprintf(buf, sizeof buf, "\t%.4f\t%.4f", m.accuracy, m.recall);
      tsv += buf;
    }
    tsv += '\n';
  }
  tsv += "mean";
  for (double s : sums) {
    std::snprintf(buf, sizeof buf, "\t%.4f", order.empty() ? 0.0 : s / order.size());
    tsv += buf;
  }
  tsv += '\n';
  write_output(c.output_path, tsv, out);
  return kExitOk;
}

int cmd_synth(const RunConfig& c, std::ostream& out) {
  if (c.peptides.empty()) throw ConfigError("no peptides given");
  if (c.noise < 0.0) throw ConfigError("--noise must not be negative");
  const auto ions = c.ions_path.empty() ? default_ion_types() : load_ion_types(c.ions_path);
  SynthOptions opts;
  opts.noise_fraction = c.noise;
  opts.isotopes = c.isotopes;
  opts.precursor_charge = c.charge;
  std::vector<Spectrum> spectra;
  std::vector<Annotation> annotations;
  for (std::size_t i = 0; i < c.peptides.size(); ++i) {
    const auto id = "synth" + std::to_string(i + 1);
    spectra.push_back(synth_spectrum(c.peptides[i], ions, opts, c.seed + i, id));
    annotations.push_back({id, c.peptides[i]});
  }
  write_output(c.output_path, write_mgf(spectra), out);
  if (!c.annotations_out.empty()) write_output(c.annotations_out, annotations_tsv(annotations), out);
  return kExitOk;
}

}  // namespace

std::vector<Annotation> parse_annotations(std::istream& in) {
  std::vector<Annotation> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line == kAnnotationHeader) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(lineno, "expected `spectrum_id<TAB>peptide`");
    }
    out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

std::vector<Annotation> load_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_annotations(in);
}

std::string annotations_tsv(const std::vector<Annotation>& annotations) {
  std::string out = std::string(kAnnotationHeader) + "\n";
  for (const auto& a : annotations) out += a.id + "\t" + a.peptide + "\n";
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"De novo peptide sequencing from tandem mass spectra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");
  RunConfig c;
  std::string input, annotations;

  auto* seq = app.add_subcommand("sequence", "report candidate peptides for each spectrum");
  seq->add_option("mgf", input, "input MGF")->required();
  add_pipeline_flags(*seq, c);
  seq->add_option("-o,--output", c.output_path, "output TSV (default stdout)");
  seq->add_option("--trace", c.trace_path, "write the iteration trace of each first solve as CSV");

  auto* trace = app.add_subcommand("trace", "iteration trace of the best-path solve of one spectrum");
  trace->add_option("mgf", input, "input MGF")->required();
  add_pipeline_flags(*trace, c);
  trace->add_option("--index", c.index, "0-based spectrum index")->capture_default_str();
  trace->add_option("-o,--output", c.output_path, "output CSV (default stdout)");

  auto* train = app.add_subcommand("train", "train a scoring model from annotated spectra");
  train->add_option("mgf", input, "training MGF")->required();
  train->add_option("annotations", annotations, "TSV of spectrum_id and peptide")->required();
  add_pipeline_flags(*train, c);
  train->add_option("--topology", c.topology_path, "fixed network topology, one `parent child` per line");
  train->add_option("--threshold", c.threshold, "percent of true positives an ion type must appear in")
      ->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "accuracy and recall of predictions");
  evaluate->add_option("predictions", input, "TSV written by `sequence`")->required();
  evaluate->add_option("annotations", annotations, "TSV of spectrum_id and peptide")->required();
  evaluate->add_option("-o,--output", c.output_path, "output TSV (default stdout)");

  auto* synth = app.add_subcommand("synth", "write synthetic spectra for peptides");
  synth->add_option("peptides", c.peptides, "peptide sequences")->required();
  synth->add_option("--ions", c.ions_path, "ion types to generate");
  synth->add_option("--seed", c.seed, "random seed")->capture_default_str();
  synth->add_option("--noise", c.noise, "noise peaks per fragment peak")->capture_default_str();
  synth->add_flag("--isotopes", c.isotopes, "add an isotope peak per fragment");
  synth->add_option("--charge", c.charge, "precursor charge")->capture_default_str();
  synth->add_option("-o,--output", c.output_path, "output MGF (default stdout)");
  synth->add_option("--annotations", c.annotations_out, "also write the peptide annotations here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (seq->parsed()) return cmd_sequence(input, c, out, err);
    if (trace->parsed()) return cmd_trace(input, c, out);
    if (train->parsed()) return cmd_train(input, annotations, c, out, err);
    if (evaluate->parsed()) return cmd_evaluate(input, annotations, c, out, err);
    if (synth->parsed()) return cmd_synth(c, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitModel;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitConfig;
}

}  // namespace denovo
