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

#include <iosfwd>
#include <string>
#include <vector>

namespace denovo {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // every spectrum failed
inline constexpr int kExitIo = 2;
inline constexpr int kExitModel = 3;
inline constexpr int kExitConfig = 4;

struct Annotation {
  std::string id;
  std::string peptide;
};

/// `spectrum_id<TAB>peptide` lines; an optional header line and '#' comments
/// are skipped.
std::vector<Annotation> parse_annotations(std::istream& in);
std::vector<Annotation> load_annotations(const std::string& path);
std::string annotations_tsv(const std::vector<Annotation>& annotations);

/// Entry point of the `denovo` tool: subcommands sequence, train, evaluate,
/// synth and trace.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace denovo
