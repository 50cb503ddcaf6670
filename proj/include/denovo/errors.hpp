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
#include <stdexcept>
#include <string>

namespace denovo {

struct UnknownResidue : std::runtime_error {
  explicit UnknownResidue(char symbol)
      : std::runtime_error(std::string("unknown residue '") + symbol + "'"), symbol(symbol) {}
  char symbol;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParentMass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConflictingRestriction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoFeasiblePath : std::runtime_error {
  NoFeasiblePath() : std::runtime_error("no antisymmetric s-t path") {}
};

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace denovo
