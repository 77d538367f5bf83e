// Copyright 2026 The Presyn Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace presyn {

// Base class for all faults raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &What) : std::runtime_error(What) {}
};

// Malformed grammars, examples, configs, unknown operators, arity mismatches.
class InputError : public Error {
public:
  explicit InputError(const std::string &What) : Error(What) {}
};

// A concrete input falls outside the abstract input space the artifact was
// built for.
class CoverageError : public Error {
public:
  explicit CoverageError(const std::string &What) : Error(What) {}
};

// A configured resource limit was exceeded. Carries the progress made so the
// caller can report how far construction got.
class BudgetError : public Error {
public:
  BudgetError(const std::string &What, uint64_t States, uint64_t Transitions)
      : Error(What), States(States), Transitions(Transitions) {}
  uint64_t States = 0;
  uint64_t Transitions = 0;
};

// Artifact file problems: bad magic, unsupported version, checksum mismatch
// (including truncation), or a fingerprint that does not match the companion
// structure.
class FormatError : public Error {
public:
  enum class Kind { Magic, Version, Checksum, Fingerprint, Layout };
  FormatError(Kind K, const std::string &What) : Error(What), Which(K) {}
  Kind Which;
};

} // namespace presyn
