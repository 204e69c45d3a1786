// Copyright 2026 The Metaplectic Compiler Authors
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

#include <stdexcept>
#include <string>
#include <vector>

namespace metaplectic {

/// A caller violated a precondition (malformed or non-unitary input, bad
/// index, out-of-range parameter).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A norm equation with no solution in Z[omega] was requested.
class Unsolvable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant that should hold for all valid inputs was broken.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The approximation search gave up. Carries one line per inspected level.
class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(const std::string& what, std::vector<std::string> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  explicit SynthesisError(const std::string& what) : std::runtime_error(what) {}

  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

#define METAPLECTIC_CHECK(cond, msg)                                   \
  do {                                                                 \
    if (!(cond))                                                       \
      throw ::metaplectic::InvariantViolation(std::string(msg) + " (" + \
                                              #cond + ")");            \
  } while (0)

}  // namespace metaplectic
