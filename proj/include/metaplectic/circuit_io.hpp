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

#include <string>
#include <string_view>

#include "metaplectic/circuit.hpp"
#include "metaplectic/simulate.hpp"

namespace metaplectic {

// Text format:
//   qutrits: 2, ancillas: 0
//   SUM(0,1)
//   P1^5(1)    # comment
std::string circuit_to_text(const Circuit& c);
Circuit circuit_from_text(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// {"dim": d, "entries": [[re, im], ...]} row-major, values as decimal
/// strings or numbers. Nested rows are accepted too.
BigMatrix unitary_from_json(std::string_view text, long prec_bits);
std::string unitary_to_json(const BigMatrix& m, int digits = 40);

/// {"L": L, "entries": [[[a,b],...],...], "phase24": p (optional)}.
ExactMatrix exact_matrix_from_json(std::string_view text);
std::string exact_matrix_to_json(const ExactMatrix& m);

}  // namespace metaplectic
