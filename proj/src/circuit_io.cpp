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

#include "metaplectic/circuit_io.hpp"

#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "metaplectic/error.hpp"

namespace metaplectic {

using nlohmann::json;

std::string circuit_to_text(const Circuit& c) {
  std::string out = "qutrits: " + std::to_string(c.width) + ", ancillas: " +
                    std::to_string(c.ancillas) + "\n";
  for (const Gate& g : c.gates) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  static const std::regex header(R"(^\s*qutrits:\s*(\d+)\s*,\s*ancillas:\s*(\d+)\s*$)");
  static const std::regex gate_re(
      R"(^\s*([A-Z0-9_]+)(\^(\d+))?\(\s*(\d+)\s*(,\s*(\d+)\s*)?\)\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  Circuit c;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (!have_header) {
      if (!std::regex_match(line, m, header))
        throw InputError("line " + std::to_string(lineno) + ": expected 'qutrits: n, ancillas: m'");
      c = Circuit(std::stoi(m[1]), std::stoi(m[2]));
      if (c.width < 1) throw InputError("circuit needs at least one qutrit");
      have_header = true;
      continue;
    }
    if (!std::regex_match(line, m, gate_re))
      throw InputError("line " + std::to_string(lineno) + ": cannot parse gate '" + line + "'");
    auto kind = gate_kind_from_name(m[1].str());
    if (!kind) throw InputError("line " + std::to_string(lineno) + ": unknown gate " + m[1].str());
    Gate g{*kind, m[3].matched ? std::stoi(m[3]) : 1, std::stoi(m[4]),
           m[6].matched ? std::stoi(m[6]) : -1};
    try {
      c.add(g);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw InputError("empty circuit file");
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

BigFloat parse_number(const json& v, long prec) {
  if (v.is_string()) return BigFloat::parse(v.get<std::string>(), prec);
  if (v.is_number()) return BigFloat::parse(v.dump(), prec);
  throw InputError("expected a number or decimal string, got " + v.dump());
}

BigInt parse_int(const json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_number_integer()) s = v.dump();
  else throw InputError("expected an integer, got " + v.dump());
  BigInt r;
  if (r.set_str(s, 10) != 0) throw InputError("bad integer '" + s + "'");
  return r;
}

}  // namespace

BigMatrix unitary_from_json(std::string_view text, long prec_bits) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("entries")) throw InputError("unitary JSON needs 'entries'");
  const json& e = j["entries"];
  if (!e.is_array() || e.empty()) throw InputError("'entries' must be a non-empty array");
  std::vector<const json*> flat;
  // Nested rows, either of [re, im] pairs or of plain reals.
  bool nested = e[0].is_array() && !e[0].empty() &&
                (e[0][0].is_array() || e[0].size() == e.size());
  if (nested) {
    for (const auto& row : e) {
      if (!row.is_array() || row.size() != e.size()) throw InputError("nested rows must be square");
      for (const auto& x : row) flat.push_back(&x);
    }
  } else {
    for (const auto& x : e) flat.push_back(&x);
  }
  long dim = j.contains("dim") ? j["dim"].get<long>() : static_cast<long>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (dim <= 0 || static_cast<long>(flat.size()) != dim * dim)
    throw InputError("entry count does not match dim*dim");
  BigMatrix m(dim, dim, prec_bits);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      const json& x = *flat[static_cast<std::size_t>(r * dim + c)];
      if (x.is_array() && x.size() == 2) {
        m(r, c) = BigComplex(parse_number(x[0], prec_bits), parse_number(x[1], prec_bits));
      } else if (x.is_number() || x.is_string()) {
        m(r, c) = BigComplex(parse_number(x, prec_bits), BigFloat::zero(prec_bits));
      } else {
        throw InputError("matrix entry must be [re, im], got " + x.dump());
      }
    }
  return m;
}

std::string unitary_to_json(const BigMatrix& m, int digits) {
  json entries = json::array();
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c)
      entries.push_back({m(r, c).re.to_string(digits), m(r, c).im.to_string(digits)});
  json j = {{"dim", m.rows}, {"entries", entries}};
  return j.dump();
}

ExactMatrix exact_matrix_from_json(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("entries") || !j.contains("L"))
    throw InputError("exact matrix JSON needs 'L' and 'entries'");
  const json& e = j["entries"];
  if (!e.is_array() || e.empty()) throw InputError("'entries' must be a non-empty array");
  long dim = static_cast<long>(e.size());
  ExactMatrix m(dim, dim);
  m.L = j["L"].get<long>();
  if (m.L < 0) throw InputError("L must be non-negative");
  m.phase24 = j.contains("phase24") ? j["phase24"].get<int>() : 0;
  for (long r = 0; r < dim; ++r) {
    if (!e[r].is_array() || static_cast<long>(e[r].size()) != dim)
      throw InputError("exact matrix must be square");
    for (long c = 0; c < dim; ++c) {
      const json& x = e[r][c];
      if (!x.is_array() || x.size() != 2) throw InputError("entry must be [a, b]");
      m(r, c) = EisensteinInt(parse_int(x[0]), parse_int(x[1]));
    }
  }
  return m;
}

std::string exact_matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols; ++c) row.push_back({m(r, c).a.get_str(), m(r, c).b.get_str()});
    rows.push_back(row);
  }
  json j = {{"L", m.L}, {"phase24", m.phase24}, {"entries", rows}};
  return j.dump();
}

}  // namespace metaplectic
