// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON-lines and CSV encodings of reports. Field elements are written as
// hex coefficient bitvectors ("0x1f"); field order follows the structs.

#pragma once

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

#include "nihoperm/field.hpp"
#include "nihoperm/analysis.hpp"
#include "nihoperm/perm.hpp"

namespace nihoperm::io {

using nlohmann::ordered_json;

inline ordered_json ToJson(const Witness& w) {
  ordered_json j;
  if (w.kind == WitnessKind::kCollision) {
    j["kind"] = "collision";
    j["x1"] = ToHex(w.first);
    j["x2"] = ToHex(w.second);
  } else {
    j["kind"] = "off-target";
    j["x"] = ToHex(w.first);
  }
  j["image"] = ToHex(w.image);
  return j;
}

/// `{method, verdict, witness, domain_size, elapsed_ms}`. With
/// include_timing = false elapsed_ms is written as 0 so output is
/// byte-stable across runs.
inline ordered_json ToJson(const VerifyReport& r, bool include_timing = true) {
  ordered_json j;
  j["method"] = std::string(VerifyMethodName(r.method));
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? ToJson(*r.witness) : ordered_json(nullptr);
  j["domain_size"] = r.domain_size;
  j["elapsed_ms"] =
      include_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() : std::int64_t{0};
  return j;
}

inline ordered_json ToJson(const QuadFactorReport& q) {
  ordered_json j;
  j["a"] = ToHex(q.a);
  j["b"] = ToHex(q.b);
  j["t"] = ToHex(q.t);
  j["divides"] = q.divides;
  j["cond1"] = q.cond1;
  j["cond2"] = q.cond2;
  j["cond3"] = q.cond3;
  j["circle_roots"] = q.circle_roots;
  j["relation_holds"] = q.relation_holds;
  return j;
}

inline ordered_json ToJson(const UVPair& p) {
  ordered_json j;
  j["u"] = ToHex(p.u);
  j["v"] = ToHex(p.v);
  j["residual"] = ToHex(p.residual);
  return j;
}

inline const char* CsvBool(bool b) { return b ? "true" : "false"; }

inline std::string QuadFactorCsvHeader() { return "a,b,t,divides,cond1,cond2,cond3,circle_roots,relation_holds"; }

inline std::string ToCsv(const QuadFactorReport& q) {
  return ToHex(q.a) + "," + ToHex(q.b) + "," + ToHex(q.t) + "," + CsvBool(q.divides) + "," + CsvBool(q.cond1) + "," +
         CsvBool(q.cond2) + "," + CsvBool(q.cond3) + "," + std::to_string(q.circle_roots) + "," +
         CsvBool(q.relation_holds);
}

inline std::string UVPairCsvHeader() { return "u,v,residual"; }

inline std::string ToCsv(const UVPair& p) { return ToHex(p.u) + "," + ToHex(p.v) + "," + ToHex(p.residual); }

inline std::string VerifyReportCsvHeader() { return "method,verdict,witness,domain_size,elapsed_ms"; }

inline std::string ToCsv(const VerifyReport& r, bool include_timing = true) {
  std::string witness;
  if (r.witness) {
    witness = r.witness->kind == WitnessKind::kCollision
                  ? ToHex(r.witness->first) + ";" + ToHex(r.witness->second) + "->" + ToHex(r.witness->image)
                  : ToHex(r.witness->first) + "->" + ToHex(r.witness->image);
  }
  const auto ms = include_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() : 0;
  return std::string(VerifyMethodName(r.method)) + "," + CsvBool(r.verdict) + "," + witness + "," +
         std::to_string(r.domain_size) + "," + std::to_string(ms);
}

}  // namespace nihoperm::io
