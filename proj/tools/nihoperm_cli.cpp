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

// Command-line front end.
//
//   nihoperm verify --m 3
//   nihoperm sweep --m-max 14 --format csv
//   nihoperm lemma 4
//   nihoperm lemma 5 --m 5 --format json
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error,
// 3 exponent 11 not invertible modulo 2^m + 1.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nihoperm/io.hpp"
#include "nihoperm/nihoperm.hpp"

namespace {

using namespace nihoperm;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNotInvertible = 3;

enum class Format { kJson, kCsv, kHuman };

struct RunConfig {
  Format format = Format::kHuman;
  unsigned parallelism = 1;
  std::optional<std::string> field;
  unsigned bf_cap = 24;
  unsigned m_cap = 14;
  bool timing = true;
  std::map<unsigned, FieldSpec> table;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One `k=..,poly=0x..` per line; blank lines and `#` comments skipped.
std::map<unsigned, FieldSpec> LoadFieldTable(const char* path) {
  std::map<unsigned, FieldSpec> table;
  if (path == nullptr || *path == '\0') return table;
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string("cannot open field table ") + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    const FieldSpec spec = FieldSpec::Parse(line.substr(start, end - start + 1));
    if (!gf2x::IsIrreducible(spec.reduction_poly)) {
      throw ConfigError("field table entry " + spec.ToString() + " is reducible");
    }
    table[spec.degree] = spec;
  }
  return table;
}

Field FieldFor(const RunConfig& cfg, unsigned degree, bool allow_override) {
  if (allow_override && cfg.field) {
    const FieldSpec spec = FieldSpec::Parse(*cfg.field);
    if (spec.degree != degree) {
      throw ConfigError("--field has degree " + std::to_string(spec.degree) + ", need " + std::to_string(degree));
    }
    return Field(spec);
  }
  if (auto it = cfg.table.find(degree); it != cfg.table.end()) return Field(it->second);
  return Field::OfDegree(degree);
}

std::string Ms(std::chrono::nanoseconds d) {
  return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(d).count()) + " ms";
}

void RequireM(unsigned m, unsigned cap, const char* what) {
  if (m < 1) throw ConfigError(std::string(what) + ": m must be >= 1");
  if (m > cap) throw ConfigError(std::string(what) + ": m=" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
}

// ---------------------------------------------------------------- verify

int CmdVerify(const RunConfig& cfg, unsigned m) {
  RequireM(m, kMaxCircleM, "verify");
  ExponentPair e;
  try {
    e = ConjectureExponents(m);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kNotInvertible) throw;
    if (cfg.format == Format::kJson) {
      ordered_json j;
      j["m"] = m;
      j["regime"] = std::string(RegimeName(Regime::kNotInvertible));
      std::cout << j.dump() << "\n";
    } else if (cfg.format == Format::kHuman) {
      std::cout << "m=" << m << ": " << err.what() << "\n";
    }
    return kExitNotInvertible;
  }
  const Field field = FieldFor(cfg, 2 * m, true);
  const NihoTrinomial f(m, e.s, e.t);

  std::vector<VerifyReport> reports;
  std::vector<std::string> skipped;
  if (2 * m <= cfg.bf_cap) {
    PermOptions opts;
    opts.max_log_domain = cfg.bf_cap;
    opts.parallelism = cfg.parallelism;
    reports.push_back(VerifyTrinomialBruteforce(f, field, opts));
  } else {
    skipped.push_back("bruteforce skipped: 2^" + std::to_string(2 * m) + " exceeds --bf-cap 2^" +
                      std::to_string(cfg.bf_cap));
  }
  reports.push_back(VerifyTrinomialCriterion(f, field));

  bool all = true;
  for (const auto& r : reports) all = all && r.verdict;

  switch (cfg.format) {
    case Format::kJson:
      for (const auto& r : reports) std::cout << io::ToJson(r, cfg.timing).dump() << "\n";
      break;
    case Format::kCsv:
      std::cout << io::VerifyReportCsvHeader() << "\n";
      for (const auto& r : reports) std::cout << io::ToCsv(r, cfg.timing) << "\n";
      break;
    case Format::kHuman:
      std::cout << "m=" << m << " field " << field.spec().ToString() << " (s, t) = (" << e.s << ", " << e.t
                << ") regime " << RegimeName(ClassifyRegime(m)) << "\n";
      for (const auto& r : reports) {
        std::cout << "  " << VerifyMethodName(r.method) << ": " << (r.verdict ? "permutation" : "NOT a permutation")
                  << " over " << r.domain_size << " points";
        if (cfg.timing) std::cout << " in " << Ms(r.elapsed);
        if (r.witness) std::cout << "; witness " << io::ToJson(*r.witness).dump();
        std::cout << "\n";
      }
      for (const auto& s : skipped) std::cout << "  " << s << "\n";
      break;
  }
  return all ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- sweep

int CmdSweep(const RunConfig& cfg, unsigned m_max) {
  if (m_max < 1) throw ConfigError("sweep: --m-max must be >= 1");
  RequireM(m_max, cfg.m_cap, "sweep");
  if (cfg.field) throw ConfigError("sweep: --field applies to a single m; use NIHOPERM_FIELD_TABLE");
  if (cfg.format == Format::kCsv) std::cout << "m,regime,eq4_max,bruteforce,lemma1\n";
  bool ok = true;
  for (unsigned m = 1; m <= m_max; ++m) {
    const Regime regime = ClassifyRegime(m);
    const Field field = FieldFor(cfg, 2 * m, false);
    const UnitCircle circle(field, m);
    const auto counts = CircleRootCounts(circle, cfg.parallelism);
    const std::uint32_t max_count = *std::max_element(counts.begin(), counts.end());
    std::optional<bool> brute, crit;
    if (regime != Regime::kNotInvertible) {
      const auto f = NihoTrinomial::Conjecture(m);
      if (2 * m <= cfg.bf_cap) {
        PermOptions opts;
        opts.max_log_domain = cfg.bf_cap;
        opts.parallelism = cfg.parallelism;
        brute = VerifyTrinomialBruteforce(f, field, opts).verdict;
      }
      crit = VerifyTrinomialCriterion(f, field).verdict;
    }
    if (regime == Regime::kProved) {
      ok = ok && max_count == 1 && brute.value_or(true) && crit.value_or(false);
    }
    auto opt_json = [](std::optional<bool> v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
    auto opt_text = [](std::optional<bool> v) { return v ? std::string(*v ? "true" : "false") : std::string(); };
    switch (cfg.format) {
      case Format::kJson: {
        ordered_json j;
        j["m"] = m;
        j["regime"] = std::string(RegimeName(regime));
        j["eq4_max"] = max_count;
        j["bruteforce"] = opt_json(brute);
        j["lemma1"] = opt_json(crit);
        std::cout << j.dump() << "\n";
        break;
      }
      case Format::kCsv:
        std::cout << m << "," << RegimeName(regime) << "," << max_count << "," << opt_text(brute) << ","
                  << opt_text(crit) << "\n";
        break;
      case Format::kHuman:
        std::cout << "m=" << m << "  " << RegimeName(regime) << "  max roots on circle " << max_count
                  << "  bruteforce " << (brute ? opt_text(brute) : "-") << "  lemma1 " << (crit ? opt_text(crit) : "-")
                  << (regime == Regime::kOutOfTheorem ? "  (reported, not asserted)" : "") << "\n";
        break;
    }
  }
  return ok ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- lemma

void EmitSummary(const RunConfig& cfg, const ordered_json& summary) {
  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["summary"] = summary;
    std::cout << j.dump() << "\n";
  } else if (cfg.format == Format::kHuman) {
    for (const auto& [k, v] : summary.items()) std::cout << k << ": " << v.dump() << "\n";
  }
}

void EmitQuadRows(const RunConfig& cfg, const std::vector<QuadFactorReport>& rows, bool human_rows) {
  if (cfg.format == Format::kCsv) {
    std::cout << io::QuadFactorCsvHeader() << "\n";
    for (const auto& r : rows) std::cout << io::ToCsv(r) << "\n";
  } else if (cfg.format == Format::kJson) {
    for (const auto& r : rows) std::cout << io::ToJson(r).dump() << "\n";
  } else if (human_rows) {
    for (const auto& r : rows) std::cout << io::ToJson(r).dump() << "\n";
  }
}

constexpr unsigned kMaxExhaustiveM = 5;  // field size 2^10

int CmdLemma2(const RunConfig& cfg, unsigned m, bool exhaustive) {
  RequireM(m, cfg.m_cap, "lemma 2");
  const UnitCircle circle(FieldFor(cfg, 2 * m, true), m);
  ordered_json s;
  s["m"] = m;
  bool ok = true;
  if (m <= kMaxExhaustiveM) {
    const auto scan = QuadraticScan(circle, exhaustive, cfg.parallelism);
    EmitQuadRows(cfg, scan.rows, false);
    ok = scan.violations == 0;
    s["strategy"] = "exhaustive";
    s["triples"] = scan.triples;
    s["dividing"] = scan.dividing;
    s["violations"] = scan.violations;
  } else {
    if (exhaustive) throw ConfigError("lemma 2: --exhaustive is limited to m <= 5");
    const auto rows = CirclePairFactors(circle, cfg.parallelism);
    EmitQuadRows(cfg, rows, false);
    std::uint64_t violations = 0;
    for (const auto& r : rows) violations += !(r.cond1 || r.cond2 || r.cond3);
    ok = violations == 0;
    s["strategy"] = "root-pairing";
    s["dividing"] = rows.size();
    s["violations"] = violations;
  }
  s["holds"] = ok;
  EmitSummary(cfg, s);
  return ok ? kExitPass : kExitFail;
}

constexpr unsigned kMaxRelationScanM = 8;

int CmdLemma3(const RunConfig& cfg, unsigned m) {
  RequireM(m, kMaxRelationScanM, "lemma 3");
  const UnitCircle circle(FieldFor(cfg, 2 * m, true), m);
  const auto scan = RelationScan(circle, cfg.parallelism);
  const auto pairs = CircleQuadraticScan(circle, cfg.parallelism);
  const bool bridge = UVBridgeFormal();
  if (cfg.format == Format::kCsv) {
    std::cout << io::QuadFactorCsvHeader() << ",u,v,residual\n";
    for (const auto& r : scan.rows) std::cout << io::ToCsv(r.quad) << "," << io::ToCsv(r.uv) << "\n";
  } else if (cfg.format == Format::kJson) {
    for (const auto& r : scan.rows) {
      ordered_json j = io::ToJson(r.quad);
      for (const auto& [k, v] : io::ToJson(r.uv).items()) j[k] = v;
      std::cout << j.dump() << "\n";
    }
  }
  const bool ok = bridge && scan.nonzero_residuals == 0 && scan.case12_hits == 0 && pairs.relation_failures == 0;
  ordered_json s;
  s["m"] = m;
  s["bridge_formal"] = bridge;
  s["circle_pairs"] = pairs.pairs;
  s["relation_failures"] = pairs.relation_failures;
  s["candidates"] = scan.candidates;
  s["dividing"] = scan.rows.size();
  s["nonzero_residuals"] = scan.nonzero_residuals;
  s["case12_hits"] = scan.case12_hits;
  s["holds"] = ok;
  EmitSummary(cfg, s);
  return ok ? kExitPass : kExitFail;
}

int CmdLemma4(const RunConfig& cfg, unsigned m_ext) {
  RequireM(m_ext, kMaxCircleM, "lemma 4");
  const auto r = CheckGFactorization(m_ext);
  ordered_json h = ordered_json::array();
  for (Word theta : r.h) h.push_back(ToHex(theta));
  ordered_json s;
  s["m_ext"] = m_ext;
  s["h"] = h;
  s["slots_compared"] = r.slots_compared;
  s["slots_equal"] = r.slots_equal;
  s["identity"] = r.identity;
  if (cfg.format == Format::kCsv) {
    std::cout << "m_ext,slots_compared,slots_equal,identity\n"
              << m_ext << "," << r.slots_compared << "," << r.slots_equal << "," << (r.identity ? "true" : "false")
              << "\n";
  }
  EmitSummary(cfg, s);
  if (cfg.format == Format::kHuman) {
    std::cout << (r.identity ? "coefficient identity confirmed" : "coefficient identity FAILED") << "\n";
  }
  return r.identity ? kExitPass : kExitFail;
}

int CmdLemma5(const RunConfig& cfg, unsigned m) {
  RequireM(m, cfg.m_cap, "lemma 5");
  if (cfg.field) throw ConfigError("lemma 5 scans GF(2^m) under the default reduction polynomial; drop --field");
  const auto zeros = SearchGZeros(m, cfg.parallelism, cfg.m_cap);
  const bool five_divides = m % 5 == 0;
  if (cfg.format == Format::kCsv) {
    std::cout << "x,y\n";
    for (const auto& [x, y] : zeros) std::cout << ToHex(x) << "," << ToHex(y) << "\n";
  } else if (cfg.format == Format::kJson) {
    for (const auto& [x, y] : zeros) {
      ordered_json j;
      j["x"] = ToHex(x);
      j["y"] = ToHex(y);
      std::cout << j.dump() << "\n";
    }
  }
  ordered_json s;
  s["m"] = m;
  s["solutions"] = zeros.size();
  if (five_divides) s["expected"] = "5 | m";
  const bool ok = five_divides || zeros.empty();
  s["holds"] = ok;
  EmitSummary(cfg, s);
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation checks for Niho-type trinomials over GF(2^(2m))"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "human";
  std::string field;
  bool no_timing = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--parallelism", cfg.parallelism, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--field", field, "Field override, e.g. k=6,poly=0x43");
  app.add_option("--bf-cap", cfg.bf_cap, "Largest log2 domain for brute force")->check(CLI::Range(1u, 28u));
  app.add_option("--m-cap", cfg.m_cap, "Largest m for circle sweeps and scans")->check(CLI::Range(1u, 24u));
  app.add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");

  unsigned verify_m = 0;
  auto* verify = app.add_subcommand("verify", "Check the conjectured trinomial for one m");
  verify->add_option("--m", verify_m, "Half the field degree")->required();

  unsigned m_max = 0;
  auto* sweep = app.add_subcommand("sweep", "Summarize m = 1..m-max");
  sweep->add_option("--m-max", m_max, "Last m of the sweep")->required();

  unsigned which = 0;
  unsigned lemma_m = 0;
  unsigned m_ext = 5;
  bool exhaustive = false;
  auto* lemma = app.add_subcommand("lemma", "Run one of the structural checks (2, 3, 4 or 5)");
  lemma->add_option("which", which, "Which check")->required()->check(CLI::IsMember({2u, 3u, 4u, 5u}));
  lemma->add_option("--m", lemma_m, "Half the field degree (2, 3) or the subfield degree (5)");
  lemma->add_option("--m-ext", m_ext, "Field degree for check 4");
  lemma->add_flag("--exhaustive", exhaustive, "Emit every (a, b, t) triple for check 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kHuman;
    cfg.timing = !no_timing;
    if (!field.empty()) cfg.field = field;
    cfg.table = LoadFieldTable(std::getenv("NIHOPERM_FIELD_TABLE"));
    if (*verify) return CmdVerify(cfg, verify_m);
    if (*sweep) return CmdSweep(cfg, m_max);
    switch (which) {
      case 2: return CmdLemma2(cfg, lemma_m == 0 ? 2 : lemma_m, exhaustive);
      case 3: return CmdLemma3(cfg, lemma_m == 0 ? 3 : lemma_m);
      case 4: return CmdLemma4(cfg, m_ext);
      default: return CmdLemma5(cfg, lemma_m == 0 ? 5 : lemma_m);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotInvertible ? kExitNotInvertible : kExitConfig;
  }
}
