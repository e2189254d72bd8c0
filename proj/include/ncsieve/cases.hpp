#ifndef NCSIEVE_CASES_HPP
#define NCSIEVE_CASES_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "kernel.hpp"

#ifndef NCSIEVE_CASES_FILE
#define NCSIEVE_CASES_FILE "cases/cases.txt"
#endif

namespace ncsieve {

class CaseParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CaseRow {
  int line = 0;
  std::string name;
  std::string group;
  std::string mode;  // informational: phi or psi
  std::string p;     // informational: the p-expression
  TwistedSystem system;
  std::uint64_t expect = 0;
  bool large = false;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw CaseParseError(where + "bad integer '" + s + "'");
  return v;
}

// "2" or "1-2"
inline std::pair<int, int> parse_length(const std::string& s, const std::string& where) {
  auto dash = s.find('-', 1);
  if (dash == std::string::npos) {
    int v = static_cast<int>(parse_int(s, where));
    return {v, v};
  }
  return {static_cast<int>(parse_int(s.substr(0, dash), where)),
          static_cast<int>(parse_int(s.substr(dash + 1), where))};
}

}  // namespace detail

// One record per line: whitespace-separated key=value fields; '#' starts a comment.
inline std::vector<CaseRow> parse_cases(std::istream& in, const std::string& source = "cases") {
  std::vector<CaseRow> rows;
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::stringstream ss(text);
    std::map<std::string, std::string> kv;
    std::string field;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    while (ss >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0) throw CaseParseError(where + "expected key=value, got '" + field + "'");
      auto key = field.substr(0, eq);
      if (kv.count(key)) throw CaseParseError(where + "duplicate key '" + key + "'");
      kv[key] = field.substr(eq + 1);
    }
    if (kv.empty()) continue;
    static const std::vector<std::string> known = {"name", "group", "mode", "p", "relation", "exps",
                                                   "len", "commute", "slots", "factors", "expect", "gate"};
    for (const auto& [k, v] : kv)
      if (std::find(known.begin(), known.end(), k) == known.end())
        throw CaseParseError(where + "unknown key '" + k + "'");
    for (const char* req : {"name", "group", "relation", "expect"})
      if (!kv.count(req)) throw CaseParseError(where + "missing required key '" + req + "'");
    CaseRow row;
    row.line = lineno;
    row.name = kv["name"];
    row.group = kv["group"];
    row.mode = kv.count("mode") ? kv["mode"] : "phi";
    row.p = kv.count("p") ? kv["p"] : "";
    if (row.mode != "phi" && row.mode != "psi") throw CaseParseError(where + "mode must be phi or psi");
    try {
      row.system.relation = parse_relation(kv["relation"]);
    } catch (const std::invalid_argument& e) {
      throw CaseParseError(where + e.what());
    }
    std::int64_t expect = detail::parse_int(kv["expect"], where);
    if (expect < 0) throw CaseParseError(where + "expect must be nonnegative");
    row.expect = static_cast<std::uint64_t>(expect);
    if (kv.count("gate")) {
      if (kv["gate"] != "large" && kv["gate"] != "none") throw CaseParseError(where + "gate must be large or none");
      row.large = kv["gate"] == "large";
    }
    const bool single = kv.count("exps") > 0;
    const bool multi = kv.count("slots") > 0 || kv.count("factors") > 0;
    if (single == multi) throw CaseParseError(where + "give either exps= (one unknown) or slots= and factors=");
    if (single) {
      if (!kv.count("len")) throw CaseParseError(where + "exps= needs len=");
      auto [lo, hi] = detail::parse_length(kv["len"], where);
      TwistedSlot slot{lo, hi, kv.count("commute") ? detail::parse_int(kv["commute"], where) : 0};
      row.system.slots.push_back(slot);
      for (const auto& e : detail::split(kv["exps"], ','))
        row.system.factors.push_back({0, detail::parse_int(e, where)});
    } else {
      if (!kv.count("slots") || !kv.count("factors")) throw CaseParseError(where + "slots= and factors= go together");
      if (kv.count("len") || kv.count("commute")) throw CaseParseError(where + "len=/commute= belong in slots=");
      // slots=len[:commute],...   factors=slot^exp,...
      for (const auto& s : detail::split(kv["slots"], ',')) {
        auto parts = detail::split(s, ':');
        if (parts.empty() || parts.size() > 2) throw CaseParseError(where + "bad slot '" + s + "'");
        auto [lo, hi] = detail::parse_length(parts[0], where);
        row.system.slots.push_back({lo, hi, parts.size() == 2 ? detail::parse_int(parts[1], where) : 0});
      }
      for (const auto& f : detail::split(kv["factors"], ',')) {
        auto parts = detail::split(f, '^');
        if (parts.size() != 2) throw CaseParseError(where + "bad factor '" + f + "' (expected slot^exponent)");
        row.system.factors.push_back({static_cast<int>(detail::parse_int(parts[0], where)),
                                      detail::parse_int(parts[1], where)});
      }
    }
    try {
      row.system.validate();
    } catch (const KernelError& e) {
      throw CaseParseError(where + e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<CaseRow> load_cases(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CaseParseError("cannot open case table " + path.string());
  return parse_cases(in, path.string());
}

enum class CaseStatus { Pass, Fail, Skipped, Refused };

inline std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "FAIL";
    case CaseStatus::Skipped: return "skipped";
    case CaseStatus::Refused: return "refused";
  }
  return "?";
}

struct CaseResult {
  const CaseRow* row = nullptr;
  std::uint64_t actual = 0;
  CaseStatus status = CaseStatus::Skipped;
  std::string detail;
};

struct CaseReport {
  std::vector<CaseResult> results;
  bool pass = true;  // no failures; skipped rows do not count
};

struct CaseOptions {
  bool allow_large = false;
  unsigned threads = 1;
  std::filesystem::path catalog = catalog_dir();
};

inline CaseReport run_case_regressions(const std::vector<CaseRow>& rows, const CaseOptions& opt = {}) {
  CaseReport report;
  std::map<std::string, std::unique_ptr<GroupContext>> groups;
  for (const auto& row : rows) {
    CaseResult r;
    r.row = &row;
    if (row.large && !opt.allow_large) {
      r.status = CaseStatus::Skipped;
      r.detail = "gated: needs --allow-large";
      report.results.push_back(r);
      continue;
    }
    try {
      auto& ctx = groups[row.group];
      if (!ctx) {
        BuildOptions b;
        b.allow_large = opt.allow_large;
        ctx = std::make_unique<GroupContext>(load_catalog(row.group, opt.catalog), b);
      }
      SolveOptions so;
      so.threads = opt.threads;
      r.actual = solve_twisted(ctx->G, ctx->c, ctx->L, row.system, so).size();
      r.status = r.actual == row.expect ? CaseStatus::Pass : CaseStatus::Fail;
      if (r.status == CaseStatus::Fail)
        r.detail = "expected " + std::to_string(row.expect) + ", found " + std::to_string(r.actual);
    } catch (const BudgetError& e) {
      r.status = CaseStatus::Refused;
      r.detail = e.what();
    }
    report.pass = report.pass && r.status != CaseStatus::Fail;
    report.results.push_back(r);
  }
  return report;
}

}  // namespace ncsieve

#endif
