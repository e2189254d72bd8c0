#ifndef NCSIEVE_CLI_HPP
#define NCSIEVE_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abslen.hpp"
#include "cases.hpp"
#include "catalog.hpp"
#include "group.hpp"
#include "kernel.hpp"
#include "ncp.hpp"
#include "sieve.hpp"

namespace ncsieve::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

// Usage-level problems detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string group;
  std::string catalog;  // empty: NCSIEVE_CATALOG or the built-in directory
  int m = 1;
  std::string mode = "phi";
  std::vector<std::int64_t> ps;
  bool full = false;
  bool divisors_only = false;
  std::uint64_t budget = EnumOptions{}.budget;
  std::uint64_t solve_budget = SolveOptions{}.budget;
  unsigned threads = 1;
  bool allow_large = false;
  std::string format = "text";
  std::string output;
};

namespace detail {

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(what + ": bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

inline std::vector<std::string> parse_name_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::string tuple_string(const NcpTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

inline std::string matrix_string(const CMatrix& M) {
  std::string s = "[";
  for (std::size_t i = 0; i < M.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < M[i].size(); ++j) s += (j ? ", " : "") + M[i][j].to_string();
  }
  return s + "]";
}

}  // namespace detail

// Commands write to `out`; diagnostics go to `err`.
class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err) {}

  std::filesystem::path catalog_path() const {
    return cfg_.catalog.empty() ? catalog_dir() : std::filesystem::path(cfg_.catalog);
  }

  CatalogEntry entry() const {
    if (cfg_.group.empty()) throw UsageError("--group is required");
    std::filesystem::path p(cfg_.group);
    if (p.extension() == ".json" && std::filesystem::exists(p)) return load_catalog_file(p);
    return load_catalog(cfg_.group, catalog_path());
  }

  BuildOptions build_options() const {
    BuildOptions b;
    b.allow_large = cfg_.allow_large;
    return b;
  }

  EnumOptions enum_options() const { return {cfg_.budget, cfg_.threads}; }

  Action action() const {
    try {
      return parse_action(cfg_.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  void require_m() const {
    if (cfg_.m < 1) throw UsageError("--m must be positive");
  }

  int catalog(bool as_json) {
    std::vector<CatalogEntry> entries;
    if (!cfg_.group.empty()) {
      entries.push_back(entry());
    } else {
      for (auto& [n, e] : load_catalog_dir(catalog_path())) entries.push_back(std::move(e));
    }
    if (as_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : entries)
        arr.push_back({{"name", e.name},
                       {"rank", e.rank},
                       {"order", e.order.get_str()},
                       {"reflections", e.reflections.get_str()},
                       {"degrees", e.degrees},
                       {"codegrees", e.codegrees},
                       {"coxeter_number", e.coxeter_number()},
                       {"gate", e.gate}});
      out_ << arr.dump(2) << "\n";
      return kOk;
    }
    for (const auto& e : entries)
      out_ << e.name << "  rank " << e.rank << "  order " << e.order << "  degrees " << detail::join(e.degrees)
           << "  codegrees " << detail::join(e.codegrees) << "  h " << e.coxeter_number()
           << (e.gate == "none" ? "" : "  gate " + e.gate) << "\n";
    return kOk;
  }

  int group_verify() {
    const CatalogEntry e = entry();
    GroupContext ctx(e, build_options());
    GroupReport rep = verify_group_invariants(ctx.G);
    const int n = ctx.G.rank();
    bool lower = true, real_eq = true;
    const bool real = e.is_real();
    for (std::size_t w = 0; w < ctx.G.size(); ++w) {
      const int codim = n - ctx.G.fix_dim(static_cast<Elem>(w));
      lower = lower && ctx.L[w] >= codim;
      real_eq = real_eq && ctx.L[w] == codim;
    }
    rep.checks.push_back({"l_T(w) >= n - dim Fix(w)", lower, ""});
    if (real) rep.checks.push_back({"l_T(w) = n - dim Fix(w) (real group)", real_eq, ""});
    rep.checks.push_back({"Coxeter element: order h and l_T = n", is_coxeter_element(ctx.G, ctx.L, ctx.c),
                          "element " + std::to_string(ctx.c)});
    out_ << rep.group << ": order " << ctx.G.size() << ", " << ctx.G.reflections().size() << " reflections\n";
    for (const auto& c : rep.checks)
      out_ << (c.pass ? "  pass  " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
           << "\n";
    const bool pass = rep.pass();
    out_ << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kOk : kFail;
  }

  int catalan(std::optional<int> denom) {
    require_m();
    const CatalogEntry e = entry();
    out_ << "Cat^" << cfg_.m << "(" << e.name << ") = " << fuss_catalan(e, cfg_.m) << "\n";
    out_ << "Cat^" << cfg_.m << "(" << e.name << "; q) = " << qcatalan(e, cfg_.m).to_string() << "\n";
    if (!denom && cfg_.ps.empty()) return kOk;
    const int N = denom ? *denom : action_period(e, cfg_.m, action());
    std::vector<std::int64_t> ps = cfg_.ps;
    if (ps.empty())
      for (int p = 0; p < N; ++p) ps.push_back(p);
    for (auto p : ps) {
      RootEval r = cat_at_root(e, cfg_.m, N, p);
      out_ << "q = zeta_" << N << "^" << p << "  order " << r.M << "  |S1| " << r.S1.size() << "  |S2| "
           << r.S2.size() << "  value " << r.value << "\n";
    }
    return kOk;
  }

  int ncm(bool dump) {
    require_m();
    const CatalogEntry e = entry();
    GroupContext ctx(e, build_options());
    auto tuples = enumerate_ncm(ctx.G, ctx.c, ctx.L, cfg_.m, enum_options());
    const Integer expected = fuss_catalan(e, cfg_.m);
    const bool ok = Integer(static_cast<unsigned long>(tuples.size())) == expected;
    if (!dump) {
      out_ << tuples.size() << "\n";
    } else {
      std::set<Elem> used;
      for (const auto& t : tuples) used.insert(t.begin(), t.end());
      out_ << "# NC^" << cfg_.m << "(" << e.name << "): " << tuples.size() << " tuples (w0; w1 ... wm)\n";
      for (Elem w : used) out_ << "# " << w << " = " << detail::matrix_string(ctx.G.matrix(w)) << "\n";
      for (const auto& t : tuples) out_ << detail::tuple_string(t) << "\n";
    }
    if (!ok) err_ << "count " << tuples.size() << " differs from the Fuss-Catalan number " << expected << "\n";
    return ok ? kOk : kFail;
  }

  int csp() {
    require_m();
    if (cfg_.full && cfg_.divisors_only) throw UsageError("--full and --divisors-only are exclusive");
    CspOptions opt;
    opt.divisors_only = cfg_.divisors_only;
    opt.enumeration = enum_options();
    CspReport r = csp_verify(entry(), cfg_.m, action(), opt, build_options());
    if (cfg_.format == "json") {
      nlohmann::json j;
      j["group"] = r.group;
      j["m"] = r.m;
      j["mode"] = to_string(r.mode);
      j["entries"] = nlohmann::json::array();
      for (const auto& x : r.entries)
        j["entries"].push_back({{"p", x.p}, {"fix", std::to_string(x.fix)}, {"cat", x.cat.get_str()}, {"ok", x.ok}});
      j["pass"] = r.pass;
      out_ << j.dump(2) << "\n";
    } else if (cfg_.format == "csv") {
      out_ << "group,m,mode,p,fix,cat,ok\n";
      for (const auto& x : r.entries)
        out_ << r.group << "," << r.m << "," << to_string(r.mode) << "," << x.p << "," << x.fix << "," << x.cat
             << "," << (x.ok ? "true" : "false") << "\n";
    } else {
      out_ << r.group << " m=" << r.m << " " << to_string(r.mode) << "\n";
      for (const auto& x : r.entries)
        out_ << "  p=" << x.p << "  fix " << x.fix << "  cat " << x.cat << (x.ok ? "" : "  MISMATCH") << "\n";
      out_ << (r.pass ? "pass" : "FAIL") << "\n";
    }
    if (!r.pass)
      for (const auto& x : r.entries)
        if (!x.ok) err_ << "p=" << x.p << ": fix " << x.fix << " != cat " << x.cat << "\n";
    return r.pass ? kOk : kFail;
  }

  int fix(const std::string& method) {
    require_m();
    if (cfg_.ps.empty()) throw UsageError("--p is required");
    const CatalogEntry e = entry();
    const Action a = action();
    const int N = action_period(e, cfg_.m, a);
    GroupContext ctx(e, build_options());
    std::vector<NcpTuple> tuples;
    if (method == "enumerate") tuples = enumerate_ncm(ctx.G, ctx.c, ctx.L, cfg_.m, enum_options());
    bool pass = true;
    for (auto p : cfg_.ps) {
      if (p < 0) throw UsageError("--p must be nonnegative");
      const std::uint64_t f = method == "enumerate"
                                  ? fix_count(ctx.G, ctx.c, tuples, p, a, cfg_.threads)
                                  : fixed_tuples(ctx.G, ctx.c, ctx.L, cfg_.m, p, a).size();
      const RootEval r = cat_at_root(e, cfg_.m, N, p % N);
      const bool ok = r.value == static_cast<unsigned long>(f);
      pass = pass && ok;
      out_ << "p=" << p << "  fix " << f << "  cat " << r.value << (ok ? "" : "  MISMATCH") << "\n";
    }
    return pass ? kOk : kFail;
  }

  int solve(const TwistedSystem& sys, bool by_type) {
    GroupContext ctx(entry(), build_options());
    SolveOptions so;
    so.budget = cfg_.solve_budget;
    so.threads = cfg_.threads;
    auto sols = solve_twisted(ctx.G, ctx.c, ctx.L, sys, so);
    out_ << sols.size() << "\n";
    if (by_type && !sols.empty())
      for (std::size_t s = 0; s < sys.slots.size(); ++s)
        for (const auto& [t, n] : count_by_type(ctx.G, ctx.L, sols, static_cast<int>(s)))
          out_ << "  slot " << s << "  " << (t.empty() ? "1" : t) << "  " << n << "\n";
    return kOk;
  }

  int decomp(const std::vector<std::string>& types) {
    if (types.empty()) throw UsageError("--types is required");
    GroupContext ctx(entry(), build_options());
    out_ << decomposition_number(ctx.G, ctx.c, ctx.L, types) << "\n";
    return kOk;
  }

  int plan() {
    require_m();
    ReductionPlan r = reduction_plan(entry(), cfg_.m, action());
    if (cfg_.format == "json") {
      nlohmann::json j;
      j["group"] = r.group;
      j["m"] = r.m;
      j["mode"] = to_string(r.mode);
      j["entries"] = nlohmann::json::array();
      for (const auto& x : r.entries)
        j["entries"].push_back({{"p", x.p},
                                {"representative", x.representative},
                                {"m1", x.m1},
                                {"m2", x.m2},
                                {"h1", x.h1},
                                {"h2", x.h2},
                                {"status", to_string(x.status)}});
      j["brute_force"] = r.brute_force();
      out_ << j.dump(2) << "\n";
    } else if (cfg_.format == "csv") {
      out_ << "p,representative,m1,m2,h1,h2,status\n";
      for (const auto& x : r.entries)
        out_ << x.p << "," << x.representative << "," << x.m1 << "," << x.m2 << "," << x.h1 << "," << x.h2 << ","
             << to_string(x.status) << "\n";
    } else {
      out_ << r.group << " m=" << r.m << " " << to_string(r.mode) << "\n";
      for (const auto& x : r.entries)
        out_ << "  p=" << x.p << "  m1=" << x.m1 << " m2=" << x.m2 << " h1=" << x.h1 << " h2=" << x.h2 << "  "
             << to_string(x.status) << "\n";
      out_ << "brute force: {" << detail::join(r.brute_force(), ", ") << "}\n";
    }
    return kOk;
  }

  int cases(const std::string& file, const std::vector<std::string>& only) {
    auto rows = load_cases(file.empty() ? std::filesystem::path(NCSIEVE_CASES_FILE) : std::filesystem::path(file));
    if (!only.empty()) {
      std::erase_if(rows, [&](const CaseRow& r) {
        return std::find(only.begin(), only.end(), r.name) == only.end() &&
               std::find(only.begin(), only.end(), r.group) == only.end();
      });
    }
    CaseOptions opt;
    opt.allow_large = cfg_.allow_large;
    opt.threads = cfg_.threads;
    opt.catalog = catalog_path();
    CaseReport rep = run_case_regressions(rows, opt);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : rep.results) {
      ++counts[static_cast<int>(r.status)];
      out_ << to_string(r.status) << "  " << r.row->name << "  " << r.row->group << "  " << r.actual << "/"
           << r.row->expect << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
      if (r.status == CaseStatus::Fail)
        err_ << "case " << r.row->name << " (line " << r.row->line << "): " << r.detail << "\n";
    }
    out_ << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped, " << counts[3]
         << " refused\n";
    if (!rep.pass) return kFail;
    return counts[3] ? kBudget : kOk;
  }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Cyclic sieving for generalised non-crossing partitions", "ncsieve"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--catalog", cfg.catalog, "catalog directory (default: $NCSIEVE_CATALOG or the built-in one)");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "NC^m enumeration budget")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", cfg.allow_large, "allow gated large groups and case rows");
  app.add_option("-o,--output", cfg.output, "write the report to a file");

  auto add_group = [&](CLI::App* s) { s->add_option("--group", cfg.group, "catalog name or .json file")->required(); };
  auto add_m = [&](CLI::App* s) { s->add_option("--m", cfg.m, "Fuss parameter m >= 1")->required(); };
  auto add_mode = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--mode", cfg.mode, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* s_catalog = app.add_subcommand("catalog", "list catalog entries");
  s_catalog->add_option("--group", cfg.group, "a single entry");
  bool catalog_json = false;
  s_catalog->add_flag("--json", catalog_json, "JSON output");

  auto* s_verify = app.add_subcommand("group-verify", "build a group and check its invariants");
  add_group(s_verify);

  auto* s_catalan = app.add_subcommand("catalan", "Fuss-Catalan number, its q-analogue and root evaluations");
  add_group(s_catalan);
  add_m(s_catalan);
  add_mode(s_catalan, false);
  std::optional<int> denom;
  s_catalan->add_option("--denom", denom, "evaluate at powers of zeta_denom (mh or (m+1)h)");
  std::string catalan_ps;
  s_catalan->add_option("--p", catalan_ps, "comma-separated exponents");

  auto* s_ncm = app.add_subcommand("ncm", "enumerate NC^m(W)");
  add_group(s_ncm);
  add_m(s_ncm);
  bool ncm_count = false, ncm_dump = false;
  auto* o_count = s_ncm->add_flag("--count", ncm_count, "print the number of tuples");
  auto* o_dump = s_ncm->add_flag("--dump", ncm_dump, "print every tuple");
  o_count->excludes(o_dump);

  auto* s_csp = app.add_subcommand("csp", "verify the cyclic sieving phenomenon");
  add_group(s_csp);
  add_m(s_csp);
  add_mode(s_csp, true);
  add_format(s_csp);
  s_csp->add_flag("--full", cfg.full, "every p in the period (default)");
  s_csp->add_flag("--divisors-only", cfg.divisors_only, "only p = 0 and divisors of the period");

  auto* s_fix = app.add_subcommand("fix", "fixed points of a power of the action");
  add_group(s_fix);
  add_m(s_fix);
  add_mode(s_fix, true);
  std::string fix_ps;
  s_fix->add_option("--p", fix_ps, "comma-separated exponents")->required();
  std::string fix_method = "search";
  s_fix->add_option("--method", fix_method, "search (constrained) or enumerate (all of NC^m)")
      ->check(CLI::IsMember({"search", "enumerate"}));

  auto* s_solve = app.add_subcommand("solve", "count solutions of a twisted equation");
  add_group(s_solve);
  std::string exps, relation = "eq", len;
  std::int64_t commute = 0;
  bool by_type = false;
  s_solve->add_option("--exps", exps, "conjugation exponents e0,e1,...")->required();
  s_solve->add_option("--relation", relation, "eq or leq")->check(CLI::IsMember({"eq", "leq"}));
  s_solve->add_option("--len", len, "absolute length n or range a-b")->required();
  s_solve->add_option("--commute", commute, "also require w = c^k w c^-k");
  s_solve->add_option("--solve-budget", cfg.solve_budget, "search budget")->check(CLI::PositiveNumber);
  s_solve->add_flag("--by-type", by_type, "tally solutions by parabolic type");

  auto* s_decomp = app.add_subcommand("decomp", "decomposition number N_W(T1, ..., Td)");
  add_group(s_decomp);
  std::string types;
  s_decomp->add_option("--types", types, "comma-separated parabolic types, e.g. A2,A1")->required();

  auto* s_plan = app.add_subcommand("plan", "divisor reduction plan");
  add_group(s_plan);
  add_m(s_plan);
  add_mode(s_plan, true);
  add_format(s_plan);

  auto* s_cases = app.add_subcommand("cases", "run the twisted-equation regression table");
  std::string case_file;
  std::string case_only;
  s_cases->add_option("--file", case_file, "case table (default: the shipped one)");
  s_cases->add_option("--only", case_only, "comma-separated row names or groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "ncsieve: cannot write " << cfg.output << "\n";
      return kUsage;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    if (!catalan_ps.empty()) cfg.ps = detail::parse_int_list(catalan_ps, "--p");
    if (!fix_ps.empty()) cfg.ps = detail::parse_int_list(fix_ps, "--p");
    Runner r(cfg, sink, err);
    if (*s_catalog) return r.catalog(catalog_json);
    if (*s_verify) return r.group_verify();
    if (*s_catalan) return r.catalan(denom);
    if (*s_ncm) return r.ncm(ncm_dump);
    if (*s_csp) return r.csp();
    if (*s_fix) return r.fix(fix_method);
    if (*s_solve) {
      auto [lo, hi] = ncsieve::detail::parse_length(len, "--len: ");
      TwistedSystem sys;
      sys.relation = parse_relation(relation);
      sys.slots.push_back({lo, hi, commute});
      for (auto e : detail::parse_int_list(exps, "--exps")) sys.factors.push_back({0, e});
      sys.validate();
      return r.solve(sys, by_type);
    }
    if (*s_decomp) return r.decomp(detail::parse_name_list(types));
    if (*s_plan) return r.plan();
    if (*s_cases) return r.cases(case_file, detail::parse_name_list(case_only));
  } catch (const BudgetError& e) {
    err << "ncsieve: budget refusal: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    err << "ncsieve: " << e.what() << "\n";
    return kUsage;
  } catch (const CatalogError& e) {
    err << "ncsieve: " << e.what() << "\n";
    return kUsage;
  } catch (const CaseParseError& e) {
    err << "ncsieve: " << e.what() << "\n";
    return kUsage;
  } catch (const KernelError& e) {
    err << "ncsieve: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "ncsieve: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "ncsieve: check failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace ncsieve::cli

#endif
