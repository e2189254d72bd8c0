#ifndef NCSIEVE_SIEVE_HPP
#define NCSIEVE_SIEVE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "abslen.hpp"
#include "ncp.hpp"
#include "parallel.hpp"

namespace ncsieve {

enum class Action { Phi, Psi };

inline std::string to_string(Action a) { return a == Action::Phi ? "phi" : "psi"; }

inline Action parse_action(const std::string& s) {
  if (s == "phi") return Action::Phi;
  if (s == "psi") return Action::Psi;
  throw std::invalid_argument("unknown mode '" + s + "' (expected phi or psi)");
}

// mh for phi, (m+1)h for psi.
inline int action_period(const CatalogEntry& e, int m, Action a) {
  return (a == Action::Phi ? m : m + 1) * e.coxeter_number();
}

// Slot j of action^p(t) is c^exp[j] t[src[j]] c^-exp[j]; for phi slot 0 is the completing element.
struct SlotMap {
  std::vector<int> src;
  std::vector<std::int64_t> exp;
};

inline SlotMap slot_map(int m, std::int64_t p, Action a) {
  if (p < 0) throw std::invalid_argument("action power must be nonnegative");
  SlotMap s;
  s.src.assign(m + 1, 0);
  s.exp.assign(m + 1, 0);
  if (a == Action::Phi) {
    const std::int64_t q = p / m, b = p % m;
    for (int j = 1; j <= m; ++j) {
      if (j <= b) {
        s.src[j] = static_cast<int>(m - b + j);
        s.exp[j] = q + 1;
      } else {
        s.src[j] = static_cast<int>(j - b);
        s.exp[j] = q;
      }
    }
  } else {
    const std::int64_t q = p / (m + 1), b = p % (m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j < b) {
        s.src[j] = static_cast<int>(m - b + 1 + j);
        s.exp[j] = q + 1;
      } else {
        s.src[j] = static_cast<int>(j - b);
        s.exp[j] = q;
      }
    }
  }
  return s;
}

inline NcpTuple apply_slot_map(const ReflectionGroup& G, Elem c, const NcpTuple& t, const SlotMap& s,
                               Action a) {
  const int m = static_cast<int>(t.size()) - 1;
  NcpTuple out(t.size());
  const int first = a == Action::Phi ? 1 : 0;
  for (int j = first; j <= m; ++j) out[j] = G.conjugate(t[s.src[j]], c, s.exp[j]);
  if (a == Action::Phi) {
    Elem rest = ReflectionGroup::identity();
    for (int j = 1; j <= m; ++j) rest = G.mult(rest, out[j]);
    out[0] = G.mult(c, G.inverse(rest));
  }
  return out;
}

inline NcpTuple phi_apply(const ReflectionGroup& G, Elem c, const NcpTuple& t, std::int64_t p) {
  const int m = static_cast<int>(t.size()) - 1;
  if (m < 1) throw std::invalid_argument("phi_apply: tuple needs m >= 1");
  return apply_slot_map(G, c, t, slot_map(m, p, Action::Phi), Action::Phi);
}

inline NcpTuple psi_apply(const ReflectionGroup& G, Elem c, const NcpTuple& t, std::int64_t p) {
  const int m = static_cast<int>(t.size()) - 1;
  if (m < 1) throw std::invalid_argument("psi_apply: tuple needs m >= 1");
  return apply_slot_map(G, c, t, slot_map(m, p, Action::Psi), Action::Psi);
}

inline NcpTuple action_apply(const ReflectionGroup& G, Elem c, const NcpTuple& t, std::int64_t p, Action a) {
  return a == Action::Phi ? phi_apply(G, c, t, p) : psi_apply(G, c, t, p);
}

// Direct application over a precomputed NC^m list.
inline std::uint64_t fix_count(const ReflectionGroup& G, Elem c, const std::vector<NcpTuple>& tuples,
                               std::int64_t p, Action a, unsigned threads = 1) {
  if (tuples.empty()) return 0;
  const int m = static_cast<int>(tuples[0].size()) - 1;
  const SlotMap s = slot_map(m, p, a);
  const std::size_t chunk = 4096;
  const std::size_t blocks = (tuples.size() + chunk - 1) / chunk;
  auto counts = parallel_map<std::uint64_t>(blocks, threads, [&](std::size_t b) {
    std::uint64_t k = 0;
    const std::size_t end = std::min(tuples.size(), (b + 1) * chunk);
    for (std::size_t i = b * chunk; i < end; ++i)
      if (apply_slot_map(G, c, tuples[i], s, a) == tuples[i]) ++k;
    return k;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

inline std::uint64_t fix_count(const ReflectionGroup& G, Elem c, const LengthTable& L, int m, std::int64_t p,
                               Action a, const EnumOptions& opt = {}) {
  return fix_count(G, c, enumerate_ncm(G, c, L, m, opt), p, a, opt.threads);
}

namespace detail {

// Fixed tuples built cycle by cycle of the slot permutation, with prefix pruning.
struct FixedSearch {
  const ReflectionGroup& G;
  const LengthTable& L;
  Elem c;
  int m;
  Action a;
  SlotMap s;
  std::vector<Elem> pool;             // interval elements
  std::vector<std::vector<int>> cycle;  // per slot, slots of its cycle in fill order (rep first)
  std::vector<std::int64_t> cycle_exp;  // per rep, total exponent around the cycle
  std::vector<int> rep;
  NcpTuple cur;
  std::vector<char> set;
  std::vector<NcpTuple> out;

  FixedSearch(const ReflectionGroup& g, const LengthTable& l, Elem cc, int mm, std::int64_t p, Action act)
      : G(g), L(l), c(cc), m(mm), a(act), s(slot_map(mm, p, act)), pool(interval(g, l, cc)) {
    const int first = a == Action::Phi ? 1 : 0;
    std::vector<int> dst(m + 1, -1);
    for (int j = first; j <= m; ++j) dst[s.src[j]] = j;
    cycle.assign(m + 1, {});
    cycle_exp.assign(m + 1, 0);
    rep.assign(m + 1, -1);
    for (int j = first; j <= m; ++j) {
      if (rep[j] != -1) continue;
      // rep j; successors k with src[k] = previous determine w_k = c^exp[k] w_src c^-exp[k]
      int k = j;
      std::int64_t total = 0;
      do {
        rep[k] = j;
        cycle[j].push_back(k);
        k = dst[k];
        total += s.exp[k];
      } while (k != j);
      cycle_exp[j] = total;
    }
    cur.assign(m + 1, ReflectionGroup::identity());
    set.assign(m + 1, 0);
  }

  void run() { step(a == Action::Phi ? 1 : 0, ReflectionGroup::identity(), 0); }

  // Slots below j are set; prefix is their product, used its total length.
  void step(int j, Elem prefix, int used) {
    const int n = L[c];
    while (j <= m && set[j]) {
      prefix = G.mult(prefix, cur[j]);
      used += L[cur[j]];
      ++j;
    }
    if (L[prefix] != used || !leq_T(G, L, prefix, c)) return;
    if (j > m) {
      finish(prefix, used);
      return;
    }
    const auto& cyc = cycle[j];
    const int k = static_cast<int>(cyc.size());
    for (Elem w : pool) {
      if (used + k * L[w] > n) continue;
      if (G.conjugate(w, c, cycle_exp[j]) != w) continue;
      Elem x = w;
      for (int i = 0; i < k; ++i) {
        if (i > 0) x = G.conjugate(x, c, s.exp[cyc[i]]);
        cur[cyc[i]] = x;
        set[cyc[i]] = 1;
      }
      step(j, prefix, used);
      for (int slot : cyc) set[slot] = 0;
    }
  }

  void finish(Elem prefix, int used) {
    if (a == Action::Phi) {
      cur[0] = G.mult(c, G.inverse(prefix));
      if (used + L[cur[0]] != L[c]) return;
    } else if (prefix != c || used != L[c]) {
      return;
    }
    out.push_back(cur);
  }
};

}  // namespace detail

// Fix(action^p) without enumerating NC^m; usable for large m.
inline std::vector<NcpTuple> fixed_tuples(const ReflectionGroup& G, Elem c, const LengthTable& L, int m,
                                          std::int64_t p, Action a) {
  if (m < 1) throw std::invalid_argument("fixed_tuples: m must be positive");
  detail::FixedSearch f(G, L, c, m, p, a);
  f.run();
  std::sort(f.out.begin(), f.out.end());
  return std::move(f.out);
}

struct CspEntry {
  std::int64_t p = 0;
  std::uint64_t fix = 0;
  Integer cat;
  bool ok = false;
};

struct CspReport {
  std::string group;
  int m = 1;
  Action mode = Action::Phi;
  std::vector<CspEntry> entries;
  bool pass = true;
};

struct CspOptions {
  bool divisors_only = false;
  EnumOptions enumeration;
};

inline CspReport csp_verify(const ReflectionGroup& G, Elem c, const LengthTable& L, int m, Action a,
                            const CspOptions& opt = {}) {
  const CatalogEntry& e = G.entry();
  const int N = action_period(e, m, a);
  CspReport r{e.name, m, a, {}, true};
  auto tuples = enumerate_ncm(G, c, L, m, opt.enumeration);
  for (int p = 0; p < N; ++p) {
    if (opt.divisors_only && p != 0 && N % p != 0) continue;
    CspEntry x;
    x.p = p;
    x.fix = fix_count(G, c, tuples, p, a, opt.enumeration.threads);
    x.cat = cat_at_root(e, m, N, p).value;
    x.ok = Integer(std::to_string(x.fix)) == x.cat;
    r.pass = r.pass && x.ok;
    r.entries.push_back(std::move(x));
  }
  return r;
}

inline CspReport csp_verify(const CatalogEntry& e, int m, Action a, const CspOptions& opt = {},
                            const BuildOptions& build = {}) {
  GroupContext ctx(e, build);
  return csp_verify(ctx.G, ctx.c, ctx.L, m, a, opt);
}

enum class PlanStatus { GcdReduced, MDividesP, PDividesM, DegreeObstruction, SpreadExceedsRank, BruteForce };

inline std::string to_string(PlanStatus s) {
  switch (s) {
    case PlanStatus::GcdReduced: return "gcd-reduced";
    case PlanStatus::MDividesP: return "m-divides-p";
    case PlanStatus::PDividesM: return "p-divides-m";
    case PlanStatus::DegreeObstruction: return "h2-not-dividing-degrees";
    case PlanStatus::SpreadExceedsRank: return "m2-exceeds-rank";
    case PlanStatus::BruteForce: return "brute-force";
  }
  return "?";
}

// p = m1*h1 with M = m1*m2 (M = m or m+1), h = h1*h2.
struct PlanEntry {
  int p = 0;
  int representative = 0;  // gcd(p, period) for reduced entries, else p
  int m1 = 0, m2 = 0, h1 = 0, h2 = 0;
  PlanStatus status = PlanStatus::BruteForce;
};

struct ReductionPlan {
  std::string group;
  int m = 1;
  Action mode = Action::Phi;
  std::vector<PlanEntry> entries;

  std::vector<int> brute_force() const {
    std::vector<int> out;
    for (const auto& x : entries)
      if (x.status == PlanStatus::BruteForce) out.push_back(x.p);
    return out;
  }
};

inline ReductionPlan reduction_plan(const CatalogEntry& e, int m, Action a) {
  if (m < 1) throw std::invalid_argument("reduction_plan: m must be positive");
  const int h = e.coxeter_number();
  const int M = a == Action::Phi ? m : m + 1;
  const int N = M * h;
  ReductionPlan plan{e.name, m, a, {}};
  for (int p = 0; p < N; ++p) {
    PlanEntry x;
    x.p = p;
    const int d = p == 0 ? N : p;
    x.representative = std::gcd(d, N);
    if (N % d != 0) {
      x.status = PlanStatus::GcdReduced;
      plan.entries.push_back(x);
      continue;
    }
    x.m1 = std::gcd(d, M);
    x.m2 = M / x.m1;
    x.h1 = d / x.m1;
    x.h2 = h / x.h1;
    bool h2_all = true;
    bool m2h2_none = true;
    for (int deg : e.degrees) {
      h2_all = h2_all && deg % x.h2 == 0;
      m2h2_none = m2h2_none && deg % (x.m2 * x.h2) != 0;
    }
    if (d % M == 0)
      x.status = PlanStatus::MDividesP;
    else if (M % d == 0)
      x.status = PlanStatus::PDividesM;
    else if (!h2_all)
      x.status = PlanStatus::DegreeObstruction;
    else if (x.m2 > e.rank && m2h2_none)
      x.status = PlanStatus::SpreadExceedsRank;
    else
      x.status = PlanStatus::BruteForce;
    plan.entries.push_back(x);
  }
  return plan;
}

// |Fix(action^p)| = |Fix(action^{kp})| for p | N and gcd(k, N/p) = 1.
inline bool lemma_equivalence_check(const ReflectionGroup& G, Elem c, const LengthTable& L, int m,
                                    std::int64_t p, std::int64_t k, Action a, const EnumOptions& opt = {}) {
  const int N = action_period(G.entry(), m, a);
  if (p <= 0 || N % p != 0) throw std::invalid_argument("lemma_equivalence_check: p must divide the period");
  if (k <= 0 || std::gcd<std::int64_t>(k, N / p) != 1)
    throw std::invalid_argument("lemma_equivalence_check: k must be coprime to period/p");
  auto tuples = enumerate_ncm(G, c, L, m, opt);
  return fix_count(G, c, tuples, p, a, opt.threads) == fix_count(G, c, tuples, (k * p) % N, a, opt.threads);
}

}  // namespace ncsieve

#endif
