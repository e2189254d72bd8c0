#include <gtest/gtest.h>

#include <numeric>

#include "ncsieve/cases.hpp"
#include "ncsieve/kernel.hpp"
#include "oracle.hpp"

using namespace ncsieve;
using oracle::ctx;

namespace {

std::size_t solve_count(const std::string& g, const std::vector<std::int64_t>& exps, Relation r, int len,
                        std::int64_t commute = 0) {
  const auto& c = ctx(g);
  return solve_twisted(c.G, c.c, c.L, TwistedSystem::single(exps, r, len, commute)).size();
}

std::vector<std::vector<Elem>> sorted(std::vector<std::vector<Elem>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rational eval_in_m(const std::vector<Rational>& poly, int m) {
  Rational v = 0, x = 1;
  for (const auto& a : poly) {
    v += a * x;
    x *= m;
  }
  return v;
}

// Type counts as used for E8 at p = 15m/2 (parabolic types of the singles).
const std::map<std::string, Integer> kE8Types = {{"A1^2", 150}, {"A2", 100},   {"A1^3", 75},    {"A1*A2", 165},
                                                 {"A3", 90},    {"A1^2*A2", 15}, {"A1*A3", 45}, {"A2^2", 5},
                                                 {"A4", 18},    {"D4", 5}};

// Decomposition numbers of A2, A3, A4 and D4 Coxeter elements, computed.
std::map<std::string, Integer> computed_decompositions() {
  std::map<std::string, Integer> out;
  const std::vector<std::pair<std::string, std::string>> want = {
      {"A2", "A1,A1"},      {"A3", "A2,A1"},       {"A3", "A1^2,A1"},     {"A3", "A1,A1,A1"},
      {"A4", "A3,A1"},      {"A4", "A1*A2,A1"},    {"D4", "A3,A1"},       {"D4", "A1^3,A1"},
      {"A4", "A2,A2"},      {"A4", "A1^2,A1^2"},   {"A4", "A2,A1^2"},     {"D4", "A2,A2"},
      {"D4", "A2,A1^2"},    {"A4", "A2,A1,A1"},    {"A4", "A1^2,A1,A1"},  {"D4", "A2,A1,A1"},
      {"D4", "A1^2,A1,A1"}, {"A4", "A1,A1,A1,A1"}, {"D4", "A1,A1,A1,A1"}};
  for (const auto& [g, list] : want) {
    const auto& c = ctx(g);
    out[g + ":" + list] = decomposition_number(c.G, c.c, c.L, detail::split(list, ','));
  }
  return out;
}

}  // namespace

TEST(SolveTwisted, Examples) {
  EXPECT_EQ(solve_count("H3", {0, -2, 1}, Relation::Equals, 1), 5u);
  EXPECT_EQ(solve_count("F4", {0, 1}, Relation::Equals, 2, 3), 3u);
  EXPECT_EQ(solve_count("F4", {0, 1}, Relation::Leq, 1, 3), 0u);
}

TEST(SolveTwisted, RejectsMalformedSystems) {
  const auto& c = ctx("A2");
  TwistedSystem empty;
  EXPECT_THROW(solve_twisted(c.G, c.c, c.L, empty), KernelError);
  EXPECT_THROW(solve_twisted(c.G, c.c, c.L, TwistedSystem::single({0}, Relation::Equals, 0)), KernelError);
  TwistedSystem unused;
  unused.slots = {{1, 1, 0}, {1, 1, 0}};
  unused.factors = {{0, 0}};
  EXPECT_THROW(solve_twisted(c.G, c.c, c.L, unused), KernelError);
  EXPECT_THROW(parse_relation("lt"), std::invalid_argument);
}

TEST(SolveTwisted, BudgetRefusal) {
  const auto& c = ctx("H3");
  TwistedSystem s;
  s.slots = {{1, 3, 0}, {1, 3, 0}};
  s.factors = {{0, 0}, {1, 0}};
  EXPECT_THROW(solve_twisted(c.G, c.c, c.L, s, {1000, 1}), BudgetError);
}

TEST(SolveTwisted, MatchesExhaustiveOracle) {
  struct Row {
    std::string g;
    TwistedSystem sys;
  };
  std::vector<Row> rows = {
      {"H3", TwistedSystem::single({0, -2, 1}, Relation::Equals, 1)},
      {"H3", TwistedSystem::single({0, 3, -4}, Relation::Equals, 1)},
      {"H3", TwistedSystem::single({0, 5}, Relation::Leq, 1)},
      {"H3", TwistedSystem::single({0, 1}, Relation::Leq, 1, 5)},
      {"F4", TwistedSystem::single({0, 1}, Relation::Equals, 2, 3)},
      {"F4", TwistedSystem::single({0, 1}, Relation::Leq, 1, 3)},
      {"G25", TwistedSystem::single({0, 1, 2}, Relation::Equals, 1)},
      {"G26", TwistedSystem::single({0, 1}, Relation::Leq, 1)},
      {"B3", TwistedSystem::single({0, 2}, Relation::Leq, 1)},
      {"A4", TwistedSystem::single({0, 1}, Relation::Leq, 2)},
  };
  TwistedSystem pair;
  pair.slots = {{1, 1, 0}, {1, 2, 0}};
  pair.factors = {{0, 0}, {1, 0}, {0, 3}};
  pair.relation = Relation::Leq;
  rows.push_back({"H3", pair});
  pair.relation = Relation::Equals;
  rows.push_back({"H3", pair});
  for (const auto& r : rows) {
    const auto& c = ctx(r.g);
    auto fast = sorted(solve_twisted(c.G, c.c, c.L, r.sys, {500000000, 2}));
    EXPECT_EQ(fast, oracle::brute_solve(c.G, c.c, c.L, r.sys)) << r.g;
    EXPECT_EQ(std::adjacent_find(fast.begin(), fast.end()), fast.end());
  }
}

TEST(SolveTwistedProperty, IdentityPatternGivesC) {
  for (const std::string g : {"A2", "B3", "H3", "G4", "G25", "F4"}) {
    const auto& c = ctx(g);
    auto sols = solve_twisted(c.G, c.c, c.L, TwistedSystem::single({0}, Relation::Equals, c.G.rank()));
    ASSERT_EQ(sols.size(), 1u) << g;
    EXPECT_EQ(sols[0][0], c.c);
  }
}

TEST(SolveTwistedProperty, LeqContainsEq) {
  for (const auto& [g, exps, len] : std::vector<std::tuple<std::string, std::vector<std::int64_t>, int>>{
           {"H3", {0, -2, 1}, 1}, {"F4", {0, 1}, 2}, {"G24", {0, 2, 4}, 1}, {"B3", {0, 1}, 1}, {"A4", {0, 2}, 2}}) {
    const auto& c = ctx(g);
    auto eq = sorted(solve_twisted(c.G, c.c, c.L, TwistedSystem::single(exps, Relation::Equals, len)));
    auto le = sorted(solve_twisted(c.G, c.c, c.L, TwistedSystem::single(exps, Relation::Leq, len)));
    EXPECT_TRUE(std::includes(le.begin(), le.end(), eq.begin(), eq.end())) << g;
  }
}

TEST(SolveTwistedProperty, EquivalentH3Equations) {
  EXPECT_EQ(solve_count("H3", {0, -2, 1}, Relation::Equals, 1), solve_count("H3", {0, 3, -4}, Relation::Equals, 1));
}

TEST(CountByType, Examples) {
  const auto& a3 = ctx("A3");
  std::vector<Elem> two;
  for (Elem w : interval(a3.G, a3.L, a3.c))
    if (a3.L[w] == 2) two.push_back(w);
  auto tally = count_by_type(a3.G, a3.L, two);
  EXPECT_EQ(tally.size(), 2u);
  EXPECT_EQ(tally["A1^2"] + tally["A2"], two.size());
  EXPECT_EQ(tally["A2"], oracle::brute_decomposition(a3.G, a3.c, a3.L, {"A2", "A1"}));

  for (const std::string g : {"H3", "G4", "F4"}) {
    const auto& c = ctx(g);
    auto sols = solve_twisted(c.G, c.c, c.L, TwistedSystem::single({0, 1}, Relation::Leq, 1));
    for (const auto& [name, n] : count_by_type(c.G, c.L, sols)) EXPECT_EQ(type_rank(name), 1) << g << " " << name;
  }

  const auto& h4 = ctx("H4");
  auto eight = solve_twisted(h4.G, h4.c, h4.L, TwistedSystem::single({0, 7}, Relation::Equals, 2, 15));
  ASSERT_EQ(eight.size(), 8u);
  std::uint64_t total = 0;
  for (const auto& [name, n] : count_by_type(h4.G, h4.L, eight)) total += n;
  EXPECT_EQ(total, 8u);
}

TEST(Decomposition, Examples) {
  const auto& a2 = ctx("A2");
  EXPECT_EQ(decomposition_number(a2.G, a2.c, a2.L, {"A1", "A1"}), 3u);
  const auto& a1 = ctx("A1");
  EXPECT_EQ(decomposition_number(a1.G, a1.c, a1.L, {"A1"}), 1u);
  const auto& a3 = ctx("A3");
  // Strict types: 4 factorizations through A2 and 2 through A1^2; 6 by length alone.
  EXPECT_EQ(decomposition_number(a3.G, a3.c, a3.L, {"A2", "A1"}), 4u);
  EXPECT_EQ(decomposition_number(a3.G, a3.c, a3.L, {"A1^2", "A1"}), 2u);
  EXPECT_EQ(length_profile_number(a3.G, a3.c, a3.L, {2, 1}), 6u);
  EXPECT_THROW(decomposition_number(a3.G, a3.c, a3.L, {"A2"}), KernelError);
  EXPECT_THROW(decomposition_number(a3.G, a3.c, a3.L, {}), KernelError);
  EXPECT_THROW(length_profile_number(a3.G, a3.c, a3.L, {1, 1}), KernelError);
}

TEST(Decomposition, MatchesBruteForce) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
      {"A2", {"A1", "A1"}},       {"A3", {"A2", "A1"}},          {"A3", {"A1", "A2"}},
      {"A3", {"A1^2", "A1"}},     {"A3", {"A1", "A1", "A1"}},    {"B3", {"B2", "A1"}},
      {"B3", {"A1^2", "A1"}},     {"B3", {"A2", "A1"}},          {"H3", {"I2(5)", "A1"}},
      {"H3", {"A1", "A2"}},       {"A4", {"A2", "A1^2"}},        {"A4", {"A1*A2", "A1"}},
      {"A4", {"A3", "A1"}},       {"D4", {"A1^3", "A1"}},        {"D4", {"A2", "A1", "A1"}},
      {"B2", {"A1", "A1"}},       {"I2(5)", {"A1", "A1"}},       {"G4", {"rank1(3)", "rank1(3)"}}};
  for (const auto& [g, types] : rows) {
    const auto& c = ctx(g);
    EXPECT_EQ(decomposition_number(c.G, c.c, c.L, types), oracle::brute_decomposition(c.G, c.c, c.L, types)) << g;
  }
}

TEST(DecompositionProperty, OrderingsSumToUnorderedCount) {
  // For two factors: count c = c1 c2 by unordered type pair, compare with the sum over both orders.
  for (const std::string g : {"A3", "B3", "H3", "A4", "D4"}) {
    const auto& c = ctx(g);
    std::map<std::pair<std::string, std::string>, std::uint64_t> unordered;
    for (Elem w : interval(c.G, c.L, c.c)) {
      if (w == ReflectionGroup::identity() || w == c.c) continue;
      std::string a = parabolic_type(c.G, c.L, w).name;
      std::string b = parabolic_type(c.G, c.L, c.G.mult(c.G.inverse(w), c.c)).name;
      unordered[std::minmax(a, b)]++;
    }
    for (const auto& [key, n] : unordered) {
      std::uint64_t sum = decomposition_number(c.G, c.c, c.L, {key.first, key.second});
      if (key.first != key.second) sum += decomposition_number(c.G, c.c, c.L, {key.second, key.first});
      EXPECT_EQ(sum, n) << g << " " << key.first << "," << key.second;
    }
  }
}

TEST(DecompositionProperty, TypesRefineLengthProfiles) {
  for (const std::string g : {"A3", "B3", "H3", "A4"}) {
    const auto& c = ctx(g);
    std::map<int, std::set<std::string>> types_by_len;
    for (Elem w : interval(c.G, c.L, c.c))
      if (w != ReflectionGroup::identity()) types_by_len[c.L[w]].insert(parabolic_type(c.G, c.L, w).name);
    const int n = c.G.rank();
    for (int k = 1; k < n; ++k) {
      std::uint64_t sum = 0;
      for (const auto& a : types_by_len[k])
        for (const auto& b : types_by_len[n - k]) sum += decomposition_number(c.G, c.c, c.L, {a, b});
      EXPECT_EQ(sum, length_profile_number(c.G, c.c, c.L, {k, n - k})) << g << " k=" << k;
    }
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(7, 0), 1);
}

TEST(FixPolynomial, H4Identity) {
  FixParts parts;
  parts.divisor = 2;
  parts.singles = {15, 8};
  parts.tuples[2] = 30;
  auto f = fix_polynomial(parts);
  for (int m = 2; m <= 20; m += 2) EXPECT_EQ(f(m), Integer((3 * m + 2) * (5 * m + 2) / 4)) << m;
  EXPECT_FALSE(f.admissible(3));
  EXPECT_THROW(f(3), KernelError);
}

TEST(FixPolynomial, E8Identity) {
  auto dec = computed_decompositions();
  dec["A3:A2,A1"] = dec["A3:A2,A1"] + dec["A3:A1^2,A1"];
  auto v = derive_n_values(kE8Types, dec);
  FixParts parts;
  parts.divisor = 2;
  parts.singles = {45, 150, 100, 75, 165, 90, 15, 45, 5, 18, 5};
  parts.tuples[2] = v.n11 + 2 * v.n21 + 2 * v.n31 + v.n22;
  parts.tuples[3] = v.n111 + 3 * v.n211;
  parts.tuples[4] = v.n1111;
  auto f = fix_polynomial(parts);
  for (int m = 2; m <= 20; m += 2) {
    Integer expect = Integer(5 * m + 4) * (3 * m + 2) * (5 * m + 2) * (15 * m + 4) / 64;
    EXPECT_EQ(f(m), expect) << m;
  }
}

TEST(FixPolynomial, ZeroCountsGiveOne) {
  FixParts parts;
  parts.divisor = 3;
  auto f = fix_polynomial(parts);
  for (int m = 3; m <= 30; m += 3) EXPECT_EQ(f(m), 1);
  EXPECT_EQ(f.to_string(), "1");
  parts.singles = {-1};
  EXPECT_THROW(fix_polynomial(parts), KernelError);
  parts.singles.clear();
  parts.tuples[1] = 2;
  EXPECT_THROW(fix_polynomial(parts), KernelError);
  parts.tuples.clear();
  parts.divisor = 0;
  EXPECT_THROW(fix_polynomial(parts), KernelError);
}

TEST(FixPolynomialProperty, ExpansionInMAgrees) {
  for (Action a : {Action::Phi, Action::Psi}) {
    FixParts parts;
    parts.mode = a;
    parts.divisor = 2;
    parts.with_identity = a == Action::Phi;
    parts.singles = {7, 3};
    parts.tuples = {{2, 11}, {3, 4}};
    auto f = fix_polynomial(parts);
    auto poly = f.in_m();
    EXPECT_EQ(poly.size(), 4u);
    for (int m = 1; m <= 25; ++m)
      if (f.admissible(m)) {
        EXPECT_EQ(eval_in_m(poly, m), Rational(f(m))) << m;
        EXPECT_GE(f(m), 0);
      }
  }
}

TEST(DeriveNValues, E8Values) {
  auto dec = computed_decompositions();
  EXPECT_EQ(dec["A2:A1,A1"], 3);
  dec["A3:A2,A1"] = dec["A3:A2,A1"] + dec["A3:A1^2,A1"];
  auto v = derive_n_values(kE8Types, dec);
  EXPECT_EQ(v.n11, 600);
  EXPECT_EQ(v.n21, 1425);
  EXPECT_EQ(v.n31, 660);
  EXPECT_EQ(v.n22, 1195);
  EXPECT_EQ(v.n111, 3375);
  EXPECT_EQ(v.n211, 2850);
  EXPECT_EQ(v.n1111, 6750);
}

TEST(DeriveNValues, ZeroAndMissingInputs) {
  auto dec = computed_decompositions();
  std::map<std::string, Integer> zero;
  for (const auto& [k, _] : kE8Types) zero[k] = 0;
  auto v = derive_n_values(zero, dec);
  for (const Integer* x : {&v.n11, &v.n21, &v.n31, &v.n22, &v.n111, &v.n211, &v.n1111}) EXPECT_EQ(*x, 0);
  dec.erase("D4:A2,A2");
  EXPECT_THROW(derive_n_values(kE8Types, dec), KernelError);
  auto partial = kE8Types;
  partial.erase("A4");
  EXPECT_THROW(derive_n_values(partial, computed_decompositions()), KernelError);
}

TEST(KernelProperty, CaseTableFixPolynomialsMatchFixedPoints) {
  // 1 + (singles) m/d + (pairs) binom(m/d, 2), assembled from the case table rows at p = a m/d,
  // against the fixed points of phi^p for m in {d, 2d, 3d}.
  struct Case {
    std::string group;
    int a = 0, d = 1;
    FixParts parts;
  };
  std::map<std::pair<std::string, std::string>, Case> cases;
  for (const auto& row : load_cases(NCSIEVE_CASES_FILE)) {
    if (row.large || row.mode != "phi") continue;
    auto& c = cases[{row.group, row.p}];
    if (c.group.empty()) {
      c.group = row.group;
      auto slash = row.p.find("m/");
      ASSERT_NE(slash, std::string::npos) << row.p;
      c.a = std::stoi(row.p.substr(0, slash));
      c.d = std::stoi(row.p.substr(slash + 2));
      c.parts.divisor = c.d;
    }
    if (row.system.slots.size() == 1)
      c.parts.singles.push_back(row.expect);
    else
      c.parts.tuples[static_cast<int>(row.system.slots.size())] += row.expect;
  }
  ASSERT_GT(cases.size(), 20u);
  for (const auto& [key, c] : cases) {
    const auto& x = ctx(c.group);
    auto f = fix_polynomial(c.parts);
    for (int m : {c.d, 2 * c.d, 3 * c.d}) {
      const int p = c.a * m / c.d;
      auto fixed = fixed_tuples(x.G, x.c, x.L, m, p, Action::Phi);
      EXPECT_EQ(Integer(static_cast<unsigned long>(fixed.size())), f(m)) << c.group << " p=" << key.second << " m=" << m;
      EXPECT_EQ(cat_at_root(x.G.entry(), m, m * x.G.entry().coxeter_number(), p).value, f(m)) << c.group;
    }
  }
}
