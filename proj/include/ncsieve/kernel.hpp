#ifndef NCSIEVE_KERNEL_HPP
#define NCSIEVE_KERNEL_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "abslen.hpp"
#include "ncp.hpp"
#include "parallel.hpp"
#include "sieve.hpp"

namespace ncsieve {

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { Equals, Leq };

inline std::string to_string(Relation r) { return r == Relation::Equals ? "eq" : "leq"; }

inline Relation parse_relation(const std::string& s) {
  if (s == "eq") return Relation::Equals;
  if (s == "leq") return Relation::Leq;
  throw std::invalid_argument("unknown relation '" + s + "' (expected eq or leq)");
}

// One unknown: allowed lengths, and an optional commutation w = c^k w c^-k (k = 0: none).
struct TwistedSlot {
  int min_length = 1;
  int max_length = 1;
  std::int64_t commute = 0;
};

// Factor c^e w_slot c^-e of the left-to-right product.
struct TwistedFactor {
  int slot = 0;
  std::int64_t exponent = 0;
};

struct TwistedSystem {
  std::vector<TwistedSlot> slots;
  std::vector<TwistedFactor> factors;
  Relation relation = Relation::Equals;

  // One unknown with exponent list (e_0, e_1, ...).
  static TwistedSystem single(const std::vector<std::int64_t>& exps, Relation rel, int length,
                              std::int64_t commute = 0) {
    TwistedSystem s;
    s.slots.push_back({length, length, commute});
    for (auto e : exps) s.factors.push_back({0, e});
    s.relation = rel;
    return s;
  }

  void validate() const {
    if (slots.empty()) throw KernelError("twisted system has no unknowns");
    if (factors.empty()) throw KernelError("twisted system has an empty product");
    for (const auto& s : slots)
      if (s.min_length < 1 || s.max_length < s.min_length) throw KernelError("required lengths must be >= 1");
    std::vector<char> used(slots.size(), 0);
    for (const auto& f : factors) {
      if (f.slot < 0 || f.slot >= static_cast<int>(slots.size())) throw KernelError("factor names an unknown slot");
      used[f.slot] = 1;
    }
    for (char u : used)
      if (!u) throw KernelError("an unknown does not occur in the product");
  }
};

struct SolveOptions {
  std::uint64_t budget = 500000000;  // bound on the product of pool sizes
  unsigned threads = 1;
};

namespace detail {

struct TwistedSearch {
  const ReflectionGroup& G;
  const LengthTable& L;
  Elem c;
  const TwistedSystem& sys;
  std::vector<std::vector<Elem>> pools;
  std::vector<int> ready_at;  // factor k is evaluable once slots [0, ready_at[k]] are set

  TwistedSearch(const ReflectionGroup& g, const LengthTable& l, Elem cc, const TwistedSystem& s)
      : G(g), L(l), c(cc), sys(s), pools(s.slots.size()) {
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
      const auto& slot = s.slots[i];
      for (Elem w = 0; w < G.size(); ++w) {
        if (L[w] < slot.min_length || L[w] > slot.max_length) continue;
        if (slot.commute != 0 && G.conjugate(w, c, slot.commute) != w) continue;
        pools[i].push_back(w);
      }
    }
    int seen = -1;
    for (const auto& f : s.factors) {
      seen = std::max(seen, f.slot);
      ready_at.push_back(seen);
    }
  }

  // Product of the longest evaluable factor prefix must stay a minimal factorization below c.
  bool prefix_ok(const std::vector<Elem>& vals, int set_upto, bool complete) const {
    Elem prod = ReflectionGroup::identity();
    int len = 0;
    for (std::size_t k = 0; k < sys.factors.size(); ++k) {
      if (ready_at[k] > set_upto) break;
      const auto& f = sys.factors[k];
      prod = G.mult(prod, G.conjugate(vals[f.slot], c, f.exponent));
      len += L[vals[f.slot]];
      if (L[prod] != len) return false;
    }
    if (!leq_T(G, L, prod, c)) return false;
    if (complete && sys.relation == Relation::Equals && prod != c) return false;
    return true;
  }

  void dfs(std::vector<Elem>& vals, int slot, std::vector<std::vector<Elem>>& out) const {
    const int last = static_cast<int>(sys.slots.size()) - 1;
    for (Elem w : pools[slot]) {
      vals[slot] = w;
      if (!prefix_ok(vals, slot, slot == last)) continue;
      if (slot == last)
        out.push_back(vals);
      else
        dfs(vals, slot + 1, out);
    }
  }
};

}  // namespace detail

// Ordered solution tuples (one element per slot), lexicographic by element index.
inline std::vector<std::vector<Elem>> solve_twisted(const ReflectionGroup& G, Elem c, const LengthTable& L,
                                                    const TwistedSystem& sys, const SolveOptions& opt = {}) {
  sys.validate();
  detail::TwistedSearch search(G, L, c, sys);
  double space = 1;
  for (const auto& p : search.pools) space *= static_cast<double>(p.size());
  if (space > static_cast<double>(opt.budget))
    throw BudgetError("twisted search space " + std::to_string(static_cast<std::uint64_t>(space)) +
                      " exceeds budget " + std::to_string(opt.budget));
  const auto& first = search.pools[0];
  auto parts = parallel_map<std::vector<std::vector<Elem>>>(first.size(), opt.threads, [&](std::size_t i) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> vals(sys.slots.size(), ReflectionGroup::identity());
    vals[0] = first[i];
    if (!search.prefix_ok(vals, 0, sys.slots.size() == 1)) return out;
    if (sys.slots.size() == 1)
      out.push_back(vals);
    else
      search.dfs(vals, 1, out);
    return out;
  });
  std::vector<std::vector<Elem>> out;
  for (auto& p : parts)
    for (auto& s : p) out.push_back(std::move(s));
  return out;
}

// Tally of parabolic types of the given elements.
inline std::map<std::string, std::uint64_t> count_by_type(const ReflectionGroup& G, const LengthTable& L,
                                                          const std::vector<Elem>& elems) {
  std::map<std::string, std::uint64_t> out;
  for (Elem w : elems) out[parabolic_type(G, L, w).name]++;
  return out;
}

// Types of one slot across a solution list.
inline std::map<std::string, std::uint64_t> count_by_type(const ReflectionGroup& G, const LengthTable& L,
                                                          const std::vector<std::vector<Elem>>& solutions,
                                                          int slot = 0) {
  std::vector<Elem> elems;
  for (const auto& s : solutions) elems.push_back(s.at(slot));
  return count_by_type(G, L, elems);
}

namespace detail {

struct FactorCounter {
  const ReflectionGroup& G;
  const LengthTable& L;
  IntervalIndex I;
  std::unordered_map<Elem, std::string> type_cache;

  FactorCounter(const ReflectionGroup& g, const LengthTable& l, Elem c) : G(g), L(l), I(g, l, c) {}

  const std::string& type_of(Elem w) {
    auto it = type_cache.find(w);
    if (it == type_cache.end()) it = type_cache.emplace(w, parabolic_type(G, L, w).name).first;
    return it->second;
  }

  // Factorizations x = y_k ... y_d with prescribed lengths and (optionally) types.
  std::uint64_t count(Elem x, std::size_t k, const std::vector<int>& lengths,
                      const std::vector<std::string>* types) {
    if (k + 1 == lengths.size()) {
      if (L[x] != lengths[k]) return 0;
      return (!types || type_of(x) == (*types)[k]) ? 1 : 0;
    }
    std::uint64_t total = 0;
    for (std::int32_t j : I.below[I.pos[x]]) {
      Elem y = I.elems[j];
      if (L[y] != lengths[k]) continue;
      if (types && type_of(y) != (*types)[k]) continue;
      total += count(G.mult(G.inverse(y), x), k + 1, lengths, types);
    }
    return total;
  }
};

}  // namespace detail

// N_W(T_1, ..., T_d): ordered minimal factorizations c = c_1 ... c_d with c_i of type T_i.
inline std::uint64_t decomposition_number(const ReflectionGroup& G, Elem c, const LengthTable& L,
                                          const std::vector<std::string>& types) {
  if (types.empty()) throw KernelError("decomposition number needs at least one type");
  std::vector<int> lengths;
  int total = 0;
  for (const auto& t : types) {
    lengths.push_back(type_rank(t));
    total += lengths.back();
  }
  if (total != G.rank())
    throw KernelError("type ranks sum to " + std::to_string(total) + ", not to the rank " +
                      std::to_string(G.rank()) + " of " + G.entry().name);
  detail::FactorCounter f(G, L, c);
  return f.count(c, 0, lengths, &types);
}

// Ordered minimal factorizations of c with prescribed absolute lengths only.
inline std::uint64_t length_profile_number(const ReflectionGroup& G, Elem c, const LengthTable& L,
                                           const std::vector<int>& lengths) {
  int total = 0;
  for (int l : lengths) total += l;
  if (lengths.empty() || total != L[c]) throw KernelError("lengths must sum to the length of c");
  detail::FactorCounter f(G, L, c);
  return f.count(c, 0, lengths, nullptr);
}

// binom(x, j) for integer x (zero when x < j).
inline Integer binomial(const Integer& x, int j) {
  if (j < 0 || x < j) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < j; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

// constant + sum_j coeffs[j-1] * binom(M/divisor, j), M = m (phi) or m+1 (psi).
struct FixPolynomial {
  Action mode = Action::Phi;
  int divisor = 1;
  Integer constant = 0;
  std::vector<Integer> coeffs;

  bool admissible(int m) const { return m >= 1 && (m + (mode == Action::Psi ? 1 : 0)) % divisor == 0; }

  Integer operator()(int m) const {
    if (!admissible(m))
      throw KernelError("m = " + std::to_string(m) + " is not admissible for divisor " + std::to_string(divisor));
    Integer x = (m + (mode == Action::Psi ? 1 : 0)) / divisor;
    Integer v = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * binomial(x, static_cast<int>(j) + 1);
    return v;
  }

  // Coefficients in m (index = power), exact.
  std::vector<Rational> in_m() const {
    std::vector<Rational> out{Rational(constant)};
    auto add = [&](std::size_t k, const Rational& v) {
      if (out.size() <= k) out.resize(k + 1, Rational(0));
      out[k] += v;
    };
    const Rational shift = mode == Action::Psi ? Rational(1, divisor) : Rational(0);
    const Rational scale(1, divisor);
    std::vector<Rational> basis{Rational(1)};  // binom(x, j) as a polynomial in m
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      // multiply by (x - j)/(j + 1), x = scale*m + shift
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      Rational c0 = (shift - static_cast<long>(j)) / static_cast<long>(j + 1);
      Rational c1 = scale / static_cast<long>(j + 1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i] += basis[i] * c0;
        next[i + 1] += basis[i] * c1;
      }
      basis = std::move(next);
      for (std::size_t i = 0; i < basis.size(); ++i) add(i, basis[i] * Rational(coeffs[j]));
    }
    for (auto& v : out) v.canonicalize();
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    const std::string x = mode == Action::Psi ? "(m+1)/" + std::to_string(divisor) : "m/" + std::to_string(divisor);
    os << constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      os << " + " << coeffs[j];
      if (j == 0)
        os << "*" << x;
      else
        os << "*binom(" << x << "," << j + 1 << ")";
    }
    return os.str();
  }
};

struct FixParts {
  Action mode = Action::Phi;
  int divisor = 1;
  bool with_identity = true;              // the tuple (c; e, ..., e) in phi mode
  std::vector<Integer> singles;           // summed into the linear term
  std::map<int, Integer> tuples;          // j -> count of j-tuples of slots, j >= 2
};

inline FixPolynomial fix_polynomial(const FixParts& parts) {
  if (parts.divisor < 1) throw KernelError("divisor must be positive");
  FixPolynomial f;
  f.mode = parts.mode;
  f.divisor = parts.divisor;
  f.constant = parts.with_identity ? 1 : 0;
  Integer lin = 0;
  for (const auto& s : parts.singles) {
    if (s < 0) throw KernelError("negative single count");
    lin += s;
  }
  int top = 1;
  for (const auto& [j, n] : parts.tuples) {
    if (j < 2) throw KernelError("tuple multiplicities start at 2");
    if (n < 0) throw KernelError("negative tuple count");
    top = std::max(top, j);
  }
  f.coeffs.assign(top, Integer(0));
  f.coeffs[0] = lin;
  for (const auto& [j, n] : parts.tuples) f.coeffs[j - 1] += n;
  while (f.coeffs.size() > 1 && f.coeffs.back() == 0) f.coeffs.pop_back();
  if (f.coeffs.size() == 1 && f.coeffs[0] == 0) f.coeffs.clear();
  return f;
}

struct NValues {
  Integer n11, n21, n31, n22, n111, n211, n1111;
};

// Keys: type counts by parabolic type name; decomposition numbers as "W:T1,T2,...".
inline NValues derive_n_values(const std::map<std::string, Integer>& type_counts,
                               const std::map<std::string, Integer>& decomp) {
  auto t = [&](const std::string& k) -> Integer {
    auto it = type_counts.find(k);
    if (it == type_counts.end()) throw KernelError("missing type count for " + k);
    return it->second;
  };
  auto N = [&](const std::string& k) -> Integer {
    auto it = decomp.find(k);
    if (it == decomp.end()) throw KernelError("missing decomposition number " + k);
    return it->second;
  };
  const Integer a2 = N("A2:A1,A1");
  const Integer a3_21 = N("A3:A2,A1");
  const Integer a3_111 = N("A3:A1,A1,A1");
  NValues v;
  v.n11 = t("A1^2") * 2 + t("A2") * a2;
  v.n21 = t("A1^3") * 3 + t("A1*A2") * (1 + a2) + t("A3") * a3_21;
  v.n31 = t("A1^2*A2") * (2 + a2) + t("A1*A3") * (1 + a3_21) + t("A2^2") * (2 * a2) +
          t("A4") * (N("A4:A3,A1") + N("A4:A1*A2,A1")) + t("D4") * (N("D4:A3,A1") + N("D4:A1^3,A1"));
  v.n22 = t("A1^2*A2") * (2 + 2 * a2) + t("A1*A3") * (2 * a3_21) + t("A2^2") * (2 + a2 * a2) +
          t("A4") * (N("A4:A2,A2") + N("A4:A1^2,A1^2") + 2 * N("A4:A2,A1^2")) +
          t("D4") * (N("D4:A2,A2") + 2 * N("D4:A2,A1^2"));
  v.n111 = t("A1^3") * 6 + t("A1*A2") * (3 * a2) + t("A3") * a3_111;
  v.n211 = t("A1^2*A2") * (2 + a2 + 4 * a2) + t("A1*A3") * (2 * a3_21 + a3_111) +
           t("A2^2") * (2 * a2 + 2 * a2 * a2) + t("A4") * (N("A4:A2,A1,A1") + N("A4:A1^2,A1,A1")) +
           t("D4") * (N("D4:A2,A1,A1") + N("D4:A1^2,A1,A1"));
  v.n1111 = t("A1^2*A2") * (12 * a2) + t("A1*A3") * (4 * a3_111) + t("A2^2") * (6 * a2 * a2) +
            t("A4") * N("A4:A1,A1,A1,A1") + t("D4") * N("D4:A1,A1,A1,A1");
  return v;
}

}  // namespace ncsieve

#endif
