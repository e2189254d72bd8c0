#ifndef NCSIEVE_NCP_HPP
#define NCSIEVE_NCP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "abslen.hpp"
#include "cyclo.hpp"
#include "group.hpp"
#include "parallel.hpp"

namespace ncsieve {

// (w_0; w_1, ..., w_m)
using NcpTuple = std::vector<Elem>;

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer fuss_catalan(const CatalogEntry& e, int m) {
  if (m < 1) throw std::invalid_argument("fuss_catalan: m must be positive");
  const int h = e.coxeter_number();
  Integer num = 1, den = 1;
  for (int d : e.degrees) {
    num *= m * h + d;
    den *= d;
  }
  if (num % den != 0) throw EvaluationError("Fuss-Catalan number of " + e.name + " is not an integer");
  return num / den;
}

inline QFactored qcatalan(const CatalogEntry& e, int m) {
  if (m < 1) throw std::invalid_argument("qcatalan: m must be positive");
  const int h = e.coxeter_number();
  QFactored f;
  for (int d : e.degrees) {
    f *= q_integer(static_cast<std::int64_t>(m) * h + d);
    f /= q_integer(d);
  }
  if (!f.is_polynomial()) throw EvaluationError("q-Fuss-Catalan of " + e.name + " is not a polynomial");
  return f;
}

struct RootEval {
  int M = 1;                // order of the evaluation point
  std::vector<int> S1;      // i with M | mh + d_i
  std::vector<int> S2;      // i with M | d_i
  bool zero = false;
  Integer value;
};

// Cat^m(W; q) at q = zeta_denom^p, denom in {mh, (m+1)h}.
inline RootEval cat_at_root(const CatalogEntry& e, int m, int denom, std::int64_t p) {
  const int h = e.coxeter_number();
  if (denom != m * h && denom != (m + 1) * h)
    throw std::invalid_argument("cat_at_root: denominator must be mh or (m+1)h");
  if (p < 0 || p >= denom) throw std::invalid_argument("cat_at_root: p out of range");
  RootEval r;
  r.M = static_cast<int>(denom / std::gcd<std::int64_t>(p, denom));
  for (int i = 0; i < e.rank; ++i) {
    if ((m * h + e.degrees[i]) % r.M == 0) r.S1.push_back(i);
    if (e.degrees[i] % r.M == 0) r.S2.push_back(i);
  }
  FactoredValue v = eval_factored(qcatalan(e, m), denom, p);
  r.zero = v.zero;
  if (v.zero) {
    r.value = 0;
  } else {
    if (!v.value.is_rational())
      throw EvaluationError("Cat^" + std::to_string(m) + "(" + e.name + ") at zeta_" + std::to_string(denom) +
                            "^" + std::to_string(p) + " is not rational: " + v.value.to_string());
    Rational q = v.value.rational_value();
    if (q.get_den() != 1)
      throw EvaluationError("Cat^" + std::to_string(m) + "(" + e.name + ") at zeta_" + std::to_string(denom) +
                            "^" + std::to_string(p) + " is not an integer: " + q.get_str());
    r.value = q.get_num();
  }
  if (r.S1.size() < r.S2.size() || r.zero != (r.S1.size() > r.S2.size()))
    throw EvaluationError("zero pattern of Cat^m(" + e.name + ") disagrees with the S1/S2 count");
  return r;
}

struct EnumOptions {
  std::uint64_t budget = 10000000;
  unsigned threads = 1;
};

// The interval [e, c] with its lower sets, indexed by position in `elems`.
struct IntervalIndex {
  std::vector<Elem> elems;
  std::vector<std::int32_t> pos;                  // element -> position or -1
  std::vector<std::vector<std::int32_t>> below;   // positions of u <=_T elems[i]

  IntervalIndex(const ReflectionGroup& G, const LengthTable& L, Elem c)
      : elems(interval(G, L, c)), pos(G.size(), -1), below(elems.size()) {
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<std::int32_t>(i);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (L[elems[j]] <= L[elems[i]] && leq_T(G, L, elems[j], elems[i]))
          below[i].push_back(static_cast<std::int32_t>(j));
  }
};

namespace detail {

inline void factor_minimally(const ReflectionGroup& G, const IntervalIndex& I, Elem x, int parts,
                             NcpTuple& cur, std::vector<NcpTuple>& out) {
  if (parts == 1) {
    cur.push_back(x);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int32_t j : I.below[I.pos[x]]) {
    Elem y = I.elems[j];
    cur.push_back(y);
    factor_minimally(G, I, G.mult(G.inverse(y), x), parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Depth-first by increasing element index in every slot.
inline std::vector<NcpTuple> enumerate_ncm(const ReflectionGroup& G, Elem c, const LengthTable& L, int m,
                                           const EnumOptions& opt = {}) {
  if (m < 1) throw std::invalid_argument("enumerate_ncm: m must be positive");
  Integer expected = fuss_catalan(G.entry(), m);
  if (expected > Integer(std::to_string(opt.budget)))
    throw BudgetError("NC^" + std::to_string(m) + "(" + G.entry().name + ") has " + expected.get_str() +
                      " elements, over the enumeration budget " + std::to_string(opt.budget));
  IntervalIndex I(G, L, c);
  auto branches = parallel_map<std::vector<NcpTuple>>(I.elems.size(), opt.threads, [&](std::size_t i) {
    std::vector<NcpTuple> part;
    NcpTuple cur{I.elems[i]};
    detail::factor_minimally(G, I, G.mult(G.inverse(I.elems[i]), c), m, cur, part);
    return part;
  });
  std::vector<NcpTuple> out;
  out.reserve(expected.get_ui());
  for (auto& b : branches)
    for (auto& t : b) out.push_back(std::move(t));
  return out;
}

// A built group with its length table and Coxeter element.
struct GroupContext {
  ReflectionGroup G;
  LengthTable L;
  Elem c;

  explicit GroupContext(const CatalogEntry& e, const BuildOptions& opt = {})
      : G(build_group(e, opt)), L(length_table(G)), c(coxeter_element(G, L)) {}
};

inline bool is_ncm_tuple(const ReflectionGroup& G, const LengthTable& L, Elem c, const NcpTuple& t) {
  Elem prod = ReflectionGroup::identity();
  int len = 0;
  for (Elem w : t) {
    prod = G.mult(prod, w);
    len += L[w];
  }
  return prod == c && len == L[c];
}

}  // namespace ncsieve

#endif
