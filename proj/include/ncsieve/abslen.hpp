#ifndef NCSIEVE_ABSLEN_HPP
#define NCSIEVE_ABSLEN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "group.hpp"

namespace ncsieve {

using LengthTable = std::vector<std::uint8_t>;

// BFS in the Cayley graph of (W, T).
inline LengthTable length_table(const ReflectionGroup& G) {
  const std::uint8_t unseen = 0xff;
  LengthTable L(G.size(), unseen);
  std::vector<Elem> frontier{ReflectionGroup::identity()};
  L[0] = 0;
  std::uint8_t d = 0;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    ++d;
    for (Elem w : frontier)
      for (Elem t : G.reflections()) {
        Elem x = G.mult(t, w);
        if (L[x] == unseen) {
          L[x] = d;
          next.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  return L;
}

inline bool leq_T(const ReflectionGroup& G, const LengthTable& L, Elem u, Elem w) {
  return L[w] == L[u] + L[G.mult(G.inverse(u), w)];
}

class CoxeterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_coxeter_element(const ReflectionGroup& G, const LengthTable& L, Elem c) {
  const int h = G.entry().coxeter_number();
  if (G.order(c) != h || L[c] != G.rank()) return false;
  // Springer regularity for some primitive h-th root; the catalog's Galois choice varies.
  for (int k = 1; k < h; ++k) {
    if (std::gcd(k, h) != 1) continue;
    if (G.eigenspace_dim(c, Cyclotomic::root_of_unity(h, k)) == 1) return true;
  }
  return false;
}

// Product of the generators in catalog order, else the first regular element found.
inline Elem coxeter_element(const ReflectionGroup& G, const LengthTable& L) {
  Elem c = ReflectionGroup::identity();
  for (Elem s : G.generators()) c = G.mult(c, s);
  if (is_coxeter_element(G, L, c)) return c;
  for (Elem w = 0; w < G.size(); ++w)
    if (is_coxeter_element(G, L, w)) return w;
  throw CoxeterError("no Coxeter element found in " + G.entry().name);
}

// All u with u <=_T w, ascending by index.
inline std::vector<Elem> interval(const ReflectionGroup& G, const LengthTable& L, Elem w) {
  std::vector<Elem> out;
  for (Elem u = 0; u < G.size(); ++u)
    if (L[u] <= L[w] && leq_T(G, L, u, w)) out.push_back(u);
  return out;
}

struct ParabolicType {
  std::string name;
  std::vector<int> degrees;

  friend bool operator<(const ParabolicType& a, const ParabolicType& b) {
    return std::tie(a.name, a.degrees) < std::tie(b.name, b.degrees);
  }
  friend bool operator==(const ParabolicType& a, const ParabolicType& b) {
    return a.name == b.name && a.degrees == b.degrees;
  }
};

namespace detail {

inline bool is_range(const std::vector<int>& d, int from, int step) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != from + static_cast<int>(i) * step) return false;
  return true;
}

// Name of an irreducible component from its sorted degrees.
inline std::string irreducible_name(const std::vector<int>& d) {
  const int r = static_cast<int>(d.size());
  auto eq = [&](std::initializer_list<int> x) { return d == std::vector<int>(x); };
  if (r == 1) return d[0] == 2 ? "A1" : "rank1(" + std::to_string(d[0]) + ")";
  if (is_range(d, 2, 1)) return "A" + std::to_string(r);
  if (is_range(d, 2, 2)) return "B" + std::to_string(r);
  if (r >= 4) {
    std::vector<int> dn;
    for (int i = 1; i < r; ++i) dn.push_back(2 * i);
    dn.push_back(r);
    std::sort(dn.begin(), dn.end());
    if (d == dn) return "D" + std::to_string(r);
  }
  if (r == 2) {
    if (d[0] == 2) return d[1] == 6 ? "G2" : "I2(" + std::to_string(d[1]) + ")";
    static const std::map<std::vector<int>, std::string> rank2{
        {{4, 6}, "G4"},    {{6, 12}, "G5"},   {{4, 12}, "G6"},   {{8, 12}, "G8"},
        {{8, 24}, "G9"},   {{12, 24}, "G10"}, {{6, 24}, "G14"},  {{20, 30}, "G16"},
        {{20, 60}, "G17"}, {{30, 60}, "G18"}, {{12, 30}, "G20"}, {{12, 60}, "G21"}};
    if (auto it = rank2.find(d); it != rank2.end()) return it->second;
  }
  if (eq({2, 6, 10})) return "H3";
  if (eq({2, 12, 20, 30})) return "H4";
  if (eq({2, 6, 8, 12})) return "F4";
  if (eq({2, 5, 6, 8, 9, 12})) return "E6";
  if (eq({2, 6, 8, 10, 12, 14, 18})) return "E7";
  if (eq({2, 8, 12, 14, 18, 20, 24, 30})) return "E8";
  if (eq({4, 6, 14})) return "G24";
  if (eq({6, 9, 12})) return "G25";
  if (eq({6, 12, 18})) return "G26";
  if (eq({6, 12, 30})) return "G27";
  if (eq({4, 8, 12, 20})) return "G29";
  if (eq({12, 18, 24, 30})) return "G32";
  if (eq({4, 6, 10, 12, 18})) return "G33";
  if (r >= 3 && d.back() % (r - 1) == 0) {
    // G(e,e,r): e, 2e, ..., (r-1)e and r
    const int e = d.back() / (r - 1);
    std::vector<int> de{r};
    for (int i = 1; i < r; ++i) de.push_back(i * e);
    std::sort(de.begin(), de.end());
    if (e >= 3 && d == de) return "G(" + std::to_string(e) + "," + std::to_string(e) + "," + std::to_string(r) + ")";
  }
  if (r >= 2 && d[0] >= 3 && is_range(d, d[0], d[0])) return "G(" + std::to_string(d[0]) + ",1," + std::to_string(r) + ")";
  std::string s = "deg(";
  for (int i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Integer roots e_i of prod (x - e_i) from elementary symmetric sums; empty on failure.
inline std::vector<int> integer_roots(std::vector<Integer> sigma) {
  // sigma[k] = e_k(e_1..e_r), sigma[0] = 1
  const std::size_t r = sigma.size() - 1;
  std::vector<Integer> poly(r + 1);  // monic, poly[j] coefficient of x^j
  for (std::size_t k = 0; k <= r; ++k) poly[r - k] = (k % 2 ? -sigma[k] : sigma[k]);
  std::vector<int> roots;
  while (poly.size() > 1) {
    bool found = false;
    Integer bound = abs(poly[0]);
    for (long x = 0; Integer(x) <= bound && !found; ++x) {
      Integer v = 0;
      for (std::size_t j = poly.size(); j-- > 0;) v = v * x + poly[j];
      if (v != 0) continue;
      // Synthetic division by (x - root).
      const std::size_t deg = poly.size() - 1;
      std::vector<Integer> q(deg);
      q[deg - 1] = poly[deg];
      for (std::size_t j = deg - 1; j >= 1; --j) q[j - 1] = poly[j] + x * q[j];
      poly = q;
      roots.push_back(static_cast<int>(x));
      found = true;
    }
    if (!found) return {};
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

// Subgroup generated by a set of elements, as a sorted index list.
inline std::vector<Elem> generated_subgroup(const ReflectionGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.size(), 0);
  std::vector<Elem> out{ReflectionGroup::identity()};
  seen[0] = 1;
  for (std::size_t q = 0; q < out.size(); ++q)
    for (Elem s : gens) {
      Elem x = G.mult(s, out[q]);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Degrees of a reflection subgroup acting on a space where its elements have
// codim Fix = n - fix_dim: sum t^codim = prod (1 + (d_i - 1) t).
inline std::vector<int> subgroup_degrees(const ReflectionGroup& G, const std::vector<Elem>& elems) {
  std::vector<Integer> sigma(G.rank() + 1, 0);
  for (Elem w : elems) sigma[G.rank() - G.fix_dim(w)] += 1;
  std::size_t r = sigma.size();
  while (r > 1 && sigma[r - 1] == 0) --r;
  sigma.resize(r);
  auto e = detail::integer_roots(sigma);
  if (e.size() + 1 != r) throw GroupError("fixed-space polynomial of a parabolic subgroup does not split");
  std::vector<int> d;
  for (int x : e) d.push_back(x + 1);
  return d;
}

inline ParabolicType parabolic_type(const ReflectionGroup& G, const LengthTable& L, Elem w) {
  (void)L;
  std::vector<Elem> refl;
  for (Elem t : G.reflections())
    if (G.fix_contained(w, t)) refl.push_back(t);
  // Components of the graph joining non-commuting reflections and reflections sharing a hyperplane.
  const std::size_t k = refl.size();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < k; ++b) {
        if (comp[b] >= 0) continue;
        if (G.mult(refl[a], refl[b]) != G.mult(refl[b], refl[a]) || G.fix_contained(refl[a], refl[b])) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> comp_degrees;
  std::vector<int> all;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < k; ++i)
      if (comp[i] == c) gens.push_back(refl[i]);
    auto d = subgroup_degrees(G, generated_subgroup(G, gens));
    all.insert(all.end(), d.begin(), d.end());
    comp_degrees.push_back(d);
  }
  std::map<std::string, int> counts;
  for (const auto& d : comp_degrees) counts[detail::irreducible_name(d)]++;
  ParabolicType out;
  if (counts.empty()) out.name = "1";
  for (const auto& [name, c] : counts) {
    if (!out.name.empty()) out.name += "*";
    out.name += name;
    if (c > 1) out.name += "^" + std::to_string(c);
  }
  std::sort(all.begin(), all.end());
  out.degrees = all;
  return out;
}

// Rank of a parabolic type name: sum of component ranks.
inline int type_rank(const std::string& name) {
  if (name == "1") return 0;
  int total = 0;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '*')) {
    int power = 1;
    if (auto p = part.rfind('^'); p != std::string::npos) {
      power = std::stoi(part.substr(p + 1));
      part = part.substr(0, p);
    }
    int r = 0;
    if (part.rfind("rank1(", 0) == 0) r = 1;
    else if (part.rfind("I2(", 0) == 0 || part == "G2") r = 2;
    else if (part.rfind("G(", 0) == 0) r = std::stoi(part.substr(part.rfind(',') + 1));
    else if (part.rfind("deg(", 0) == 0) r = 1 + static_cast<int>(std::count(part.begin(), part.end(), ','));
    else if (part.size() >= 2 && (part[0] == 'A' || part[0] == 'B' || part[0] == 'D' ||
                                  part[0] == 'E' || part[0] == 'F' || part[0] == 'H'))
      r = std::stoi(part.substr(1));
    else if (part[0] == 'G') {
      static const std::map<std::string, int> ranks{
          {"G4", 2},  {"G5", 2},  {"G6", 2},  {"G8", 2},  {"G9", 2},  {"G10", 2}, {"G14", 2},
          {"G16", 2}, {"G17", 2}, {"G18", 2}, {"G20", 2}, {"G21", 2}, {"G24", 3}, {"G25", 3},
          {"G26", 3}, {"G27", 3}, {"G29", 4}, {"G32", 4}, {"G33", 5}};
      auto it = ranks.find(part);
      if (it == ranks.end()) throw std::invalid_argument("unknown type name " + part);
      r = it->second;
    } else {
      throw std::invalid_argument("unknown type name " + part);
    }
    total += r * power;
  }
  return total;
}

}  // namespace ncsieve

#endif
