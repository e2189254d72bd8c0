#ifndef NCSIEVE_GROUP_HPP
#define NCSIEVE_GROUP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "catalog.hpp"
#include "linalg.hpp"

namespace ncsieve {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::uint64_t budget = 2'000'000;
  bool allow_large = false;
  std::uint64_t large_budget = 3'000'000;
  std::size_t max_roots = 65535;
  // Search tools build from arbitrary reflection sets.
  bool require_well_generated = true;
};

using Elem = std::uint32_t;

// A finite reflection group, enumerated as permutations of a root orbit.
// Elements act on the left; mult(u, v) is the map x -> u(v(x)).
class ReflectionGroup {
 public:
  static constexpr std::size_t kMaxRank = 8;
  using Key = std::array<std::uint16_t, kMaxRank>;

  const CatalogEntry& entry() const { return entry_; }
  int rank() const { return n_; }
  int conductor() const { return conductor_; }
  std::size_t size() const { return size_; }
  std::size_t root_count() const { return roots_.size(); }
  const std::vector<CVector>& roots() const { return roots_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<Elem>& reflections() const { return reflections_; }
  bool is_reflection(Elem w) const { return fix_dim_[w] == n_ - 1; }
  static constexpr Elem identity() { return 0; }

  const std::uint16_t* perm(Elem w) const { return perms_.data() + static_cast<std::size_t>(w) * R_; }

  Elem mult(Elem u, Elem v) const {
    Key k{};
    const std::uint16_t* pu = perm(u);
    const std::uint16_t* pv = perm(v);
    for (int j = 0; j < n_; ++j) k[j] = pu[pv[base_[j]]];
    return lookup(k);
  }

  Elem inverse(Elem w) const { return inv_[w]; }

  Elem power(Elem w, std::int64_t k) const {
    if (k < 0) {
      w = inverse(w);
      k = -k;
    }
    Elem result = identity();
    Elem b = w;
    while (k > 0) {
      if (k & 1) result = mult(result, b);
      b = mult(b, b);
      k >>= 1;
    }
    return result;
  }

  // c^e w c^-e
  Elem conjugate(Elem w, Elem c, std::int64_t e) const {
    Elem ce = power(c, e);
    return mult(mult(ce, w), inverse(ce));
  }

  int order(Elem w) const { return order_[w]; }
  int fix_dim(Elem w) const { return fix_dim_[w]; }

  // Matrix of w in the catalog coordinates: M_w = R_img B^{-1}.
  CMatrix matrix(Elem w) const {
    return mat_mul(image_columns(w), base_inv_);
  }

  // Direct linear algebra, independent of the cached table.
  int compute_fix_dim(Elem w) const { return eigenspace_dim(w, Cyclotomic(1)); }

  // dim ker(M_w - z I) = n - rank(R_img - z B).
  int eigenspace_dim(Elem w, const Cyclotomic& z) const {
    CMatrix img = image_columns(w);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) img[i][j] -= z * base_cols_[i][j];
    return n_ - static_cast<int>(ncsieve::rank(img));
  }

  // Whether Fix(u) is contained in Fix(v).
  bool fix_contained(Elem u, Elem v) const {
    CMatrix a = image_columns(u);
    CMatrix b = image_columns(v);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        a[i][j] -= base_cols_[i][j];
        b[i][j] -= base_cols_[i][j];
      }
    // Null space of (M_u - I)B; test each basis vector against (M_v - I)B.
    auto ker = nullspace(a, n_);
    for (const auto& y : ker) {
      auto z = mat_vec(b, y);
      for (const auto& x : z)
        if (!x.is_zero()) return false;
    }
    return true;
  }

  Elem find(const CMatrix& m) const {
    CMatrix M = embed_matrix(m, conductor_);
    Key k{};
    for (int j = 0; j < n_; ++j) {
      CVector col(n_);
      for (int i = 0; i < n_; ++i) col[i] = base_cols_[i][j];
      auto img = mat_vec(M, col);
      auto it = root_index_.find(vector_key(img));
      if (it == root_index_.end()) throw GroupError("matrix is not a group element");
      k[j] = static_cast<std::uint16_t>(it->second);
    }
    auto it = table_.find(k);
    if (it == table_.end()) throw GroupError("matrix is not a group element");
    return it->second;
  }

  friend ReflectionGroup build_group(const CatalogEntry& entry, const BuildOptions& opt);

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto x : k) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  Elem lookup(const Key& k) const {
    auto it = table_.find(k);
    if (it == table_.end()) throw GroupError("product left the group table");
    return it->second;
  }

  std::string vector_key(const CVector& v) const {
    std::string s;
    for (const auto& x : v) {
      s += x.embed(conductor_).key();
      s += '|';
    }
    return s;
  }

  CMatrix image_columns(Elem w) const {
    CMatrix img(n_, CVector(n_));
    const std::uint16_t* p = perm(w);
    for (int j = 0; j < n_; ++j) {
      const CVector& r = roots_[p[base_[j]]];
      for (int i = 0; i < n_; ++i) img[i][j] = r[i];
    }
    return img;
  }

  CatalogEntry entry_;
  int n_ = 0;
  int conductor_ = 1;
  std::size_t size_ = 0;
  std::size_t R_ = 0;
  std::vector<CVector> roots_;
  std::unordered_map<std::string, std::size_t> root_index_;
  std::vector<std::size_t> base_;
  CMatrix base_cols_;
  CMatrix base_inv_;
  std::vector<std::uint16_t> perms_;
  std::unordered_map<Key, Elem, KeyHash> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> gen_left_;
  std::vector<Elem> reflections_;
  std::vector<int> order_;
  std::vector<int> fix_dim_;
};

inline void check_budget(const CatalogEntry& entry, const BuildOptions& opt) {
  if (entry.gate == "never" || entry.generators.empty())
    throw BudgetError("group " + entry.name + " (order " + entry.order.get_str() +
                      ") is outside the enumeration scope and is always refused");
  if (entry.gate == "large" && !opt.allow_large)
    throw BudgetError("group " + entry.name + " (order " + entry.order.get_str() +
                      ") requires --allow-large");
  std::uint64_t budget = opt.allow_large ? std::max(opt.budget, opt.large_budget) : opt.budget;
  if (entry.order > Integer(std::to_string(budget)))
    throw BudgetError("group " + entry.name + " (order " + entry.order.get_str() +
                      ") exceeds the enumeration budget " + std::to_string(budget));
}

inline ReflectionGroup build_group(const CatalogEntry& entry, const BuildOptions& opt = {}) {
  if (opt.require_well_generated || entry.generators.size() == static_cast<std::size_t>(entry.rank))
    validate_entry(entry);
  check_budget(entry, opt);
  if (entry.rank > static_cast<int>(ReflectionGroup::kMaxRank))
    throw GroupError("rank above supported maximum");

  ReflectionGroup G;
  G.entry_ = entry;
  G.n_ = entry.rank;
  const int n = G.n_;
  int cond = entry.conductor;
  for (const auto& g : entry.generators) cond = std::lcm(cond, common_conductor(g));
  G.conductor_ = detail::canonical_conductor(cond);
  std::vector<CMatrix> gens;
  for (const auto& g : entry.generators) gens.push_back(embed_matrix(g, G.conductor_));

  // Generator roots: a nonzero column of (S - I), which has rank 1 for a reflection.
  for (std::size_t s = 0; s < gens.size(); ++s) {
    CMatrix d = gens[s];
    for (int i = 0; i < n; ++i) d[i][i] -= Cyclotomic(1);
    if (ncsieve::rank(d) != 1)
      throw GroupError("generator " + std::to_string(s + 1) + " of " + entry.name + " is not a reflection");
    CVector root;
    for (int j = 0; j < n && root.empty(); ++j) {
      bool nz = false;
      for (int i = 0; i < n; ++i) nz = nz || !d[i][j].is_zero();
      if (!nz) continue;
      for (int i = 0; i < n; ++i) root.push_back(d[i][j].embed(G.conductor_));
    }
    auto key = G.vector_key(root);
    if (G.root_index_.emplace(key, G.roots_.size()).second) G.roots_.push_back(root);
  }

  // Orbit of the generator roots.
  const std::size_t max_roots = std::min<std::size_t>(opt.max_roots, 65535);
  std::vector<std::vector<std::uint16_t>> gen_root_perm(gens.size());
  for (std::size_t r = 0; r < G.roots_.size(); ++r) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      CVector img = mat_vec(gens[s], G.roots_[r]);
      auto key = G.vector_key(img);
      auto [it, inserted] = G.root_index_.emplace(key, G.roots_.size());
      if (inserted) {
        G.roots_.push_back(img);
        if (G.roots_.size() > max_roots) throw GroupError("root orbit too large for " + entry.name);
      }
      gen_root_perm[s].resize(G.roots_.size());
      gen_root_perm[s][r] = static_cast<std::uint16_t>(it->second);
    }
  }
  G.R_ = G.roots_.size();
  for (auto& p : gen_root_perm) p.resize(G.R_);

  // Base: first n linearly independent roots.
  CMatrix rows;
  for (std::size_t r = 0; r < G.R_ && static_cast<int>(G.base_.size()) < n; ++r) {
    CMatrix trial = rows;
    trial.push_back(G.roots_[r]);
    if (static_cast<int>(ncsieve::rank(trial)) > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      G.base_.push_back(r);
    }
  }
  if (static_cast<int>(G.base_.size()) != n) throw GroupError("roots of " + entry.name + " do not span");
  G.base_cols_.assign(n, CVector(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) G.base_cols_[i][j] = G.roots_[G.base_[j]][i];
  G.base_inv_ = inverse_matrix(G.base_cols_);

  // Closure by left multiplication with generators.
  const std::uint64_t expected = entry.order.get_ui();
  const std::size_t R = G.R_;
  G.perms_.reserve(expected * R);
  std::vector<std::uint16_t> id(R);
  std::iota(id.begin(), id.end(), 0);
  auto key_of = [&](const std::uint16_t* p) {
    ReflectionGroup::Key k{};
    for (int j = 0; j < n; ++j) k[j] = p[G.base_[j]];
    return k;
  };
  G.perms_.insert(G.perms_.end(), id.begin(), id.end());
  G.table_.emplace(key_of(id.data()), 0);
  G.gen_left_.assign(gens.size(), {});
  std::vector<std::uint16_t> tmp(R);
  for (std::size_t w = 0; w < G.table_.size(); ++w) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::uint16_t* pw = G.perms_.data() + w * R;
      for (std::size_t r = 0; r < R; ++r) tmp[r] = gen_root_perm[s][pw[r]];
      auto k = key_of(tmp.data());
      auto [it, inserted] = G.table_.emplace(k, static_cast<Elem>(G.table_.size()));
      if (inserted) {
        if (G.table_.size() > expected)
          throw GroupError("closure of " + entry.name + " exceeds the expected order " +
                           entry.order.get_str() + " (bad generators)");
        G.perms_.insert(G.perms_.end(), tmp.begin(), tmp.end());
      }
      G.gen_left_[s].push_back(it->second);
    }
  }
  G.size_ = G.table_.size();
  if (G.size_ != expected)
    throw GroupError("closure of " + entry.name + " has order " + std::to_string(G.size_) +
                     ", expected " + entry.order.get_str());
  for (std::size_t s = 0; s < gens.size(); ++s) G.gens_.push_back(G.gen_left_[s][0]);

  // Inverses and orders from the root permutations.
  G.inv_.resize(G.size_);
  G.order_.resize(G.size_);
  std::vector<std::uint16_t> invp(R);
  std::vector<char> seen(R);
  for (std::size_t w = 0; w < G.size_; ++w) {
    const std::uint16_t* p = G.perm(static_cast<Elem>(w));
    for (std::size_t r = 0; r < R; ++r) invp[p[r]] = static_cast<std::uint16_t>(r);
    G.inv_[w] = G.lookup(key_of(invp.data()));
    std::fill(seen.begin(), seen.end(), 0);
    std::int64_t ord = 1;
    for (std::size_t r = 0; r < R; ++r) {
      if (seen[r]) continue;
      std::int64_t len = 0;
      for (std::size_t x = r; !seen[x]; x = p[x]) {
        seen[x] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    G.order_[w] = static_cast<int>(ord);
  }

  // Fixed-space dimension is a class function: one elimination per conjugacy class.
  std::vector<Elem> parent(G.size_);
  std::iota(parent.begin(), parent.end(), 0);
  auto findp = [&](Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t w = 0; w < G.size_; ++w) {
    for (Elem s : G.gens_) {
      Elem c = G.mult(G.mult(s, static_cast<Elem>(w)), G.inverse(s));
      Elem a = findp(static_cast<Elem>(w)), b = findp(c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::unordered_map<Elem, int> class_dim;
  G.fix_dim_.resize(G.size_);
  for (std::size_t w = 0; w < G.size_; ++w) {
    Elem root = findp(static_cast<Elem>(w));
    auto it = class_dim.find(root);
    if (it == class_dim.end()) it = class_dim.emplace(root, G.compute_fix_dim(root)).first;
    G.fix_dim_[w] = it->second;
  }
  for (std::size_t w = 0; w < G.size_; ++w)
    if (G.fix_dim_[w] == n - 1) G.reflections_.push_back(static_cast<Elem>(w));
  if (Integer(std::to_string(G.reflections_.size())) != entry.reflections)
    throw GroupError("group " + entry.name + " has " + std::to_string(G.reflections_.size()) +
                     " reflections, expected " + entry.reflections.get_str());
  return G;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GroupReport {
  std::string group;
  std::vector<CheckResult> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

// Coefficients of sum_w t^{dim Fix(w)}, index = power of t.
inline std::vector<Integer> fixed_space_polynomial(const ReflectionGroup& G) {
  std::vector<Integer> out(G.rank() + 1, 0);
  for (std::size_t w = 0; w < G.size(); ++w) out[G.fix_dim(static_cast<Elem>(w))] += 1;
  return out;
}

// Coefficients of prod_i (t + d_i - 1).
inline std::vector<Integer> degree_polynomial(const std::vector<int>& degrees) {
  std::vector<Integer> poly{1};
  for (int d : degrees) {
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * (d - 1);
    }
    poly = std::move(next);
  }
  return poly;
}

inline GroupReport verify_group_invariants(const ReflectionGroup& G) {
  GroupReport rep;
  rep.group = G.entry().name;
  const auto& e = G.entry();
  Integer order = G.size();
  rep.checks.push_back({"order equals product of degrees", order == degree_product(e.degrees),
                        order.get_str() + " vs " + degree_product(e.degrees).get_str()});
  Integer refl = 0;
  for (int d : e.degrees) refl += d - 1;
  Integer have = static_cast<unsigned long>(G.reflections().size());
  rep.checks.push_back({"reflection count equals sum of (d_i - 1)", have == refl,
                        have.get_str() + " vs " + refl.get_str()});
  auto lhs = fixed_space_polynomial(G);
  auto rhs = degree_polynomial(e.degrees);
  std::string detail;
  for (std::size_t i = lhs.size(); i-- > 0;) detail += lhs[i].get_str() + (i ? "," : "");
  rep.checks.push_back({"fixed-space polynomial equals prod (t + d_i - 1)", lhs == rhs, detail});
  bool refl_ok = true;
  for (Elem t : G.reflections()) refl_ok = refl_ok && G.order(t) >= 2;
  rep.checks.push_back({"reflections have finite order >= 2", refl_ok, ""});
  return rep;
}

}  // namespace ncsieve

#endif
