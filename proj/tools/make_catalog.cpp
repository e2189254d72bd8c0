// Regenerates catalog/*.json. Real groups come from Cartan matrices; the
// complex groups are found by searching Cartan-type parameters and keeping
// the first candidate whose closure matches the expected order, reflection
// count and fixed-space polynomial.
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include <ncsieve/group.hpp>

using namespace ncsieve;

namespace {

Cyclotomic z(int n, int k) { return Cyclotomic::root_of_unity(n, k); }

// s_i(e_j) = e_j - C_ij e_i; column j of S_i is the image of e_j.
std::vector<CMatrix> cartan_generators(const CMatrix& C) {
  const std::size_t n = C.size();
  std::vector<CMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix S = identity_matrix<Cyclotomic>(n);
    for (std::size_t j = 0; j < n; ++j) S[i][j] -= C[i][j];
    gens.push_back(S);
  }
  return gens;
}

CMatrix zero_matrix(std::size_t n) { return CMatrix(n, CVector(n, Cyclotomic(0))); }

int lcm_all(const std::vector<CMatrix>& gens) {
  int l = 1;
  for (const auto& g : gens) l = std::lcm(l, common_conductor(g));
  return detail::canonical_conductor(l);
}

CatalogEntry make_entry(const std::string& name, std::vector<int> degrees,
                        std::vector<CMatrix> gens, std::vector<std::string> aliases = {},
                        std::string gate = "none") {
  CatalogEntry e;
  e.name = name;
  e.aliases = std::move(aliases);
  e.rank = static_cast<int>(degrees.size());
  std::sort(degrees.begin(), degrees.end());
  e.degrees = degrees;
  for (int d : degrees) e.codegrees.push_back(degrees.back() - d);
  e.order = degree_product(degrees);
  e.reflections = 0;
  for (int d : degrees) e.reflections += d - 1;
  e.generators = std::move(gens);
  e.conductor = e.generators.empty() ? 1 : lcm_all(e.generators);
  e.gate = std::move(gate);
  return e;
}

// Simply laced and crystallographic edges: (i, j, C_ij, C_ji).
struct Edge {
  int i, j;
  Cyclotomic cij, cji;
};

CMatrix real_cartan(int n, const std::vector<Edge>& edges) {
  CMatrix C = zero_matrix(n);
  for (int i = 0; i < n; ++i) C[i][i] = Cyclotomic(2);
  for (const auto& e : edges) {
    C[e.i][e.j] = e.cij;
    C[e.j][e.i] = e.cji;
  }
  return C;
}

Edge simple(int i, int j) { return {i, j, Cyclotomic(-1), Cyclotomic(-1)}; }
Edge labelled(int i, int j, int m) {
  // C_ij C_ji = 4 cos^2(pi/m) = 2 + zeta_m + zeta_m^{-1}
  return {i, j, Cyclotomic(-1), -(Cyclotomic(2) + z(m, 1) + z(m, -1))};
}

std::vector<CatalogEntry> real_entries() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(simple(i, i + 1));
    std::vector<int> deg;
    for (int i = 2; i <= n + 1; ++i) deg.push_back(i);
    std::vector<std::string> al;
    if (n == 2) al = {"I2(3)"};
    out.push_back(make_entry("A" + std::to_string(n), deg, cartan_generators(real_cartan(n, e)), al));
  }
  for (int n = 2; n <= 4; ++n) {
    std::vector<Edge> e;
    for (int i = 0; i + 2 < n; ++i) e.push_back(simple(i, i + 1));
    e.push_back({n - 2, n - 1, Cyclotomic(-2), Cyclotomic(-1)});
    std::vector<int> deg;
    for (int i = 1; i <= n; ++i) deg.push_back(2 * i);
    std::vector<std::string> al;
    if (n == 2) al = {"I2(4)"};
    out.push_back(make_entry("B" + std::to_string(n), deg, cartan_generators(real_cartan(n, e)), al));
  }
  out.push_back(make_entry("D4", {2, 4, 4, 6},
                           cartan_generators(real_cartan(4, {simple(0, 1), simple(1, 2), simple(1, 3)}))));
  for (int m = 5; m <= 12; ++m) {
    CMatrix C = m == 6 ? real_cartan(2, {{0, 1, Cyclotomic(-1), Cyclotomic(-3)}}) : real_cartan(2, {labelled(0, 1, m)});
    std::vector<std::string> al;
    if (m == 6) al = {"G2"};
    out.push_back(make_entry("I2(" + std::to_string(m) + ")", {2, m}, cartan_generators(C), al));
  }
  out.push_back(make_entry("H3", {2, 6, 10},
                           cartan_generators(real_cartan(3, {labelled(0, 1, 5), simple(1, 2)})), {"G23"}));
  out.push_back(make_entry("H4", {2, 12, 20, 30},
                           cartan_generators(real_cartan(4, {labelled(0, 1, 5), simple(1, 2), simple(2, 3)})),
                           {"G30"}));
  out.push_back(make_entry("F4", {2, 6, 8, 12},
                           cartan_generators(real_cartan(
                               4, {simple(0, 1), {1, 2, Cyclotomic(-2), Cyclotomic(-1)}, simple(2, 3)})),
                           {"G28"}));
  // Bourbaki labelling: 1-3-4-5-6(-7(-8)), 2-4.
  auto e_edges = [](int n) {
    std::vector<Edge> e{simple(0, 2), simple(1, 3), simple(2, 3)};
    for (int i = 3; i + 1 < n; ++i) e.push_back(simple(i, i + 1));
    return e;
  };
  out.push_back(make_entry("E6", {2, 5, 6, 8, 9, 12}, cartan_generators(real_cartan(6, e_edges(6))), {"G35"}));
  out.push_back(make_entry("E7", {2, 6, 8, 10, 12, 14, 18}, cartan_generators(real_cartan(7, e_edges(7))),
                           {"G36"}, "large"));
  out.push_back(make_entry("E8", {2, 8, 12, 14, 18, 20, 24, 30}, cartan_generators(real_cartan(8, e_edges(8))),
                           {"G37"}, "never"));
  return out;
}

bool accept(const CatalogEntry& e, bool verbose) {
  try {
    BuildOptions opt;
    opt.max_roots = 4096;
    opt.allow_large = true;
    ReflectionGroup G = build_group(e, opt);
    auto rep = verify_group_invariants(G);
    if (verbose && !rep.pass()) std::cerr << "  invariants failed for " << e.name << "\n";
    return rep.pass();
  } catch (const std::exception& ex) {
    if (verbose) std::cerr << "  rejected: " << ex.what() << "\n";
    return false;
  }
}

// Rank-2 group p[k]q: C = [[1 - a, -1], [-lam, 1 - b]] with reflection eigenvalues a, b.
// trace(s1 s2) = a + b + lam must match the Coxeter eigenvalues.
struct Rank2Choice {
  int u, v;
  Cyclotomic lam;
};

std::vector<Rank2Choice> rank2_candidates(int p, int q, int d1, int d2) {
  const int h = std::max(d1, d2);
  std::vector<Rank2Choice> out;
  std::set<std::string> seen;
  for (int u = 1; u < p; ++u) {
    if (std::gcd(u, p) != 1) continue;
    for (int v = 1; v < q; ++v) {
      if (std::gcd(v, q) != 1) continue;
      for (int k = 1; k < h; ++k) {
        if (std::gcd(k, h) != 1) continue;
        Cyclotomic e1 = z(h, k * (d1 - 1)), e2 = z(h, k * (d2 - 1));
        Cyclotomic a = z(p, u), b = z(q, v);
        if (e1 * e2 != a * b) continue;
        Cyclotomic lam = e1 + e2 - a - b;
        int L = std::lcm(std::lcm(p, q), h);
        std::string key = std::to_string(u) + "/" + std::to_string(v) + "/" + lam.embed(L).key();
        if (seen.insert(key).second) out.push_back({u, v, lam});
      }
    }
  }
  return out;
}

std::vector<CMatrix> rank2_generators(int p, int q, const Rank2Choice& c) {
  CMatrix C = zero_matrix(2);
  C[0][0] = Cyclotomic(1) - z(p, c.u);
  C[1][1] = Cyclotomic(1) - z(q, c.v);
  C[0][1] = Cyclotomic(-1);
  C[1][0] = -c.lam;
  return cartan_generators(C);
}

std::optional<CatalogEntry> search_rank2(const std::string& name, int p, int q, int d1, int d2) {
  for (const auto& c : rank2_candidates(p, q, d1, d2)) {
    CatalogEntry e = make_entry(name, {d1, d2}, rank2_generators(p, q, c));
    if (accept(e, false)) return e;
  }
  return std::nullopt;
}

// Linear diagrams of Shephard groups; each edge is a rank-2 group p[k]q.
struct ChainEdge {
  int d1, d2;  // degrees of the rank-2 subgroup spanned by the two nodes
};

std::optional<CatalogEntry> search_chain(const std::string& name, const std::vector<int>& orders,
                                         const std::vector<ChainEdge>& edges,
                                         const std::vector<int>& degrees) {
  const int n = static_cast<int>(orders.size());
  // Node eigenvalue exponents: try the same unit pattern for equal orders.
  std::vector<std::vector<Rank2Choice>> cands;
  for (int i = 0; i + 1 < n; ++i) cands.push_back(rank2_candidates(orders[i], orders[i + 1], edges[i].d1, edges[i].d2));
  std::vector<std::size_t> idx(n - 1, 0);
  while (true) {
    bool consistent = true;
    for (int i = 0; i + 2 < n && consistent; ++i)
      consistent = cands[i][idx[i]].v == cands[i + 1][idx[i + 1]].u;
    if (consistent) {
      CMatrix C = zero_matrix(n);
      for (int i = 0; i + 1 < n; ++i) {
        const auto& c = cands[i][idx[i]];
        C[i][i] = Cyclotomic(1) - z(orders[i], c.u);
        C[i + 1][i + 1] = Cyclotomic(1) - z(orders[i + 1], c.v);
        C[i][i + 1] = Cyclotomic(-1);
        C[i + 1][i] = -c.lam;
      }
      CatalogEntry e = make_entry(name, degrees, cartan_generators(C));
      if (accept(e, false)) return e;
    }
    int k = 0;
    while (k < n - 1 && ++idx[k] == cands[k].size()) idx[k++] = 0;
    if (k == n - 1) break;
  }
  return std::nullopt;
}

// Integer vectors in Q(zeta_N) with |x|^2 = target (numerically), coefficients in [-r, r].
std::vector<Cyclotomic> small_elements(int N, double target, int r) {
  const int phi = detail::euler_phi(N);
  std::vector<Cyclotomic> out;
  std::vector<int> c(phi, -r);
  const double two_pi = 6.283185307179586;
  while (true) {
    std::complex<double> v = 0;
    for (int j = 0; j < phi; ++j) v += double(c[j]) * std::polar(1.0, two_pi * j / N);
    if (std::abs(std::norm(v) - target) < 1e-9) {
      std::vector<Rational> q(c.begin(), c.end());
      out.push_back(Cyclotomic::from_coeffs(N, q));
    }
    int k = 0;
    while (k < phi && ++c[k] > r) c[k++] = -r;
    if (k == phi) break;
  }
  return out;
}

bool accept_fast(const CatalogEntry& e, int field) {
  try {
    BuildOptions opt;
    std::size_t units = field % 2 == 0 ? field : 2 * field;
    opt.max_roots = e.reflections.get_ui() * units;
    ReflectionGroup G = build_group(e, opt);
    return verify_group_invariants(G).pass();
  } catch (const std::exception&) {
    return false;
  }
}

// Diagrams of involutions. Each pair (i, j) carries a choice of m (2 = commuting);
// a spanning tree is normalised to C_parent,child = -1 and every extra edge gets a
// free entry x whose modulus is forced by the hermitian cycle condition.
struct PairOpt {
  int i, j;
  std::vector<int> ms;
};

std::optional<CatalogEntry> search_involution_graph(const std::string& name, int n, int N,
                                                    const std::vector<PairOpt>& pairs,
                                                    const std::vector<int>& degrees, int radius) {
  auto lam = [](int m) { return Cyclotomic(2) + z(m, 1) + z(m, -1); };
  std::vector<std::size_t> choice(pairs.size(), 0);
  std::size_t tried = 0;
  while (true) {
    std::vector<std::vector<int>> mm(n, std::vector<int>(n, 2));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      int m = pairs[k].ms[choice[k]];
      mm[pairs[k].i][pairs[k].j] = mm[pairs[k].j][pairs[k].i] = m;
    }
    std::vector<int> parent(n, -1), depth(n, -1);
    std::vector<int> queue{0};
    depth[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int v = 0; v < n; ++v)
        if (mm[queue[q]][v] > 2 && depth[v] < 0) {
          depth[v] = depth[queue[q]] + 1;
          parent[v] = queue[q];
          queue.push_back(v);
        }
    if (static_cast<int>(queue.size()) == n) {
      CMatrix C = zero_matrix(n);
      for (int i = 0; i < n; ++i) C[i][i] = Cyclotomic(2);
      for (int v = 1; v < n; ++v) {
        C[parent[v]][v] = Cyclotomic(-1);
        C[v][parent[v]] = -lam(mm[v][parent[v]]);
      }
      std::vector<std::pair<int, int>> extra;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (mm[i][j] > 2 && parent[j] != i && parent[i] != j) extra.push_back({i, j});
      std::vector<std::vector<Cyclotomic>> options;
      bool feasible = true;
      for (auto [i, j] : extra) {
        // Tree path i -> j through the lowest common ancestor.
        std::vector<int> up_i{i}, up_j{j};
        while (up_i.back() != up_j.back()) {
          if (depth[up_i.back()] >= depth[up_j.back()])
            up_i.push_back(parent[up_i.back()]);
          else
            up_j.push_back(parent[up_j.back()]);
        }
        std::vector<int> path = up_i;
        for (std::size_t k = up_j.size() - 1; k-- > 0;) path.push_back(up_j[k]);
        std::complex<double> F = 1, B = 1;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          auto f = C[path[k]][path[k + 1]].approx();
          auto b = C[path[k + 1]][path[k]].approx();
          F *= std::complex<double>(f.first, f.second);
          B *= std::complex<double>(b.first, b.second);
        }
        double l = lam(mm[i][j]).approx().first;
        std::complex<double> t = l * F / std::conj(B);
        if (std::abs(t.imag()) > 1e-9 || t.real() <= 0) {
          feasible = false;
          break;
        }
        options.push_back(small_elements(N, t.real(), radius));
        for (auto& x : small_elements(N, 4 * t.real(), radius)) options.back().push_back(x / Cyclotomic(2));
        if (options.back().empty()) feasible = false;
      }
      if (feasible) {
        std::vector<std::size_t> idx(extra.size(), 0);
        while (true) {
          CMatrix D = C;
          for (std::size_t k = 0; k < extra.size(); ++k) {
            auto [i, j] = extra[k];
            const auto& x = options[k][idx[k]];
            D[i][j] = -x;
            D[j][i] = -(lam(mm[i][j]) / x);
          }
          ++tried;
          CatalogEntry cand = make_entry(name, degrees, cartan_generators(D));
          if (accept_fast(cand, N)) {
            std::cerr << "  " << name << ": found after " << tried << " candidates\n";
            return cand;
          }
          std::size_t k = 0;
          while (k < extra.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
          if (k == extra.size()) break;
        }
      }
    }
    std::size_t k = 0;
    while (k < pairs.size() && ++choice[k] == pairs[k].ms.size()) choice[k++] = 0;
    if (k == pairs.size()) break;
  }
  std::cerr << "  " << name << ": no candidate among " << tried << "\n";
  return std::nullopt;
}

std::vector<PairOpt> all_pairs(int n, std::vector<int> ms) {
  std::vector<PairOpt> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j, ms});
  return out;
}

// Orthogonal reflection of order 2 in the root v: x - 2 <x, v> / <v, v> v.
CMatrix root_reflection(const CVector& v) {
  const std::size_t n = v.size();
  Cyclotomic norm(0);
  for (const auto& x : v) norm += x * x.conj();
  CMatrix S = identity_matrix<Cyclotomic>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S[i][j] -= Cyclotomic(2) * v[i] * v[j].conj() / norm;
  return S;
}

// Builds the group generated by the given reflections, then picks rank many
// reflections that generate it and whose product is regular of order h.
std::optional<CatalogEntry> from_reflections(const std::string& name, const std::vector<CMatrix>& gens,
                                             const std::vector<int>& degrees, std::uint64_t seed) {
  CatalogEntry raw = make_entry(name, degrees, gens);
  BuildOptions opt;
  opt.require_well_generated = false;
  ReflectionGroup G;
  try {
    G = build_group(raw, opt);
  } catch (const std::exception& ex) {
    std::cerr << "  " << name << ": " << ex.what() << "\n";
    return std::nullopt;
  }
  const int n = G.rank();
  const int h = degrees.back();
  const auto& T = G.reflections();
  std::uint64_t state = seed;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::size_t>(state >> 33);
  };
  for (int attempt = 0; attempt < 200000; ++attempt) {
    std::vector<Elem> pick;
    for (int i = 0; i < n; ++i) pick.push_back(T[next() % T.size()]);
    Elem c = ReflectionGroup::identity();
    for (Elem t : pick) c = G.mult(c, t);
    if (G.order(c) != h || G.fix_dim(c) != 0) continue;
    std::vector<char> seen(G.size(), 0);
    std::vector<Elem> queue{ReflectionGroup::identity()};
    seen[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (Elem t : pick) {
        Elem w = G.mult(t, queue[q]);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    if (queue.size() != G.size()) continue;
    std::vector<CMatrix> chosen;
    for (Elem t : pick) chosen.push_back(G.matrix(t));
    CatalogEntry e = make_entry(name, degrees, chosen);
    if (accept(e, true)) {
      std::cerr << "  " << name << ": generators found after " << attempt + 1 << " draws\n";
      return e;
    }
  }
  return std::nullopt;
}

std::vector<CMatrix> g_mmn_generators(int m, int n) {
  std::vector<CMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    CVector v(n, Cyclotomic(0));
    v[i] = Cyclotomic(1);
    v[i + 1] = Cyclotomic(-1);
    gens.push_back(root_reflection(v));
  }
  CVector v(n, Cyclotomic(0));
  v[0] = Cyclotomic(1);
  v[1] = -z(m, 1);
  gens.push_back(root_reflection(v));
  return gens;
}

// Restricts a 6-dimensional matrix preserving sum(x) = 0 to the basis e_k - e_{k+1}.
CMatrix restrict_to_sum_zero(const CMatrix& M) {
  const std::size_t n = 6, r = 5;
  CMatrix B(n, CVector(r, Cyclotomic(0)));
  for (std::size_t k = 0; k < r; ++k) {
    B[k][k] = Cyclotomic(1);
    B[k + 1][k] = Cyclotomic(-1);
  }
  CMatrix img = mat_mul(M, B);
  CMatrix top(r, CVector(r)), img_top(r, CVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      top[i][j] = B[i][j];
      img_top[i][j] = img[i][j];
    }
  return mat_mul(inverse_matrix(top), img_top);
}

void write(const CatalogEntry& e, const std::string& dir) {
  std::ofstream out(dir + "/" + catalog_file_stem(e.name) + ".json");
  out << entry_to_json(e).dump(1) << "\n";
  std::cerr << "wrote " << e.name << " (order " << e.order << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "catalog";
  std::set<std::string> only;
  for (int i = 2; i < argc; ++i) only.insert(argv[i]);
  auto wanted = [&](const std::string& n) { return only.empty() || only.count(n); };
  int failures = 0;

  for (const auto& e : real_entries()) {
    if (!wanted(e.name)) continue;
    if (e.gate == "none" && !accept(e, true)) {
      std::cerr << "FAILED " << e.name << "\n";
      ++failures;
      continue;
    }
    write(e, dir);
  }

  struct R2 {
    const char* name;
    int p, q, d1, d2;
  };
  const R2 rank2[] = {{"G4", 3, 3, 4, 6},   {"G5", 3, 3, 6, 12},   {"G6", 2, 3, 4, 12},
                      {"G8", 4, 4, 8, 12},  {"G9", 2, 4, 8, 24},   {"G10", 3, 4, 12, 24},
                      {"G14", 2, 3, 6, 24}, {"G16", 5, 5, 20, 30}, {"G17", 2, 5, 20, 60},
                      {"G18", 3, 5, 30, 60}, {"G20", 3, 3, 12, 30}, {"G21", 2, 3, 12, 60}};
  for (const auto& r : rank2) {
    if (!wanted(r.name)) continue;
    auto e = search_rank2(r.name, r.p, r.q, r.d1, r.d2);
    if (!e) {
      std::cerr << "FAILED " << r.name << "\n";
      ++failures;
      continue;
    }
    write(*e, dir);
  }

  if (wanted("G25")) {
    auto e = search_chain("G25", {3, 3, 3}, {{4, 6}, {4, 6}}, {6, 9, 12});
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G25\n");
  }
  if (wanted("G26")) {
    auto e = search_chain("G26", {2, 3, 3}, {{3, 6}, {4, 6}}, {6, 12, 18});
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G26\n");
  }
  if (wanted("G32")) {
    auto e = search_chain("G32", {3, 3, 3, 3}, {{4, 6}, {4, 6}, {4, 6}}, {12, 18, 24, 30});
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G32\n");
  }
  if (wanted("G24")) {
    auto e = search_involution_graph("G24", 3, 7, all_pairs(3, {2, 3, 4}), {4, 6, 14}, 1);
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G24\n");
  }
  if (wanted("G27")) {
    auto e = search_involution_graph("G27", 3, 15, all_pairs(3, {2, 3, 4, 5}), {6, 12, 30}, 1);
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G27\n");
  }
  if (wanted("G29")) {
    auto gens = g_mmn_generators(4, 4);
    gens.push_back(root_reflection({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}));
    auto e = from_reflections("G29", gens, {4, 8, 12, 20}, 29);
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G29\n");
  }
  if (wanted("G33")) {
    std::vector<CMatrix> gens;
    for (int i = 0; i < 5; ++i) {
      CVector v(6, Cyclotomic(0));
      v[i] = Cyclotomic(1);
      v[i + 1] = Cyclotomic(-1);
      gens.push_back(restrict_to_sum_zero(root_reflection(v)));
    }
    CVector w{Cyclotomic(1), Cyclotomic(1), z(3, 1), z(3, 1), z(3, 2), z(3, 2)};
    gens.push_back(restrict_to_sum_zero(root_reflection(w)));
    auto e = from_reflections("G33", gens, {4, 6, 10, 12, 18}, 33);
    if (e) e->gate = "large";
    e ? write(*e, dir) : (void)(++failures, std::cerr << "FAILED G33\n");
  }
  if (wanted("G34")) write(make_entry("G34", {6, 12, 18, 24, 30, 42}, {}, {}, "never"), dir);
  return failures == 0 ? 0 : 1;
}
