#ifndef NCSIEVE_CATALOG_HPP
#define NCSIEVE_CATALOG_HPP

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo.hpp"
#include "linalg.hpp"

#ifndef NCSIEVE_CATALOG_DIR
#define NCSIEVE_CATALOG_DIR "catalog"
#endif

namespace ncsieve {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "none": always buildable within budget; "large": needs allow_large; "never": refused.
struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  int rank = 0;
  int conductor = 1;
  std::vector<CMatrix> generators;
  std::vector<int> degrees;
  std::vector<int> codegrees;
  Integer order;
  Integer reflections;
  std::string gate = "none";

  int coxeter_number() const { return degrees.back(); }
  // Irreducible, so real iff there is an invariant quadratic form.
  bool is_real() const { return std::find(degrees.begin(), degrees.end(), 2) != degrees.end(); }
};

inline Integer degree_product(const std::vector<int>& degrees) {
  Integer p = 1;
  for (int d : degrees) p *= d;
  return p;
}

// Throws CatalogError naming the first failing invariant.
inline void validate_entry(const CatalogEntry& e) {
  auto fail = [&](const std::string& what) {
    throw CatalogError("catalog entry " + e.name + ": " + what);
  };
  if (e.rank < 1) fail("rank must be positive");
  if (static_cast<int>(e.degrees.size()) != e.rank) fail("degree count differs from rank");
  if (static_cast<int>(e.codegrees.size()) != e.rank) fail("codegree count differs from rank");
  for (std::size_t i = 1; i < e.degrees.size(); ++i)
    if (e.degrees[i] < e.degrees[i - 1]) fail("degrees not sorted ascending");
  for (std::size_t i = 1; i < e.codegrees.size(); ++i)
    if (e.codegrees[i] > e.codegrees[i - 1]) fail("codegrees not sorted descending");
  if (degree_product(e.degrees) != e.order) fail("product of degrees differs from order");
  Integer refl = 0;
  for (int d : e.degrees) refl += d - 1;
  if (refl != e.reflections) fail("sum of (degree - 1) differs from reflection count");
  for (int i = 0; i < e.rank; ++i)
    if (e.degrees[i] + e.codegrees[i] != e.degrees.back()) fail("duality d_i + d_i* = h fails");
  if (e.gate != "none" && e.gate != "large" && e.gate != "never") fail("unknown gate " + e.gate);
  if (e.generators.empty() && e.gate != "never") fail("no generators for a buildable entry");
  if (!e.generators.empty() && static_cast<int>(e.generators.size()) != e.rank)
    fail("well-generated entry needs exactly rank generators");
  for (const auto& g : e.generators) {
    if (static_cast<int>(g.size()) != e.rank) fail("generator has wrong row count");
    for (const auto& row : g)
      if (static_cast<int>(row.size()) != e.rank) fail("generator has wrong column count");
  }
}

namespace detail {

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw CatalogError("bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

inline nlohmann::json cyclotomic_to_json(const Cyclotomic& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  int n = j.at("conductor").get<int>();
  if (n < 1) throw CatalogError("conductor must be positive");
  return Cyclotomic::from_coeffs(n, coeffs);
}

}  // namespace detail

inline nlohmann::json entry_to_json(const CatalogEntry& e) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : e.generators) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : g) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(detail::cyclotomic_to_json(x.embed(e.conductor)));
      rows.push_back(r);
    }
    gens.push_back(rows);
  }
  return {{"name", e.name},
          {"aliases", e.aliases},
          {"rank", e.rank},
          {"conductor", e.conductor},
          {"generators", gens},
          {"degrees", e.degrees},
          {"codegrees", e.codegrees},
          {"order", e.order.get_str()},
          {"reflections", e.reflections.get_str()},
          {"gate", e.gate}};
}

inline CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  try {
    e.name = j.at("name").get<std::string>();
    if (j.contains("aliases")) e.aliases = j.at("aliases").get<std::vector<std::string>>();
    e.rank = j.at("rank").get<int>();
    e.conductor = j.at("conductor").get<int>();
    for (const auto& g : j.at("generators")) {
      CMatrix m;
      for (const auto& row : g) {
        CVector r;
        for (const auto& x : row) r.push_back(detail::cyclotomic_from_json(x).embed(e.conductor));
        m.push_back(std::move(r));
      }
      e.generators.push_back(std::move(m));
    }
    e.degrees = j.at("degrees").get<std::vector<int>>();
    e.codegrees = j.at("codegrees").get<std::vector<int>>();
    e.order = Integer(j.at("order").get<std::string>());
    e.reflections = Integer(j.at("reflections").get<std::string>());
    if (j.contains("gate")) e.gate = j.at("gate").get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw CatalogError(std::string("malformed catalog document: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw CatalogError(std::string("malformed catalog number: ") + ex.what());
  }
  validate_entry(e);
  return e;
}

inline CatalogEntry load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw CatalogError("cannot parse " + path.string() + ": " + ex.what());
  }
  return entry_from_json(j);
}

inline std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("NCSIEVE_CATALOG"); env && *env) return env;
  return NCSIEVE_CATALOG_DIR;
}

// All entries of a catalog directory, keyed by canonical name.
inline std::map<std::string, CatalogEntry> load_catalog_dir(const std::filesystem::path& dir) {
  std::map<std::string, CatalogEntry> out;
  if (!std::filesystem::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    CatalogEntry e = load_catalog_file(f);
    out.emplace(e.name, std::move(e));
  }
  return out;
}

inline std::string catalog_file_stem(const std::string& name) {
  std::string s;
  for (char ch : name) s += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
  return s;
}

inline CatalogEntry load_catalog(const std::string& name,
                                 const std::filesystem::path& dir = catalog_dir()) {
  auto direct = dir / (catalog_file_stem(name) + ".json");
  if (std::filesystem::exists(direct)) {
    CatalogEntry e = load_catalog_file(direct);
    if (e.name == name) return e;
  }
  for (auto& [n, e] : load_catalog_dir(dir)) {
    if (n == name) return e;
    for (const auto& a : e.aliases)
      if (a == name) return e;
  }
  throw CatalogError("unknown catalog entry: " + name);
}

}  // namespace ncsieve

#endif
